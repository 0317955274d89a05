#include "cliffork/matrix.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace cliffork {

Matrix::Matrix(std::size_t dim, std::vector<Gaussian> entries) : dim_(dim), a_(std::move(entries)) {
    if (a_.size() != dim_ * dim_) throw std::invalid_argument("matrix entry count does not match dimension");
}

Matrix Matrix::identity(std::size_t dim) { return scalar(dim, Gaussian(1)); }

Matrix Matrix::scalar(std::size_t dim, const Gaussian& c) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = c;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Gaussian>>& rows) {
    Matrix m(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) throw std::invalid_argument("matrix must be square");
        for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::operator-() const {
    Matrix m(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
    return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Gaussian& c) {
    for (auto& x : a_) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t d = a.dim_;
    Matrix r(d);
    // Spinbasis products are monomial matrices, so skipping zeros makes this
    // effectively O(d^2).
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const Gaussian& x = a.a_[i * d + k];
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                const Gaussian& y = b.a_[k * d + j];
                if (y.is_zero()) continue;
                r.a_[i * d + j] += x * y;
            }
        }
    }
    return r;
}

Matrix Matrix::transpose() const {
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = 0; c < dim_; ++c) m(c, r) = (*this)(r, c);
    return m;
}

Matrix Matrix::conj() const {
    Matrix m(dim_);
    for (std::size_t k = 0; k < a_.size(); ++k) m.a_[k] = a_[k].conj();
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_real() const {
    for (const auto& x : a_)
        if (!x.is_real()) return false;
    return true;
}

bool Matrix::is_symmetric() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r + 1; c < dim_; ++c)
            if (!((*this)(r, c) == (*this)(c, r))) return false;
    return true;
}

bool Matrix::is_skew_symmetric() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t c = r; c < dim_; ++c)
            if (!((*this)(r, c) == -(*this)(c, r))) return false;
    return true;
}

std::optional<Gaussian> Matrix::scalar_value() const {
    if (dim_ == 0) return std::nullopt;
    const Gaussian c = a_[0];
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t k = 0; k < dim_; ++k) {
            const Gaussian& x = (*this)(r, k);
            if (r == k ? !(x == c) : !x.is_zero()) return std::nullopt;
        }
    return c;
}

int Matrix::sign_of_identity() const {
    const auto s = scalar_value();
    if (!s) return 0;
    if (*s == Gaussian(1)) return 1;
    if (*s == Gaussian(-1)) return -1;
    return 0;
}

int Matrix::compare_up_to_sign(const Matrix& o) const {
    if (dim_ != o.dim_) return 0;
    bool plus = true;
    bool minus = true;
    for (std::size_t k = 0; k < a_.size() && (plus || minus); ++k) {
        if (!(a_[k] == o.a_[k])) plus = false;
        if (!(a_[k] == -o.a_[k])) minus = false;
    }
    if (plus) return 1;
    if (minus) return -1;
    return 0;
}

std::size_t Matrix::hash() const {
    std::size_t h = dim_;
    auto mix = [&h](std::int64_t v) {
        h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (const auto& x : a_) {
        mix(x.re.num());
        mix(x.re.den());
        mix(x.im.num());
        mix(x.im.den());
    }
    return h;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < dim_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < dim_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c);
        }
        os << "]\n";
    }
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    Matrix m(da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const Gaussian& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l) m(i * db + k, j * db + l) = x * b(k, l);
        }
    return m;
}

}  // namespace cliffork
