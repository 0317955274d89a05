#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cliffork/gaussian.hpp"

namespace cliffork {

// Dense square matrix over exact Gaussian rationals.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}
    Matrix(std::size_t dim, std::vector<Gaussian> entries);

    static Matrix identity(std::size_t dim);
    static Matrix scalar(std::size_t dim, const Gaussian& c);
    // Row-major construction from small integer/imaginary literals.
    static Matrix from_rows(const std::vector<std::vector<Gaussian>>& rows);

    std::size_t dim() const { return dim_; }
    const Gaussian& operator()(std::size_t r, std::size_t c) const { return a_[r * dim_ + c]; }
    Gaussian& operator()(std::size_t r, std::size_t c) { return a_[r * dim_ + c]; }
    const std::vector<Gaussian>& entries() const { return a_; }

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Gaussian& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Gaussian& c) { return a *= c; }
    friend Matrix operator*(const Gaussian& c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) { return a.dim_ == b.dim_ && a.a_ == b.a_; }

    Matrix transpose() const;
    Matrix conj() const;

    bool is_zero() const;
    bool is_real() const;
    bool is_symmetric() const;
    bool is_skew_symmetric() const;
    // c when the matrix equals c*I.
    std::optional<Gaussian> scalar_value() const;
    // +1 / -1 when the matrix is +-I, 0 otherwise.
    int sign_of_identity() const;
    // +1 when this == o, -1 when this == -o, 0 otherwise.
    int compare_up_to_sign(const Matrix& o) const;

    std::size_t hash() const;
    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<Gaussian> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct MatrixHash {
    std::size_t operator()(const Matrix& m) const { return m.hash(); }
};

}  // namespace cliffork
