#include "cliffork/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace cliffork {

Signature::Signature(int p_, int q_, Field f) : p(p_), q(q_), field(f) {
    if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be non-negative");
    if (p + q > 30) throw std::invalid_argument("at most 30 generators are supported");
}

int Signature::generator_square(int i) const {
    if (i < 1 || i > n()) throw std::out_of_range("generator index out of range");
    if (complex()) return 1;
    return i <= p ? 1 : -1;
}

std::string Signature::to_string() const {
    std::ostringstream os;
    if (complex()) {
        os << "C" << n() << "[" << p << "," << q << "]";
    } else {
        os << "Cl(" << p << "," << q << ")";
    }
    return os.str();
}

Blade Blade::from_indices(const std::vector<int>& indices) {
    std::uint32_t bits = 0;
    int last = 0;
    for (int i : indices) {
        if (i <= last) throw std::invalid_argument("blade indices must be strictly increasing and positive");
        if (i > 31) throw std::out_of_range("blade index too large");
        bits |= 1u << (i - 1);
        last = i;
    }
    return Blade(bits);
}

std::vector<int> Blade::indices() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(__builtin_ctz(b) + 1);
    return out;
}

std::string Blade::to_string() const {
    if (bits_ == 0) return "1";
    const auto idx = indices();
    const bool wide = idx.back() > 9;
    std::string s = "e";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (wide && k > 0) s += ",";
        s += std::to_string(idx[k]);
    }
    return s;
}

SignedBlade blade_product(Blade a, Blade b, const Signature& sig) {
    const std::uint32_t full = sig.full_mask();
    if ((a.bits() | b.bits()) & ~full) throw std::out_of_range("blade index out of range for " + sig.to_string());
    return {Blade(a.bits() ^ b.bits()), blade_product_sign(a.bits(), b.bits(), sig.negative_mask())};
}

MultiVector::MultiVector(Signature sig, Gaussian scalar) : sig_(sig) { add_term(Blade(), scalar); }

MultiVector::MultiVector(Signature sig, Blade b, Gaussian coeff) : sig_(sig) {
    if (b.bits() & ~sig.full_mask()) throw std::out_of_range("blade index out of range for " + sig.to_string());
    add_term(b, coeff);
}

Gaussian MultiVector::coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Gaussian() : it->second;
}

void MultiVector::add_term(Blade b, const Gaussian& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int MultiVector::parity() const {
    int par = -1;
    for (const auto& [b, c] : terms_) {
        const int g = b.grade() & 1;
        if (par == -1) {
            par = g;
        } else if (par != g) {
            return -1;
        }
    }
    return par == -1 ? 0 : par;
}

bool MultiVector::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.bits() == 0);
}

Gaussian MultiVector::scalar_value() const {
    if (!is_scalar()) throw std::logic_error("multivector is not a scalar: " + to_string());
    return coefficient(Blade());
}

void MultiVector::check_same(const MultiVector& o) const {
    if (!(sig_ == o.sig_)) {
        throw std::invalid_argument("signature mismatch: " + sig_.to_string() + " vs " + o.sig_.to_string());
    }
}

MultiVector MultiVector::operator-() const {
    MultiVector r(sig_);
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, -c);
    return r;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, c);
    return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
    check_same(o);
    for (const auto& [b, c] : o.terms_) add_term(b, -c);
    return *this;
}

MultiVector& MultiVector::operator*=(const Gaussian& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, v] : terms_) v *= c;
    return *this;
}

MultiVector operator*(const MultiVector& a, const MultiVector& b) {
    a.check_same(b);
    const std::uint32_t neg = a.sig_.negative_mask();
    MultiVector r(a.sig_);
    for (const auto& [ba, ca] : a.terms_) {
        for (const auto& [bb, cb] : b.terms_) {
            Gaussian c = ca * cb;
            if (blade_product_sign(ba.bits(), bb.bits(), neg) < 0) c = -c;
            r.add_term(Blade(ba.bits() ^ bb.bits()), c);
        }
    }
    return r;
}

bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.sig_ == b.sig_ && a.terms_ == b.terms_;
}

std::string MultiVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        Gaussian coeff = c;
        const bool compound = !c.is_real() && !c.is_imaginary();
        bool negative = false;
        if (!compound) {
            const Rational& lead = c.is_real() ? c.re : c.im;
            if (lead.sign() < 0) {
                negative = true;
                coeff = -c;
            }
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string cs = coeff.to_string();
        if (compound) cs = "(" + cs + ")";
        if (b.bits() == 0) {
            out += cs;
        } else if (cs == "1") {
            out += b.to_string();
        } else {
            out += cs + "*" + b.to_string();
        }
    }
    return out;
}

MultiVector mv_multiply(const MultiVector& x, const MultiVector& y) { return x * y; }

namespace {

template <typename SignFn>
MultiVector map_signs(const MultiVector& x, SignFn fn) {
    MultiVector r(x.sig());
    for (const auto& [b, c] : x.terms()) r.add_term(b, fn(b) < 0 ? -c : c);
    return r;
}

}  // namespace

MultiVector involution(const MultiVector& x) {
    return map_signs(x, [](Blade b) { return (b.grade() & 1) ? -1 : 1; });
}

MultiVector reversion(const MultiVector& x) {
    return map_signs(x, [](Blade b) {
        const int k = b.grade();
        return ((k * (k - 1) / 2) & 1) ? -1 : 1;
    });
}

MultiVector conjugation(const MultiVector& x) {
    return map_signs(x, [](Blade b) {
        const int k = b.grade();
        return ((k * (k + 1) / 2) & 1) ? -1 : 1;
    });
}

MultiVector involution_by_omega(const MultiVector& x) {
    const Signature& sig = x.sig();
    if (sig.n() % 2 != 0) throw std::invalid_argument("involution via omega needs an even number of generators");
    const MultiVector w = MultiVector::volume(sig);
    // omega^{-1} = omega / omega^2 and omega^2 = +-1.
    const MultiVector w_inv = w * Gaussian(volume_square(sig));
    return w * x * w_inv;
}

MultiVector pseudo_conjugation(const MultiVector& x) {
    const Signature& sig = x.sig();
    // Over C_n the blade e_A equals (-i)^{|A cap Q|} times the marked blade, so
    // conjugating the marked coefficients gives conj(c) (-1)^{|A cap Q|} e_A.
    const std::uint32_t marked = sig.complex() ? sig.q_mask() : 0u;
    MultiVector r(sig);
    for (const auto& [b, c] : x.terms()) {
        const Gaussian cc = c.conj();
        r.add_term(b, (__builtin_popcount(b.bits() & marked) & 1) ? -cc : cc);
    }
    return r;
}

MultiVector grade_part(const MultiVector& x, int parity) {
    MultiVector r(x.sig());
    for (const auto& [b, c] : x.terms()) {
        if ((b.grade() & 1) == (parity & 1)) r.add_term(b, c);
    }
    return r;
}

int volume_square(const Signature& sig) {
    const int n = sig.n();
    const int neg = sig.complex() ? 0 : sig.q;
    const int exponent = n * (n - 1) / 2 + neg;
    return (exponent & 1) ? -1 : 1;
}

CenterKind center(const Signature& sig) {
    return (sig.n() % 2 == 1) ? CenterKind::UnitAndOmega : CenterKind::UnitOnly;
}

std::optional<MultiVector> versor_inverse(const MultiVector& x) {
    const MultiVector norm = x * reversion(x);
    if (!norm.is_scalar() || norm.is_zero()) return std::nullopt;
    return reversion(x) * (Gaussian(1) / norm.scalar_value());
}

std::ostream& operator<<(std::ostream& os, const MultiVector& x) { return os << x.to_string(); }

}  // namespace cliffork
