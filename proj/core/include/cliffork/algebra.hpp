#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffork/gaussian.hpp"

namespace cliffork {

enum class Field { Real, Complex };

// Quadratic-form signature. Generators 1..p square to +1 and p+1..p+q to -1.
// For Field::Complex every generator squares to +1 and (p,q) only marks the
// real subalgebra spanned by e_1..e_p, i e_{p+1}..i e_{p+q}.
struct Signature {
    int p = 0;
    int q = 0;
    Field field = Field::Real;

    Signature() = default;
    Signature(int p_, int q_, Field f = Field::Real);

    int n() const { return p + q; }
    bool complex() const { return field == Field::Complex; }
    // (p - q) mod 8 in 0..7.
    int type() const { return (((p - q) % 8) + 8) % 8; }
    // Square of generator i (1-based) under this metric.
    int generator_square(int i) const;
    // Bitmask of generators 1..n.
    std::uint32_t full_mask() const { return n() == 0 ? 0u : ((1u << n()) - 1u); }
    // Bitmask of generators p+1..p+q (the marked imaginary directions over C).
    std::uint32_t q_mask() const { return full_mask() & ~((1u << p) - 1u); }
    // Bitmask of generators squaring to -1 under the metric.
    std::uint32_t negative_mask() const { return complex() ? 0u : q_mask(); }

    std::string to_string() const;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Basis monomial e_{i1...ik} as a bitmask: bit (i-1) set means e_i present.
class Blade {
public:
    constexpr Blade() = default;
    constexpr explicit Blade(std::uint32_t bits) : bits_(bits) {}
    static Blade from_indices(const std::vector<int>& indices);
    static Blade generator(int i) { return Blade(1u << (i - 1)); }

    std::uint32_t bits() const { return bits_; }
    int grade() const { return __builtin_popcount(bits_); }
    std::vector<int> indices() const;
    // "1" for the unit, "e12" style otherwise; indices above 9 are comma separated "e1,10".
    std::string to_string() const;

    friend bool operator==(Blade a, Blade b) { return a.bits_ == b.bits_; }
    friend bool operator!=(Blade a, Blade b) { return a.bits_ != b.bits_; }

private:
    std::uint32_t bits_ = 0;
};

// Canonical ordering: by grade, then lexicographically on the index lists.
struct BladeOrder {
    bool operator()(Blade a, Blade b) const {
        const int ga = a.grade();
        const int gb = b.grade();
        if (ga != gb) return ga < gb;
        const std::uint32_t diff = a.bits() ^ b.bits();
        if (diff == 0) return false;
        return (a.bits() & (diff & (~diff + 1))) != 0;
    }
};

// Number of transpositions needed to sort the concatenation a,b.
inline int reorder_swaps(std::uint32_t a, std::uint32_t b) {
    int swaps = 0;
    std::uint32_t x = a >> 1;
    while (x != 0) {
        swaps += __builtin_popcount(x & b);
        x >>= 1;
    }
    return swaps;
}

struct SignedBlade {
    Blade blade;
    int sign = 1;
    friend bool operator==(const SignedBlade&, const SignedBlade&) = default;
};

// e_A * e_B = sign * e_{A xor B}. Throws std::out_of_range for indices beyond n.
SignedBlade blade_product(Blade a, Blade b, const Signature& sig);

// Blade product without range checks, for inner loops.
inline int blade_product_sign(std::uint32_t a, std::uint32_t b, std::uint32_t negative_mask) {
    const int neg = __builtin_popcount(a & b & negative_mask);
    return ((reorder_swaps(a, b) + neg) & 1) ? -1 : 1;
}

class MultiVector {
public:
    using Terms = std::map<Blade, Gaussian, BladeOrder>;

    MultiVector() = default;
    explicit MultiVector(Signature sig) : sig_(sig) {}
    MultiVector(Signature sig, Gaussian scalar);
    MultiVector(Signature sig, Blade b, Gaussian coeff = Gaussian(1));

    static MultiVector generator(Signature sig, int i) { return {sig, Blade::generator(i)}; }
    // omega = e_1 e_2 ... e_n
    static MultiVector volume(Signature sig) { return {sig, Blade(sig.full_mask())}; }

    const Signature& sig() const { return sig_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Gaussian coefficient(Blade b) const;
    void add_term(Blade b, const Gaussian& c);

    // Grade parity shared by every blade (0 even, 1 odd), or -1 when mixed.
    int parity() const;
    // Scalar value when the element is a pure scalar; throws otherwise.
    Gaussian scalar_value() const;
    bool is_scalar() const;

    MultiVector operator-() const;
    MultiVector& operator+=(const MultiVector& o);
    MultiVector& operator-=(const MultiVector& o);
    MultiVector& operator*=(const Gaussian& c);

    friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
    friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
    friend MultiVector operator*(MultiVector a, const Gaussian& c) { return a *= c; }
    friend MultiVector operator*(const Gaussian& c, MultiVector a) { return a *= c; }
    friend MultiVector operator*(const MultiVector& a, const MultiVector& b);
    friend bool operator==(const MultiVector& a, const MultiVector& b);

    // "1/2 + 1/2*e1", "0" for zero; complex coefficients are parenthesised "(1+i)*e12".
    std::string to_string() const;

private:
    void check_same(const MultiVector& o) const;

    Signature sig_;
    Terms terms_;
};

MultiVector mv_multiply(const MultiVector& x, const MultiVector& y);

// Grade-wise sign maps: (-1)^k, (-1)^{k(k-1)/2}, (-1)^{k(k+1)/2}.
MultiVector involution(const MultiVector& x);
MultiVector reversion(const MultiVector& x);
MultiVector conjugation(const MultiVector& x);
// omega x omega^{-1}; requires n even.
MultiVector involution_by_omega(const MultiVector& x);
// Complex conjugation relative to the marked real subalgebra.
MultiVector pseudo_conjugation(const MultiVector& x);
// Keep only blades of the given grade parity.
MultiVector grade_part(const MultiVector& x, int parity);

int volume_square(const Signature& sig);
enum class CenterKind { UnitOnly, UnitAndOmega };
CenterKind center(const Signature& sig);

// reversion(x) / N(x) when N(x) = x * reversion(x) is a nonzero scalar.
std::optional<MultiVector> versor_inverse(const MultiVector& x);

std::ostream& operator<<(std::ostream& os, const MultiVector& x);

}  // namespace cliffork
