#include <algorithm>
#include <random>

#include "cliffork/algebra.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffork;
using cliffork::testing::random_mv;
using cliffork::testing::real_signatures;

namespace {

// Independent sign oracle: concatenate the index lists, bubble sort while
// counting swaps, then contract equal neighbours with their metric squares.
SignedBlade naive_product(Blade a, Blade b, const Signature& sig) {
    std::vector<int> w = a.indices();
    const std::vector<int> rhs = b.indices();
    w.insert(w.end(), rhs.begin(), rhs.end());
    int sign = 1;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
            if (w[j] > w[j + 1]) {
                std::swap(w[j], w[j + 1]);
                sign = -sign;
            }
    std::vector<int> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 < w.size() && w[i] == w[i + 1]) {
            sign *= sig.generator_square(w[i]);
            ++i;
        } else {
            out.push_back(w[i]);
        }
    }
    return {Blade::from_indices(out), sign};
}

MultiVector mv(const Signature& s, std::uint32_t bits, Gaussian c = Gaussian(1)) { return {s, Blade(bits), c}; }

}  // namespace

TEST_CASE("blade products in Cl(2,0)") {
    const Signature s(2, 0);
    CHECK(blade_product(Blade(1), Blade(1), s) == SignedBlade{Blade(0), 1});
    CHECK(blade_product(Blade(2), Blade(1), s) == SignedBlade{Blade(3), -1});
    CHECK(blade_product(Blade(3), Blade(3), s) == SignedBlade{Blade(0), -1});
}

TEST_CASE("generator squares follow the metric") {
    const Signature s(2, 3);
    for (int i = 1; i <= 5; ++i) CHECK(s.generator_square(i) == (i <= 2 ? 1 : -1));
    const Signature c(2, 3, Field::Complex);
    for (int i = 1; i <= 5; ++i) CHECK(c.generator_square(i) == 1);
}

TEST_CASE("blade product agrees with the sorting oracle for n <= 6") {
    for (const Signature& s : real_signatures(6)) {
        const std::uint32_t top = 1u << s.n();
        for (std::uint32_t a = 0; a < top; ++a)
            for (std::uint32_t b = 0; b < top; ++b) REQUIRE(blade_product(Blade(a), Blade(b), s) == naive_product(Blade(a), Blade(b), s));
    }
}

TEST_CASE("swapping factors flips the sign by the grade overlap parity") {
    for (const Signature& s : real_signatures(6)) {
        const std::uint32_t top = 1u << s.n();
        for (std::uint32_t a = 0; a < top; ++a)
            for (std::uint32_t b = 0; b < top; ++b) {
                const int ga = Blade(a).grade(), gb = Blade(b).grade(), gab = Blade(a & b).grade();
                const int expected = ((ga * gb - gab) % 2 == 0) ? 1 : -1;
                REQUIRE(blade_product(Blade(a), Blade(b), s).sign * blade_product(Blade(b), Blade(a), s).sign == expected);
            }
    }
}

TEST_CASE("small products") {
    const Signature s10(1, 0);
    const MultiVector one(s10, Gaussian(1));
    const MultiVector e1 = MultiVector::generator(s10, 1);
    CHECK((one + e1) * (one - e1) == MultiVector(s10));

    const MultiVector half_plus = (one + e1) * Gaussian(Rational(1, 2));
    const MultiVector half_minus = (one - e1) * Gaussian(Rational(1, 2));
    CHECK((half_plus * half_minus).is_zero());
    CHECK(half_plus * half_plus == half_plus);

    const Signature s13(1, 3);
    const MultiVector w = MultiVector::volume(s13);
    CHECK(w * w == MultiVector(s13, Gaussian(-1)));
}

TEST_CASE("grade involutions on blades") {
    const Signature s(3, 0);
    CHECK(involution(mv(s, 0b011)) == mv(s, 0b011));
    CHECK(reversion(mv(s, 0b111)) == -mv(s, 0b111));
    CHECK(conjugation(mv(s, 0b001)) == -mv(s, 0b001));
}

TEST_CASE("involution as conjugation by the volume element") {
    const Signature s20(2, 0);
    CHECK(involution_by_omega(mv(s20, 0b01)) == -mv(s20, 0b01));
    CHECK(involution_by_omega(mv(s20, 0b11)) == mv(s20, 0b11));
    const Signature s11(1, 1);
    CHECK(involution_by_omega(mv(s11, 0b01) + mv(s11, 0b10)) == -mv(s11, 0b01) - mv(s11, 0b10));
    CHECK_THROWS(involution_by_omega(mv(Signature(1, 0), 1)));
}

TEST_CASE("pseudo conjugation over the complex algebra") {
    const Signature c(1, 2, Field::Complex);
    CHECK(pseudo_conjugation(MultiVector(c, Gaussian::i())) == MultiVector(c, -Gaussian::i()));
    CHECK(pseudo_conjugation(MultiVector::generator(c, 1)) == MultiVector::generator(c, 1));
    for (int p = 0; p <= 5; ++p)
        for (int q = 0; p + q <= 5; ++q) {
            const Signature sig(p, q, Field::Complex);
            const MultiVector w = MultiVector::volume(sig);
            CHECK(pseudo_conjugation(w) == (q % 2 == 0 ? w : -w));
        }
}

TEST_CASE("volume square and center") {
    CHECK(volume_square(Signature(4, 0)) == 1);
    CHECK(volume_square(Signature(0, 0)) == 1);
    CHECK(MultiVector::volume(Signature(0, 0)) == MultiVector(Signature(0, 0), Gaussian(1)));
    CHECK(center(Signature(2, 1)) == CenterKind::UnitAndOmega);
    CHECK(center(Signature(2, 2)) == CenterKind::UnitOnly);
    for (const Signature& s : real_signatures(8)) {
        const MultiVector w = MultiVector::volume(s);
        CHECK((w * w).scalar_value() == Gaussian(volume_square(s)));
    }
}

TEST_CASE("involutions are self-inverse and commute on random elements") {
    std::mt19937 rng(1234);
    for (const Signature& base : real_signatures(6)) {
        for (const Signature& s : {base, Signature(base.p, base.q, Field::Complex)}) {
            for (int t = 0; t < 20; ++t) {
                const MultiVector x = random_mv(s, rng);
                CHECK(involution(involution(x)) == x);
                CHECK(reversion(reversion(x)) == x);
                CHECK(pseudo_conjugation(pseudo_conjugation(x)) == x);
                CHECK(reversion(involution(x)) == involution(reversion(x)));
                CHECK(conjugation(x) == reversion(involution(x)));
            }
        }
    }
}

TEST_CASE("anti and automorphism laws on random products") {
    std::mt19937 rng(99);
    for (const Signature& base : real_signatures(5)) {
        const Signature s(base.p, base.q, Field::Complex);
        for (int t = 0; t < 20; ++t) {
            const MultiVector x = random_mv(s, rng), y = random_mv(s, rng);
            CHECK(reversion(x * y) == reversion(y) * reversion(x));
            CHECK(involution(x * y) == involution(x) * involution(y));
            CHECK(pseudo_conjugation(x * y) == pseudo_conjugation(x) * pseudo_conjugation(y));
        }
    }
}

TEST_CASE("multiplication is associative on random elements") {
    std::mt19937 rng(5);
    for (const Signature& s : real_signatures(5))
        for (int t = 0; t < 10; ++t) {
            const MultiVector x = random_mv(s, rng), y = random_mv(s, rng), z = random_mv(s, rng);
            CHECK((x * y) * z == x * (y * z));
        }
}

TEST_CASE("versor inverse") {
    const Signature s(2, 1);
    const MultiVector v = MultiVector::generator(s, 1) + MultiVector::generator(s, 3) * Gaussian(2);
    const auto inv = versor_inverse(v);
    REQUIRE(inv);
    CHECK(v * *inv == MultiVector(s, Gaussian(1)));
    const MultiVector null = MultiVector(Signature(1, 0), Gaussian(1)) + MultiVector::generator(Signature(1, 0), 1);
    CHECK_FALSE(versor_inverse(null));
}

TEST_CASE("canonical text form") {
    const Signature s(3, 0);
    MultiVector x(s);
    x.add_term(Blade(0), Gaussian(Rational(1, 2)));
    x.add_term(Blade(1), Gaussian(Rational(1, 2)));
    CHECK(x.to_string() == "1/2 + 1/2*e1");
    CHECK(MultiVector(s).to_string() == "0");
    CHECK(Blade::from_indices({1, 3}).to_string() == "e13");
}
