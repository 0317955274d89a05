#include <set>

#include "cliffork/classification.hpp"
#include "cliffork/spinor.hpp"
#include "cliffork/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffork;
using cliffork::testing::real_signatures;

namespace {

bool simple_type(const Signature& s) { return s.type() != 1 && s.type() != 5; }

}  // namespace

TEST_CASE("gamma basis is accepted with three real units") {
    const SpinBasis b = gamma_basis();
    CHECK(b.sig == Signature(1, 3));
    CHECK(b.mats[0] == Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}));
    CHECK(b.real_mask == std::vector<bool>{true, true, false, true});
    CHECK(b.a == 1);
    CHECK(b.b == 3);
}

TEST_CASE("matrix kinds") {
    const std::vector<Matrix> g = gamma_matrices();
    // The printed gamma_2 has equal entries at (0,3) and (3,0), so it is
    // symmetric; the skewsymmetric units are gamma_1 and gamma_3.
    CHECK(classify_matrix(g[2]).to_string() == "complex/symmetric");
    CHECK(classify_matrix(g[1]).to_string() == "real/skewsymmetric");
    CHECK(classify_matrix(g[3]).to_string() == "real/skewsymmetric");
    CHECK(classify_matrix(g[0]).to_string() == "real/symmetric");
    CHECK(classify_matrix(Matrix::identity(4)).to_string() == "real/symmetric");
}

TEST_CASE("invalid bases are rejected") {
    std::vector<Matrix> ids(4, Matrix::identity(4));
    CHECK_THROWS_AS(load_spinbasis(ids, Signature(1, 3)), SpinBasisError);
    std::vector<Matrix> g = gamma_matrices();
    g[2] = g[1];
    CHECK_THROWS_AS(load_spinbasis(g, Signature(1, 3)), SpinBasisError);
}

TEST_CASE("sign flips of a unit keep the basis valid") {
    std::vector<Matrix> g = gamma_matrices();
    g[2] = -g[2];
    const SpinBasis b = load_spinbasis(g, Signature(1, 3));
    CHECK(b.a == 1);
}

TEST_CASE("two-dimensional examples") {
    const SpinBasis b11 = build_spinbasis(Signature(1, 1));
    REQUIRE(b11.dim() == 2);
    CHECK(b11.mats[0] * b11.mats[0] == Matrix::identity(2));
    CHECK(b11.mats[1] * b11.mats[1] == -Matrix::identity(2));
    CHECK((b11.mats[0] * b11.mats[1] + b11.mats[1] * b11.mats[0]).is_zero());

    // Two real units squaring to -I cannot anticommute in dimension 2 (see
    // the exhaustive search below), so at least one unit is complex.
    const SpinBasis b02 = build_spinbasis(Signature(0, 2));
    CHECK(b02.dim() == 2);
    CHECK(b02.a >= 1);
    CHECK(b02.a % 2 == b02.b % 2);
}

TEST_CASE("no real 2x2 anticommuting pair squares to -I") {
    // Exhaustive over matrices with entries in {-1, 0, 1}.
    std::vector<Matrix> minus_roots;
    for (int code = 0; code < 81; ++code) {
        int c = code;
        std::vector<Gaussian> e(4);
        for (auto& x : e) {
            x = Gaussian(c % 3 - 1);
            c /= 3;
        }
        const Matrix m(2, e);
        if (m * m == -Matrix::identity(2)) minus_roots.push_back(m);
    }
    CHECK_FALSE(minus_roots.empty());
    for (const Matrix& a : minus_roots)
        for (const Matrix& b : minus_roots) CHECK_FALSE((a * b + b * a).is_zero());
}

TEST_CASE("semi-simple types have no canonical basis") {
    CHECK_THROWS_AS(build_spinbasis(Signature(1, 0)), std::invalid_argument);
    CHECK_THROWS_AS(build_spinbasis(Signature(3, 2)), std::invalid_argument);
}

TEST_CASE("evaluation is a faithful homomorphism for simple types up to n = 6") {
    for (const Signature& s : real_signatures(6)) {
        if (!simple_type(s)) continue;
        const SpinBasis basis = build_spinbasis(s);
        const std::uint32_t top = 1u << s.n();
        std::vector<Matrix> img;
        for (std::uint32_t a = 0; a < top; ++a) img.push_back(blade_image(Blade(a), basis));
        for (std::uint32_t a = 0; a < top; ++a)
            for (std::uint32_t b = 0; b < top; ++b) {
                const SignedBlade ab = blade_product(Blade(a), Blade(b), s);
                const Matrix expect = ab.sign == 1 ? img[ab.blade.bits()] : -img[ab.blade.bits()];
                REQUIRE(img[a] * img[b] == expect);
            }
        for (std::uint32_t a = 0; a < top; ++a)
            for (std::uint32_t b = a + 1; b < top; ++b) REQUIRE(img[a].compare_up_to_sign(img[b]) == 0);
    }
}

TEST_CASE("evaluation respects products of random elements at n = 8") {
    std::mt19937 rng(17);
    for (const Signature& s : {Signature(4, 4), Signature(8, 0), Signature(1, 7), Signature(2, 6)}) {
        const SpinBasis basis = build_spinbasis(s);
        for (int t = 0; t < 4; ++t) {
            const MultiVector x = cliffork::testing::random_mv(s, rng, 3);
            const MultiVector y = cliffork::testing::random_mv(s, rng, 3);
            CHECK(evaluate(x * y, basis) == evaluate(x, basis) * evaluate(y, basis));
        }
    }
}

TEST_CASE("unit counts") {
    for (const Signature& s : real_signatures(8)) {
        const Ring r = division_ring(s).ring;
        if (s.n() % 2 == 1 || (r != Ring::R && r != Ring::H)) continue;
        for (const SpinBasis& b : spinbasis_variants(s)) {
            CHECK(b.a + b.b == s.n());
            CHECK(b.l + b.m == b.a);
            CHECK(b.v + b.u == b.b);
            if (division_ring(s).ring == Ring::H) CHECK(b.a % 2 == b.b % 2);
        }
    }
}

TEST_CASE("variants are valid bases") {
    for (const Signature& s : {Signature(1, 3), Signature(2, 0), Signature(0, 4)})
        for (const SpinBasis& b : spinbasis_variants(s)) CHECK_NOTHROW(load_spinbasis(b.mats, s));
}
