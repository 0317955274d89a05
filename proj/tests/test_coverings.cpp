#include <random>

#include "cliffork/coverings.hpp"
#include "cliffork/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffork;

TEST_CASE("complex algebras") {
    const CoveringReport c4 = pt_structure_complex(4);
    REQUIRE(c4.predicted);
    CHECK(c4.predicted->to_string() == "(+,+,+)");
    CHECK(c4.cover_group == "Z2xZ2xZ2");
    CHECK_FALSE(c4.cliffordian);
    const CoveringReport c2 = pt_structure_complex(2);
    CHECK(c2.predicted->to_string() == "(-,-,-)");
    CHECK(c2.cover_group == "Q4");
}

TEST_CASE("gamma basis PT structure") {
    const CoveringReport r = pt_structure(gamma_basis());
    REQUIRE(r.computed);
    CHECK(r.computed->to_string() == "(-,-,+)");
    CHECK(r.cover_group == "Z2xZ4");
    CHECK(r.consistent());
}

TEST_CASE("gamma basis CPT structure") {
    const CoveringReport r = cpt_structure(gamma_basis());
    REQUIRE(r.ext_signature);
    CHECK(r.ext_signature->to_string() == "(-,-,+,-,-,+,+)");
    CHECK(r.cover_group == "*Z4xZ2xZ2");
    CHECK(r.ext_abelian == false);
}

TEST_CASE("cover table rows") {
    CHECK(cpt_table().size() == 5);
    CHECK(cpt_table().front().cover == "Z2xZ2xZ2xZ2");
    CHECK(pt_table().size() == 8);
    for (const PTRow& row : pt_table()) CHECK(AbcSignature::parse(row.sig.to_string()) == row.sig);
}

TEST_CASE("ring R reduces to the PT table") {
    const CoveringReport r = cpt_structure(Signature(2, 0));
    CHECK_FALSE(r.ext_signature.has_value());
    CHECK_FALSE(r.cover_group.empty());
}

TEST_CASE("predictions agree with computed signs for every constructible basis") {
    for (const Signature& s : cliffork::testing::real_signatures(8)) {
        const CoveringReport r = pt_structure(s);
        CHECK_MESSAGE(r.consistent(), s.to_string());
        if (r.predicted && r.computed) CHECK(*r.predicted == *r.computed);
    }
}

TEST_CASE("abelian PT covers are exactly the commuting rows") {
    for (const PTRow& row : pt_table()) {
        const bool abelian = row.cover == "Z2xZ2xZ2" || row.cover == "Z2xZ4";
        CHECK(abelian == !row.anticommuting);
    }
}

TEST_CASE("pin membership") {
    const Signature s20(2, 0);
    CHECK(pin_membership(MultiVector::generator(s20, 1)));
    const MultiVector e12(s20, Blade(3));
    CHECK(pin_membership(e12));
    CHECK(spin_membership(e12));
    const Signature s10(1, 0);
    const MultiVector null = MultiVector(s10, Gaussian(1)) + MultiVector::generator(s10, 1);
    CHECK_FALSE(pin_membership(null));
    CHECK_FALSE(membership(null).invertible);
}

TEST_CASE("pin is closed under products and inverses") {
    std::mt19937 rng(31);
    for (const Signature& s : {Signature(2, 1), Signature(1, 3), Signature(2, 2), Signature(0, 3)}) {
        std::uniform_int_distribution<int> gen(1, s.n());
        for (int t = 0; t < 200; ++t) {
            MultiVector x(s, Gaussian(1));
            const int len = 1 + t % 4;
            for (int k = 0; k < len; ++k) x = x * MultiVector::generator(s, gen(rng));
            REQUIRE(pin_membership(x));
            const auto inv = multivector_inverse(x);
            REQUIRE(inv);
            CHECK(pin_membership(*inv));
            CHECK(spin_membership(x) == (len % 2 == 0));
        }
    }
}

TEST_CASE("inverse by elimination") {
    const Signature s(1, 1);
    const MultiVector x = MultiVector(s, Gaussian(2)) + MultiVector(s, Blade(3));
    const auto inv = multivector_inverse(x);
    REQUIRE(inv);
    CHECK(x * *inv == MultiVector(s, Gaussian(1)));
}

TEST_CASE("odd-dimensional decompositions") {
    const OddDecompositionReport r30 = odd_dimensional_decomposition_report(Signature(3, 0));
    CHECK(r30.unitary_label == "SU(2) u iSU(2)");
    CHECK(r30.omega_square == -1);
    const OddDecompositionReport r03 = odd_dimensional_decomposition_report(Signature(0, 3));
    CHECK(r03.omega_square == 1);
    CHECK(r03.omega_unit == "e");
    const OddDecompositionReport r05 = odd_dimensional_decomposition_report(Signature(0, 5));
    CHECK(r05.unitary_label == "Sp(2) u iSp(2)");
    CHECK_THROWS_AS(odd_dimensional_decomposition_report(Signature(2, 0)), std::invalid_argument);
}
