#include <set>

#include "cliffork/classification.hpp"
#include "cliffork/ext.hpp"
#include "cliffork/verify.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffork;

namespace {

Matrix gamma_product(const std::vector<int>& idx) {
    const std::vector<Matrix> g = gamma_matrices();
    Matrix m = Matrix::identity(4);
    for (int i : idx) m = m * g[i];
    return m;
}

bool same_up_to_sign(const Matrix& a, const Matrix& b) { return a.compare_up_to_sign(b) != 0; }

bool ring_r_or_h(const Signature& s) {
    const Ring r = division_ring(s).ring;
    return s.n() % 2 == 0 && (r == Ring::R || r == Ring::H);
}

}  // namespace

TEST_CASE("gamma basis automorphism matrices") {
    const ExtGroupMatrices m = ext_group(gamma_basis());
    CHECK(same_up_to_sign(m.W, gamma_product({0, 1, 2, 3})));
    CHECK(same_up_to_sign(m.E, gamma_product({1, 3})));
    CHECK(same_up_to_sign(m.C, gamma_product({0, 2})));
    CHECK(same_up_to_sign(m.Pi, gamma_product({0, 1, 3})));
    CHECK(same_up_to_sign(m.K, gamma_product({2})));
    CHECK(same_up_to_sign(m.S, gamma_product({0})));
    CHECK(same_up_to_sign(m.F, gamma_product({1, 2, 3})));
    CHECK((m.E * m.E).sign_of_identity() == -1);
}

TEST_CASE("gamma basis signature, class and relations") {
    const ExtGroupMatrices m = ext_group(gamma_basis());
    CHECK(signature_vector(m).to_string() == "(-,-,+,-,-,+,+)");
    const ExtClassification c = classify_ext_group(m);
    CHECK(c.name == "*Z4xZ2");
    CHECK(c.order_structure() == "(3,4)");
    CHECK_FALSE(c.abelian);
    const CommutationProfile prof = commutation_profile(m);
    CHECK(prof.at(ExtElement::W, ExtElement::Pi) == Relation::Anticommute);
    CHECK(pi_bar_product(gamma_basis()).computed == -1);
}

TEST_CASE("squares of the volume matrix") {
    CHECK((matrix_W(build_spinbasis(Signature(1, 1))) * matrix_W(build_spinbasis(Signature(1, 1)))).sign_of_identity() == 1);
    const Matrix w02 = matrix_W(build_spinbasis(Signature(0, 2)));
    CHECK((w02 * w02).sign_of_identity() == -1);
}

TEST_CASE("pseudoautomorphism product for a quaternionic basis") {
    const PiBarReport r = pi_bar_product(build_spinbasis(Signature(0, 2)));
    const Matrix pi = matrix_Pi(build_spinbasis(Signature(0, 2)));
    CHECK(r.computed == (pi * pi.conj()).sign_of_identity());
    CHECK(r.computed == -1);
}

TEST_CASE("real ring collapses the pseudo part") {
    const ExtGroupMatrices m = ext_group(build_spinbasis(Signature(2, 0)));
    CHECK(m.Pi.scalar_value().has_value());
    CHECK(same_up_to_sign(m.K, m.W));
    CHECK(same_up_to_sign(m.S, m.E));
    CHECK(same_up_to_sign(m.F, m.C));
}

TEST_CASE("E and C satisfy their defining relations") {
    for (const Signature& s : cliffork::testing::real_signatures(8)) {
        if (!ring_r_or_h(s)) continue;
        for (const SpinBasis& b : spinbasis_variants(s)) {
            const ExtGroupMatrices m = ext_group(b);
            for (const Matrix& e : b.mats) {
                REQUIRE(e * m.E == m.E * e.transpose());
                REQUIRE((m.C * e.transpose() + e * m.C).is_zero());
                REQUIRE(e * m.Pi == m.Pi * e.conj());
            }
        }
    }
}

TEST_CASE("signed group of the eight matrices closes with order 16 for ring H") {
    for (const Signature& s : {Signature(1, 3), Signature(2, 4)}) {
        std::size_t faithful = 0;
        for (const SpinBasis& b : spinbasis_variants(s)) {
            const ExtGroupMatrices m = ext_group(b);
            if (!classify_ext_group(m).faithful()) continue;
            ++faithful;
            CHECK(generate_group(m.all()).size() == 16);
        }
        CHECK(faithful > 0);
    }
}

TEST_CASE("all units complex makes Pi coincide with W") {
    for (const SpinBasis& b : spinbasis_variants(Signature(0, 4))) {
        const ExtGroupMatrices m = ext_group(b);
        if (b.a == 4) CHECK(same_up_to_sign(m.Pi, m.W));
        CHECK(classify_ext_group(m).distinct == 4);
    }
}

TEST_CASE("ring R keeps only the fundamental automorphisms") {
    for (const SpinBasis& b : spinbasis_variants(Signature(3, 1))) {
        const ExtGroupMatrices m = ext_group(b);
        CHECK(classify_ext_group(m).distinct == 4);
        CHECK(generate_group(m.all()).size() == 8);
    }
}

TEST_CASE("order-8 classes") {
    CHECK(order8_table().size() == 6);
    const ExtClassification c = classify_ext_group(std::vector<Matrix>(8, Matrix::identity(2)));
    CHECK_FALSE(c.faithful());

    // Eight commuting diagonal sign matrices: every square is +I.
    std::vector<Matrix> diag;
    for (int k = 0; k < 8; ++k) {
        std::vector<Gaussian> e(16);
        for (int j = 0; j < 3; ++j) e[5 * j] = Gaussian((k >> j) & 1 ? -1 : 1);
        e[15] = Gaussian(1);
        diag.emplace_back(4, e);
    }
    const ExtClassification z = classify_ext_group(diag);
    CHECK(z.name == "Z2xZ2xZ2");
    CHECK(z.order_structure() == "(7,0)");
    CHECK(z.abelian);
}

TEST_CASE("admissible sign patterns") {
    CHECK(admissible_signature(SignatureVector::parse("(+,+,+,+,+,+,+)")));
    CHECK(admissible_signature(SignatureVector::parse("(+,-,-,-,-,-,-)")));
    CHECK(admissible_signature(SignatureVector::parse("(-,-,+,-,-,+,+)")));
    CHECK_FALSE(admissible_signature(SignatureVector::parse("(-,-,-,-,-,-,-)")));
    CHECK_FALSE(admissible_signature(SignatureVector::parse("(+,+,-,-,-,-,-)")));
    CHECK(SignatureVector::parse("(+,-,+,-,+,-,+)").to_string() == "(+,-,+,-,+,-,+)");
}

TEST_CASE("census on a small sweep stays admissible") {
    const SignatureCensus c = enumerate_signatures(4, 2);
    CHECK(c.ok());
    CHECK(c.instances > 0);
    for (const auto& [sig, entry] : c.realized) CHECK(admissible_signature(sig));
}
