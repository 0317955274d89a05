#include <string>

#include "cliffork/classification.hpp"
#include "cliffork/printed.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffork;
using cliffork::testing::real_signatures;

namespace {

// Real dimension of the span of {f e_A f}: the size of the division ring
// when f is primitive.
int corner_dimension(const MultiVector& f) {
    const Signature& s = f.sig();
    const std::size_t nb = std::size_t{1} << s.n();
    std::vector<std::vector<Rational>> rows;
    for (std::uint32_t a = 0; a < nb; ++a) {
        const MultiVector x = f * MultiVector(s, Blade(a)) * f;
        std::vector<Rational> row(nb);
        for (const auto& [b, c] : x.terms()) {
            REQUIRE(c.is_real());
            row[b.bits()] = c.re;
        }
        rows.push_back(std::move(row));
    }
    int rank = 0;
    for (std::size_t col = 0; col < nb && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col].is_zero()) continue;
            const Rational k = rows[r][col] / rows[rank][col];
            for (std::size_t c = col; c < nb; ++c) rows[r][c] -= k * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

int ring_dimension(Ring r) {
    switch (r) {
        case Ring::R:
        case Ring::RR: return 1;
        case Ring::C: return 2;
        case Ring::H:
        case Ring::HH: return 4;
    }
    return 0;
}

}  // namespace

TEST_CASE("division rings of small algebras") {
    CHECK(division_ring(Signature(0, 2)).ring == Ring::H);
    CHECK(division_ring(Signature(1, 0)).ring == Ring::RR);
    CHECK_FALSE(division_ring(Signature(1, 0)).simple);
    CHECK(division_ring(Signature(0, 1)).ring == Ring::C);
    CHECK(division_ring(Signature(1, 3)).label() == "H(2)");
    CHECK(division_ring(Signature(3, 1)).label() == "R(4)");
    CHECK(division_ring(Signature(0, 0)).label() == "R");
}

TEST_CASE("algebra dimension matches the matrix block size") {
    for (const Signature& s : real_signatures(10)) {
        const AlgebraClass a = division_ring(s);
        const std::int64_t blocks = a.simple ? 1 : 2;
        CHECK(blocks * ring_dimension(a.ring) * a.matrix_dim * a.matrix_dim == (std::int64_t{1} << s.n()));
    }
}

TEST_CASE("Radon-Hurwitz numbers") {
    CHECK(radon_hurwitz(0) == 0);
    CHECK(radon_hurwitz(4) == 3);
    CHECK(radon_hurwitz(8) == 4);
    CHECK(radon_hurwitz(10) == 6);
    CHECK_THROWS(radon_hurwitz(-1));
    for (int i = 0; i < 40; ++i) CHECK(radon_hurwitz(i + 8) == radon_hurwitz(i) + 4);
    for (int i = -24; i < 24; ++i) CHECK(radon_hurwitz_extended(i) == radon_hurwitz_extended(i + 8) - 4);
}

TEST_CASE("idempotent factor counts") {
    CHECK(idempotent_factor_count(Signature(8, 0)) == 4);
    CHECK(idempotent_factor_count(Signature(1, 3)) == 1);
    CHECK(idempotent_factor_count(Signature(0, 0)) == 0);
    CHECK(idempotent_factor_count(Signature(2, 0)) == 1);
}

TEST_CASE("primitive idempotents are idempotent with commuting +1 generators") {
    for (const Signature& s : real_signatures(8)) {
        if (!division_ring(s).simple) continue;
        const PrimitiveIdempotent pi = primitive_idempotent(s);
        CHECK(pi.f * pi.f == pi.f);
        CHECK(static_cast<int>(pi.generators.size()) == idempotent_factor_count(s));
        for (Blade a : pi.generators) {
            CHECK(blade_product(a, a, s).sign == 1);
            for (Blade b : pi.generators) CHECK(blade_product(a, b, s) == blade_product(b, a, s));
        }
    }
}

TEST_CASE("the corner algebra of a primitive idempotent is the division ring") {
    for (const Signature& s : real_signatures(6)) {
        if (!division_ring(s).simple) continue;
        const PrimitiveIdempotent pi = primitive_idempotent(s);
        CHECK_MESSAGE(corner_dimension(pi.f) == ring_dimension(division_ring(s).ring), s.to_string());
    }
}

TEST_CASE("Salingaros families of the first groups") {
    CHECK(salingaros_type(Signature(2, 0)).family == SalingarosFamily::NOdd);
    CHECK(salingaros_type(Signature(2, 0)).to_string() == "N1");
    CHECK(salingaros_type(Signature(0, 2)).family == SalingarosFamily::NEven);
    CHECK(salingaros_type(Signature(0, 2)).to_string() == "N2");
    CHECK(salingaros_type(Signature(1, 0)).family == SalingarosFamily::OmegaOdd);
    CHECK(salingaros_type(Signature(1, 0)).to_string() == "Omega0");
    CHECK(salingaros_type(Signature(1, 3)).family == SalingarosFamily::NEven);
}

TEST_CASE("group center follows the parity and volume square") {
    for (const Signature& s : real_signatures(8)) {
        const GroupCenter c = group_center_type(s);
        if (s.n() % 2 == 0) CHECK(c == GroupCenter::Z2);
        else CHECK(c == (volume_square(s) == 1 ? GroupCenter::Z2xZ2 : GroupCenter::Z4));
    }
}

TEST_CASE("classification is periodic under (p,q) -> (p+4,q+4)") {
    for (int p = 0; p <= 4; ++p)
        for (int q = 0; q <= 4; ++q) {
            const Signature a(p, q), b(p + 4, q + 4);
            CHECK(division_ring(a).ring == division_ring(b).ring);
            CHECK(division_ring(a).simple == division_ring(b).simple);
            CHECK(division_ring(b).matrix_dim == 16 * division_ring(a).matrix_dim);
            CHECK(salingaros_type(a).family == salingaros_type(b).family);
            CHECK(group_center_type(a) == group_center_type(b));
            CHECK(idempotent_factor_count(b) == idempotent_factor_count(a) + 4);
        }
}

TEST_CASE("table cells") {
    CHECK(cell_label(Signature(1, 3), TableKind::Rings) == "H(2)");
    CHECK(cell_label(Signature(3, 1), TableKind::Rings) == "R(4)");
    CHECK(cell_label(Signature(0, 0), TableKind::Rings) == "R");
    CHECK(cell_label(Signature(3, 0), TableKind::Salingaros) == "S1");
    CHECK(parse_table_kind("representations") == TableKind::Representations);
    CHECK_THROWS(parse_table_kind("nope"));
    CHECK_THROWS(primitive_idempotent(Signature(1, 0)));
}

TEST_CASE("generated tables agree with the printed ones") {
    const std::vector<std::pair<TableKind, const printed::Table*>> kinds{
        {TableKind::Rings, &printed::kRings},
        {TableKind::Salingaros, &printed::kSalingaros},
        {TableKind::Representations, &printed::kRepresentations},
        {TableKind::Quotient, &printed::kQuotient}};
    for (const auto& [kind, ref] : kinds) {
        const PeriodicTable t = periodic_table(7, 7, kind);
        for (int q = 0; q <= 7; ++q)
            for (int p = 0; p <= 7; ++p)
                CHECK_MESSAGE(t.at(p, q).label == std::string((*ref)[q][p]), table_kind_name(kind), " ", p, ",", q);
    }
}

TEST_CASE("markdown table layout") {
    const std::string md = to_markdown(periodic_table(1, 1, TableKind::Rings));
    CHECK(md.find("| q \\ p | 0 | 1 |") == 0);
    CHECK(md.find("| 0 | R | 2R |") != std::string::npos);
}
