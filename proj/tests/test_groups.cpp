#include <algorithm>
#include <numeric>
#include <random>

#include "cliffork/classification.hpp"
#include "cliffork/groups.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffork;

namespace {

const GroupTable& catalog(const std::string& name) {
    for (const CatalogEntry& e : small_group_catalog())
        if (e.name == name) return e.table;
    throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("groups generated by signed blades") {
    const GroupTable klein = generate_group({SignedBlade{Blade(0), -1}, SignedBlade{Blade(1), 1}}, Signature(1, 0));
    CHECK(klein.size() == 4);
    CHECK(identify_small_group(klein) == "Z2xZ2");

    const GroupTable z4 = generate_group({SignedBlade{Blade(0), -1}, SignedBlade{Blade(1), 1}}, Signature(0, 1));
    CHECK(z4.size() == 4);
    CHECK(identify_small_group(z4) == "Z4");

    const GroupTable trivial = generate_group(std::vector<Matrix>{Matrix::identity(2)});
    CHECK(trivial.size() == 1);
}

TEST_CASE("order structures of the order-8 groups") {
    const OrderStructure q4 = order_structure(catalog("Q4"));
    CHECK(q4.count(2) == 1);
    CHECK(q4.count(4) == 6);
    const OrderStructure d4 = order_structure(catalog("D4"));
    CHECK(d4.count(2) == 5);
    CHECK(d4.count(4) == 2);
    const OrderStructure z2c = order_structure(catalog("Z2xZ2xZ2"));
    CHECK(z2c.count(2) == 7);
    CHECK(is_abelian(catalog("Z4xZ2")));
    CHECK_FALSE(is_abelian(catalog("D4")));
}

TEST_CASE("catalog entries are pairwise non-isomorphic") {
    const auto& cat = small_group_catalog();
    for (std::size_t i = 0; i < cat.size(); ++i)
        for (std::size_t j = i + 1; j < cat.size(); ++j)
            if (cat[i].table.size() == cat[j].table.size()) CHECK_FALSE(is_isomorphic(cat[i].table, cat[j].table));
}

TEST_CASE("identification is invariant under relabelling") {
    std::mt19937 rng(2024);
    for (const CatalogEntry& e : small_group_catalog()) {
        std::vector<int> perm(e.table.size());
        std::iota(perm.begin(), perm.end(), 0);
        for (int t = 0; t < 100; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            REQUIRE(identify_small_group(permuted(e.table, perm)) == e.name);
        }
    }
}

TEST_CASE("vee groups of the planes") {
    CHECK(identify_small_group(vee_group(Signature(2, 0)).table) == "D4");
    CHECK(identify_small_group(vee_group(Signature(0, 2)).table) == "Q4");
    CHECK(identify_small_group(vee_group(Signature(0, 0)).table) == "Z2");
    for (const Signature& s : cliffork::testing::real_signatures(6))
        CHECK(vee_group(s).table.size() == (std::size_t{2} << s.n()));
}

TEST_CASE("factor groups by the center") {
    const VeeFactorReport r20 = vee_factor_check(Signature(2, 0));
    CHECK(r20.ok());
    CHECK(r20.factor_order == 4);
    const VeeFactorReport r10 = vee_factor_check(Signature(1, 0));
    CHECK(r10.ok());
    // G(1,0) = {+-1, +-e1} is abelian, so it is its own center.
    CHECK(r10.group_order == 4);
    CHECK(r10.center_order == 4);
    CHECK(r10.factor_order == 1);
    const VeeFactorReport r00 = vee_factor_check(Signature(0, 0));
    CHECK(r00.ok());
    CHECK(r00.factor_order == 1);
    for (const Signature& s : cliffork::testing::real_signatures(6)) CHECK_MESSAGE(vee_factor_check(s).ok(), s.to_string());
}

TEST_CASE("direct quotient of a vee group by its center") {
    const GroupTable g = vee_group(Signature(1, 1)).table;
    const GroupTable f = quotient_table(g, group_center(g));
    CHECK(f.size() == 4);
    CHECK(is_elementary_abelian_2(f));
}

TEST_CASE("generation is deterministic") {
    const GroupTable a = vee_group(Signature(2, 1)).table;
    const GroupTable b = vee_group(Signature(2, 1)).table;
    CHECK(a.labels == b.labels);
    CHECK(a.table == b.table);
}

TEST_CASE("signed product table labels") {
    const std::vector<Matrix> m{Matrix::identity(2), Matrix::from_rows({{0, 1}, {-1, 0}})};
    const auto t = signed_product_table(m, {"I", "J"});
    CHECK(t[1][1] == "-I");
    CHECK(t[0][1] == "J");
}

TEST_CASE("closure bound") {
    CHECK_THROWS_AS(generate_group(std::vector<Matrix>{Matrix::from_rows({{2}})}, {}, 50), GroupClosureError);
}
