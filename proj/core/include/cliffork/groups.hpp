#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffork/algebra.hpp"
#include "cliffork/classification.hpp"
#include "cliffork/matrix.hpp"

namespace cliffork {

// Finite group given by its Cayley table. table[i][j] is the index of
// elements[i] * elements[j].
struct GroupTable {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    int neutral = 0;

    std::size_t size() const { return table.size(); }
    int mul(int a, int b) const { return table[a][b]; }
    int inverse(int a) const;
    // Least k >= 1 with a^k = neutral.
    int element_order(int a) const;
};

class GroupClosureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kClosureBound = 10000;

// Closure of the generators under multiplication (breadth first, right
// multiplication by generators). The identity is always included. Labels are
// words in the generator labels ("1", "W", "W*E").
GroupTable generate_group(const std::vector<Matrix>& generators, const std::vector<std::string>& labels = {},
                          std::size_t bound = kClosureBound);
GroupTable generate_group(const std::vector<SignedBlade>& generators, const Signature& sig,
                          std::size_t bound = kClosureBound);

// Builds a table from an element list closed under `mul`.
template <class T, class Mul, class Eq>
GroupTable table_from_elements(const std::vector<T>& elems, const std::vector<std::string>& labels, Mul mul, Eq eq);

struct OrderStructure {
    // element order -> number of elements of that order
    std::map<int, int> counts;
    int count(int order) const {
        auto it = counts.find(order);
        return it == counts.end() ? 0 : it->second;
    }
    // "1:1 2:3 4:4"
    std::string to_string() const;
    friend bool operator==(const OrderStructure&, const OrderStructure&) = default;
};

OrderStructure order_structure(const GroupTable& g);
bool is_abelian(const GroupTable& g);
std::vector<int> group_center(const GroupTable& g);
// Factor table by a normal subgroup given as element indices.
GroupTable quotient_table(const GroupTable& g, const std::vector<int>& normal);
bool is_elementary_abelian_2(const GroupTable& g);

bool is_isomorphic(const GroupTable& a, const GroupTable& b);
// Random relabelling, for invariance tests.
GroupTable permuted(const GroupTable& g, const std::vector<int>& perm);

struct CatalogEntry {
    std::string name;
    GroupTable table;
};

// All groups of order 1, 2, 4, 8 and 16.
const std::vector<CatalogEntry>& small_group_catalog();
// Name of the catalog group isomorphic to g. Throws std::out_of_range when
// the order exceeds 16 or no entry matches.
std::string identify_small_group(const GroupTable& g);

// Cyclic, direct and semidirect building blocks used by the catalog.
GroupTable cyclic_group(int n);
GroupTable direct_product(const GroupTable& a, const GroupTable& b);
// <a, x | a^m = 1, x^k = a^t, x a x^-1 = a^r>
GroupTable metacyclic_group(int m, int k, int t, int r);

struct VeeGroup {
    Signature sig;
    std::vector<SignedBlade> elements;
    GroupTable table;
};

// The group of signed basis blades, order 2^{n+1}. Requires n <= 8.
VeeGroup vee_group(const Signature& sig);

struct VeeFactorReport {
    Signature sig;
    std::size_t group_order = 0;
    std::size_t center_order = 0;
    std::size_t factor_order = 0;
    std::int64_t predicted_factor_order = 0;
    bool elementary_abelian = false;
    GroupCenter predicted_center = GroupCenter::Z2;
    std::string computed_center;  // name of the computed center
    bool center_matches = false;

    bool ok() const {
        return elementary_abelian && center_matches &&
               static_cast<std::int64_t>(factor_order) == predicted_factor_order;
    }
};

VeeFactorReport vee_factor_check(const Signature& sig);

// Signed multiplication table of labelled matrices: entry (i,j) is "X" or "-X"
// where X is the label whose matrix equals +-elems[i]*elems[j], or "?" when no
// label matches.
std::vector<std::vector<std::string>> signed_product_table(const std::vector<Matrix>& elems,
                                                           const std::vector<std::string>& labels);

template <class T, class Mul, class Eq>
GroupTable table_from_elements(const std::vector<T>& elems, const std::vector<std::string>& labels, Mul mul, Eq eq) {
    GroupTable g;
    g.labels = labels;
    const std::size_t n = elems.size();
    g.table.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const T prod = mul(elems[i], elems[j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (eq(prod, elems[k])) {
                    g.table[i][j] = static_cast<int>(k);
                    break;
                }
            }
            if (g.table[i][j] < 0) throw GroupClosureError("element list is not closed under multiplication");
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        bool neutral = true;
        for (std::size_t j = 0; j < n && neutral; ++j) neutral = g.table[i][j] == static_cast<int>(j);
        if (neutral) {
            g.neutral = static_cast<int>(i);
            break;
        }
    }
    return g;
}

}  // namespace cliffork
