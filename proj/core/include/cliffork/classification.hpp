#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffork/algebra.hpp"

namespace cliffork {

enum class Ring { R, C, H, RR, HH };

std::string ring_name(Ring r);  // "R", "C", "H", "2R", "2H"

struct AlgebraClass {
    int mod8 = 0;
    Ring ring = Ring::R;
    bool simple = true;
    // Size of the matrix blocks over the division ring.
    std::int64_t matrix_dim = 1;

    // Ring table label: "R", "2R(2)", "C(8)".
    std::string label() const;
};

AlgebraClass division_ring(const Signature& sig);

// Radon-Hurwitz numbers r_i for i >= 0; throws std::invalid_argument for negative i.
int radon_hurwitz(int i);
// Same sequence extended to negative arguments through r_{i-8} = r_i - 4.
int radon_hurwitz_extended(int i);

// k = q - r_{q-p}: number of commuting factors in a primitive idempotent.
int idempotent_factor_count(const Signature& sig);

struct PrimitiveIdempotent {
    MultiVector f;
    std::vector<Blade> generators;
};

// Product of (1 + e_A)/2 over k pairwise commuting blades with e_A^2 = +1,
// chosen greedily in canonical blade order. Throws std::runtime_error if the
// greedy search cannot find k such blades.
PrimitiveIdempotent primitive_idempotent(const Signature& sig);

enum class SalingarosFamily { NOdd, NEven, OmegaOdd, OmegaEven, S };

struct SalingarosLabel {
    SalingarosFamily family = SalingarosFamily::NOdd;
    int index = 0;
    // "N1", "Omega0", "S3".
    std::string to_string() const;
};

SalingarosLabel salingaros_type(const Signature& sig);
std::string family_name(SalingarosFamily f);

enum class GroupCenter { Z2, Z2xZ2, Z4 };
std::string center_name(GroupCenter c);
GroupCenter group_center_type(const Signature& sig);

// Predicted order of G(p,q)/Z(p,q): 2^{2 floor(n/2)}.
std::int64_t salingaros_factor_order(const Signature& sig);

enum class TableKind { Rings, Salingaros, Representations, Quotient };

std::string table_kind_name(TableKind k);
TableKind parse_table_kind(const std::string& name);

struct TableCell {
    int p = 0;
    int q = 0;
    std::string label;
    // Empty unless the cell needs a remark (printed value differs from the
    // closed-form rule, or the value lies outside the printed range).
    std::string note;
};

struct PeriodicTable {
    TableKind kind = TableKind::Rings;
    int p_max = 0;
    int q_max = 0;
    // rows[q][p]
    std::vector<std::vector<TableCell>> rows;

    const TableCell& at(int p, int q) const { return rows.at(q).at(p); }
};

// Cell label rules:
//   Rings           "R", "2R", "C(2)", "2H(4)"
//   Salingaros      "N1", "Omega0", "S2"
//   Representations "R^0_0", "2H^4_1", "C^7_4"
//   Quotient        same as Representations with "e" replacing the "2" prefix
PeriodicTable periodic_table(int p_max, int q_max, TableKind kind);
std::string cell_label(const Signature& sig, TableKind kind);
std::string to_markdown(const PeriodicTable& t);

}  // namespace cliffork
