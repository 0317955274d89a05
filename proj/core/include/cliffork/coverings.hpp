#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffork/algebra.hpp"
#include "cliffork/classification.hpp"
#include "cliffork/ext.hpp"
#include "cliffork/spinor.hpp"

namespace cliffork {

// Signs (a,b,c) = (sgn W^2, sgn E^2, sgn C^2).
struct AbcSignature {
    std::array<int, 3> s{1, 1, 1};

    int plus_count() const;
    std::string to_string() const;  // "(+,-,-)"
    static AbcSignature parse(const std::string& text);
    friend auto operator<=>(const AbcSignature&, const AbcSignature&) = default;
};

struct PTRow {
    AbcSignature sig;
    std::string cover;  // "Z2xZ2xZ2", "Z2xZ4", "Q4", "D4"
    bool anticommuting;  // PT = -TP
};

// The eight double coverings of the reflection group.
const std::vector<PTRow>& pt_table();
const PTRow& pt_row(const AbcSignature& s);

struct CoveringReport {
    std::string subject;  // "Cl(1,3)" or "C_4"
    // Signatures the printed rule allows for this algebra.
    std::vector<AbcSignature> admissible;
    // Single signature the printed rule fixes, when it fixes one.
    std::optional<AbcSignature> predicted;
    // Signs computed from the matrices of a spinbasis.
    std::optional<AbcSignature> computed;
    // Extended signature and its pattern-based cover (cpt_structure only).
    std::optional<SignatureVector> ext_signature;
    std::optional<bool> ext_abelian;
    std::string cover_group;
    bool cliffordian = false;
    std::vector<std::string> notes;

    // Predicted (or admissible) agrees with computed whenever both exist.
    bool consistent() const;
};

class CoveringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Over C: (+,+,+) for n = 0,1 (mod 4), (-,-,-) for n = 2,3 (mod 4).
CoveringReport pt_structure_complex(int n);
// Over R: the case table keyed on the division ring and p,q (mod 4). For
// even dimension with ring R or H the signs are also computed from the
// built spinbasis.
CoveringReport pt_structure(const Signature& sig);
// Same as above with the signs computed from a given basis.
CoveringReport pt_structure(const SpinBasis& basis);

// Extended structure: ring R reduces to the PT row; ring H uses the seven
// signs and abelianness of the computed group to pick the cover. Throws
// CoveringError when the pattern is outside the cover table.
CoveringReport cpt_structure(const Signature& sig);
CoveringReport cpt_structure(const SpinBasis& basis);

struct CptRow {
    std::string pattern;  // "+++++++", "3+4-", ...
    int plus = 7;
    bool abelian = true;
    std::string cover;
};
const std::vector<CptRow>& cpt_table();

// Inverse by Gaussian elimination on the left-regular representation, or
// nullopt when x is singular.
std::optional<MultiVector> multivector_inverse(const MultiVector& x);

struct MembershipReport {
    bool invertible = false;
    bool homogeneous = false;  // purely even or purely odd
    bool even = false;
    std::optional<Gaussian> norm;  // x * reversion(x) when scalar
    bool vectors_preserved = false;  // x e_i x^{-1} in the grade-1 span for all i
    bool pin = false;
    bool spin = false;
    bool spin_plus = false;  // spin with N(x) = +1
    std::string reason;      // first failing condition, empty if x is in Pin
};

// Requires p+q <= 4 (brute force over all generators).
MembershipReport membership(const MultiVector& x);
bool pin_membership(const MultiVector& x);
bool spin_membership(const MultiVector& x);

struct OddDecompositionReport {
    Signature sig;
    std::vector<std::string> decompositions;  // "Pin(3,0) = Spin(3,0) u w Spin(3,0)", ...
    int omega_square = 0;
    bool omega_central = false;
    bool omega_in_pin = false;
    bool omega_odd = false;
    // Unitary-group label for the four low-dimensional cases, "" otherwise.
    std::string unitary_label;
    // "i" when omega squares to -1, "e" (double unit) when it squares to +1.
    std::string omega_unit;
    bool label_matches_omega = true;
};

// Requires odd p+q. Throws std::invalid_argument otherwise.
OddDecompositionReport odd_dimensional_decomposition_report(const Signature& sig);

}  // namespace cliffork
