#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffork/classification.hpp"
#include "cliffork/groups.hpp"
#include "cliffork/matrix.hpp"
#include "cliffork/spinor.hpp"

namespace cliffork {

enum class ExtElement { I = 0, W, E, C, Pi, K, S, F };
inline constexpr std::array<ExtElement, 8> kExtElements{ExtElement::I,  ExtElement::W, ExtElement::E, ExtElement::C,
                                                        ExtElement::Pi, ExtElement::K, ExtElement::S, ExtElement::F};
std::string element_name(ExtElement e);  // "I", "W", ..., "Pi", ...

// Which product of spinbasis units a matrix is (up to sign).
enum class UnitSubset {
    All,          // W
    Skew,         // every skewsymmetric unit
    Symmetric,    // every symmetric unit
    Complex,      // every complex unit
    Real,         // every real unit
    CForm,        // complex symmetric together with real skewsymmetric units
    DForm,        // complex skewsymmetric together with real symmetric units
};
std::string subset_name(UnitSubset s);

class DefiningConditionError : public std::runtime_error {
public:
    DefiningConditionError(const std::string& what, int unit) : std::runtime_error(what), unit(unit) {}
    int unit;  // 1-based index of the failing spinbasis unit, 0 if not unit specific
};

struct ExtGroupMatrices {
    Signature sig;  // real signature (p,q) of the marked subalgebra
    Ring ring = Ring::R;
    Matrix I, W, E, C, Pi, K, S, F;
    // Units whose ordered product equals each matrix up to sign, and the kind of that set.
    std::array<std::uint32_t, 8> units{};
    std::array<UnitSubset, 8> form{};
    std::string provenance;

    const Matrix& operator[](ExtElement e) const;
    std::vector<Matrix> all() const { return {I, W, E, C, Pi, K, S, F}; }
};

// Ordered product of the units in `mask`.
Matrix unit_product(const SpinBasis& basis, std::uint32_t mask);

Matrix matrix_W(const SpinBasis& basis);
// E is the product of the skewsymmetric units when their number is even, of
// the symmetric units otherwise; throws DefiningConditionError if E_i E != E E_i^T.
Matrix matrix_E(const SpinBasis& basis);
// C = E W^T, checked against C E_i^T + E_i C = 0.
Matrix matrix_C(const SpinBasis& basis);
// Pi with E_i Pi = Pi conj(E_i): the identity for ring R, the product of the
// complex units (a even) or of the real units (b odd) for ring H.
Matrix matrix_Pi(const SpinBasis& basis);
Matrix matrix_K(const SpinBasis& basis);  // Pi W, -E_i K = K conj(E_i)
Matrix matrix_S(const SpinBasis& basis);  // Pi E, E_i S = S conj(E_i)^T
Matrix matrix_F(const SpinBasis& basis);  // Pi C, -E_i F = F conj(E_i)^T

// Builds and validates all eight matrices. Requires an even-dimensional
// basis whose real subalgebra has ring R or H.
ExtGroupMatrices ext_group(const SpinBasis& basis);

// Pi * conj(Pi) as +1/-1 (the matrix is checked to be +-I), and the value
// the closed-form a,b mod 4 rule gives for the same basis.
struct PiBarReport {
    int computed = 0;
    int rule = 0;
    int count = 0;          // a for Pi from complex units, b for Pi from real units
    UnitSubset pi_form = UnitSubset::Complex;
    bool agrees() const { return computed == rule; }
};
PiBarReport pi_bar_product(const SpinBasis& basis);

struct SignatureVector {
    // a..g: signs of W^2, E^2, C^2, Pi^2, K^2, S^2, F^2
    std::array<int, 7> s{1, 1, 1, 1, 1, 1, 1};

    int plus_count() const;
    int minus_count() const { return 7 - plus_count(); }
    std::string to_string() const;  // "(-,-,+,-,-,+,+)"
    static SignatureVector parse(const std::string& text);
    friend auto operator<=>(const SignatureVector&, const SignatureVector&) = default;
};

SignatureVector signature_vector(const ExtGroupMatrices& m);

enum class Relation { Commute, Anticommute };

struct CommutationProfile {
    std::array<std::array<Relation, 8>, 8> rel{};
    Relation at(ExtElement x, ExtElement y) const { return rel[static_cast<int>(x)][static_cast<int>(y)]; }
    bool abelian() const;
};

// Throws std::runtime_error if some pair neither commutes nor anticommutes.
CommutationProfile commutation_profile(const ExtGroupMatrices& m);

// Counts from the spinbasis used by the closed-form predicates.
struct UnitCounts {
    int n = 0, a = 0, b = 0, l = 0, m = 0, v = 0, u = 0;
    int s() const { return l + u; }
    int g() const { return m + v; }
    int k() const { return m + u; }
};
UnitCounts unit_counts(const SpinBasis& basis);

// Closed-form square laws for K, S, F (signs +1/-1), keyed by the product form.
struct SquarePrediction {
    int K = 0;
    int S = 0;
    int F = 0;
};
SquarePrediction predicted_squares(const ExtGroupMatrices& m, const SpinBasis& basis);

// Closed-form commutation relations keyed by the forms of the two matrices.
CommutationProfile predicted_commutation(const ExtGroupMatrices& m, const SpinBasis& basis);

enum class ExtClass { Z2Z2Z2, Z4Z2, Z8, D4, Q4, StarZ4Z2 };
std::string ext_class_name(ExtClass c);  // "Z2xZ2xZ2", "Z4xZ2", "Z8", "D4", "Q4", "*Z4xZ2"

struct ExtClassification {
    // Order-8 class label when the eight matrices are distinct up to sign, otherwise
    // the catalog name of the signed group generated by the distinct ones.
    std::string name;
    std::optional<ExtClass> cls;
    std::size_t distinct = 0;  // matrices distinct up to sign, identity included
    bool abelian = true;
    int order2 = 0;  // among the non-identity representatives
    int order4 = 0;
    std::size_t signed_order = 0;   // order of the group generated including -I
    std::string signed_group;       // catalog name of that group, "" if outside
    bool faithful() const { return distinct == 8; }
    std::string order_structure() const { return "(" + std::to_string(order2) + "," + std::to_string(order4) + ")"; }
};

// Classification by (abelian?, order-2 count, order-4 count) where the order
// of X is the least k with X^k = +I, over the matrices distinct up to sign.
// Throws std::runtime_error when eight distinct matrices give a structure
// outside the order-8 table.
ExtClassification classify_ext_group(const std::vector<Matrix>& elems);
ExtClassification classify_ext_group(const ExtGroupMatrices& m);

struct Order8Row {
    ExtClass cls;
    bool abelian;
    int order2;
    int order4;
    int order8;
};
const std::vector<Order8Row>& order8_table();

// Admissible plus/minus patterns: 7, 5, 3 or 1 plus signs.
bool admissible_signature(const SignatureVector& s);

struct CensusEntry {
    SignatureVector sig;
    std::set<std::string> classes;
    std::set<std::string> where;  // "Cl(p,q)"
};

struct SignatureCensus {
    std::size_t instances = 0;
    std::map<SignatureVector, CensusEntry> realized;
    std::vector<std::string> inadmissible;  // descriptions of falsifying instances
    bool ok() const { return inadmissible.empty() && realized.size() <= 64; }
};

// Sweeps every even (p,q) with p+q <= max_n and ring R or H over all spinbasis
// variants. Bound: max_n <= 10. Uses up to `threads` workers.
SignatureCensus enumerate_signatures(int max_n, unsigned threads = 1);

}  // namespace cliffork
