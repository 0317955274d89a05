#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffork/algebra.hpp"
#include "cliffork/classification.hpp"

namespace cliffork {

// Members of the extended automorphism group as bit masks: bit 0 the
// involution (star, P), bit 1 the reversion (tilde, T), bit 2 the
// pseudoautomorphism (bar, C). Composition is XOR of the masks.
using AutoMask = std::uint8_t;
inline constexpr AutoMask kStar = 1;
inline constexpr AutoMask kTilde = 2;
inline constexpr AutoMask kBar = 4;

// "Id", "star", "tilde", "tilde-star", "bar", "bar-star", "bar-tilde", "bar-tilde-star".
std::string auto_name(AutoMask m);
// Physical symbols "1", "P", "T", "PT", "C", "CP", "CT", "CPT".
std::string auto_symbol(AutoMask m);
// Letters a..g of the covering labels (Id has none).
char auto_letter(AutoMask m);
// Applies the composite map to x.
MultiVector apply_auto(AutoMask m, const MultiVector& x);

enum class Target {
    DropLast,  // drop e_n: Cl(p,q) -> Cl(p,q-1), C_n -> C_{n-1}
    EvenPart,  // Cl(p,q) -> Cl+(p,q) = Cl(q,p-1)
};
std::string target_name(Target t);

class QuotientError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct EpsilonContext {
    // Odd-dimensional source: a real Cl(p,q) of type 1 or 5, or C_n marked by (p,q).
    Signature source;
    Signature target;
    Target route = Target::DropLast;
    // 1 when omega^2 = +1, i when omega^2 = -1.
    Gaussian epsilon;
    // epsilon * omega in the source.
    MultiVector eps_omega;
    // EvenPart route: image of each even source blade (indexed by its bits)
    // as a signed target blade.
    std::vector<SignedBlade> even_image;
    std::vector<std::string> notes;

    // Type of the real subalgebra (p - q mod 8).
    int marked_type() const { return source.type(); }
};

// Real types 3 and 7 have an imaginary central volume element; their
// context is built on C_n marked by (p,q). Throws QuotientError for even n,
// or when the requested route needs a generator the signature lacks.
EpsilonContext make_context(const Signature& sig, Target route = Target::DropLast);
// Every route available for the signature (one or two contexts).
std::vector<EpsilonContext> contexts_for(const Signature& sig);

struct Idempotents {
    MultiVector plus;
    MultiVector minus;
};

// lambda+- = (1 +- eps omega)/2. Throws QuotientError when (eps omega)^2 != 1.
Idempotents central_idempotents(const EpsilonContext& ctx);

struct IdempotentCheck {
    bool plus_idempotent = false;
    bool minus_idempotent = false;
    bool annihilate = false;
    bool sum_is_one = false;
    bool central = false;
    bool ok() const { return plus_idempotent && minus_idempotent && annihilate && sum_is_one && central; }
};
IdempotentCheck check_idempotents(const EpsilonContext& ctx);

// x = A1 + eps omega A2 with A1, A2 in the span the route keeps.
struct EpsilonSplit {
    MultiVector a1;  // in the source
    MultiVector a2;  // in the source
};
EpsilonSplit epsilon_split(const MultiVector& x, const EpsilonContext& ctx);

// A1 + eps omega A2 -> A1 + A2, expressed in the target algebra.
MultiVector epsilon_map(const MultiVector& x, const EpsilonContext& ctx);

struct HomomorphismCheck {
    std::size_t pairs = 0;
    std::size_t failures = 0;
    bool unit_to_one = false;        // eps omega -> 1
    bool surjective = false;         // every target blade is hit up to sign
    bool kernel_ok = false;          // x - eps omega x -> 0 on every blade
    bool kernel_dimension_ok = false;  // rank of the map equals 2^{n-1}
    std::string first_failure;
    bool ok() const { return failures == 0 && unit_to_one && surjective && kernel_ok && kernel_dimension_ok; }
};
// Exhaustive over blade pairs. Requires n <= 7.
HomomorphismCheck check_homomorphism(const EpsilonContext& ctx);

struct TransferEntry {
    AutoMask map = 0;
    bool printed = false;  // closed-form predicate as printed
    bool fixed = false;    // map(eps omega) == eps omega
    std::string reason;    // parity clause behind the printed predicate
    bool agrees() const { return printed == fixed; }
};

struct TransferReport {
    std::string subject;
    std::array<TransferEntry, 7> entries{};  // masks 1..7
    int disagreements() const;
    // Masks whose printed predicate says "transfers".
    std::vector<AutoMask> printed_set() const;
    std::vector<AutoMask> fixed_set() const;
};
TransferReport transfer_report(const EpsilonContext& ctx);

struct QuotientClass {
    std::string label;    // "a1", "e2", ...
    std::string symbols;  // "{T, C~I}"
    std::string ring;     // marked ring, e.g. "2R"
};
QuotientClass quotient_class(const EpsilonContext& ctx);

struct QuotientGroup {
    std::string listed_label;  // printed label, "pin^{b,e,g}"
    std::string derived_label;  // from the printed transfer set after the C~I reduction
    std::vector<AutoMask> elements;  // Id first, then the surviving maps
    bool is_group = false;
    // Cayley table of `elements` under composition, as symbols; a product
    // outside the set is shown in parentheses.
    std::vector<std::vector<std::string>> cayley;
    std::string cover;  // "Z2", "Z2xZ2", "Z2xZ2xZ2" for groups, "" otherwise
    std::string note;
    bool labels_agree() const { return listed_label == derived_label; }
};
QuotientGroup quotient_group(const EpsilonContext& ctx);

}  // namespace cliffork
