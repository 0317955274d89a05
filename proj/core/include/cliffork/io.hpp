#pragma once

#include <string>
#include <vector>

#include "cliffork/classification.hpp"
#include "cliffork/coverings.hpp"
#include "cliffork/ext.hpp"
#include "cliffork/quotient.hpp"
#include "cliffork/spinor.hpp"
#include "cliffork/verify.hpp"

namespace cliffork {

inline constexpr int kJsonSchemaVersion = 1;

class BasisFileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Basis files are JSON objects
//   {"p": 1, "q": 3, "matrices": [[["1","0",...], ...], ...]}
// with entries in Gaussian text form ("1", "-i", "1/2+i"). Throws
// BasisFileError for malformed files and SpinBasisError for invalid bases.
SpinBasis load_basis_json(const std::string& text, const std::string& provenance = "basis file");
SpinBasis load_basis_file(const std::string& path);
std::string basis_to_json(const SpinBasis& basis);

struct ClassifyReport {
    Signature sig;
    AlgebraClass algebra;
    SalingarosLabel salingaros;
    GroupCenter center = GroupCenter::Z2;
    int idempotent_factors = 0;
    std::string representation;
    std::string quotient_representation;
};
ClassifyReport classify(const Signature& sig);

struct ExtGroupReport {
    SpinBasis basis;
    ExtGroupMatrices matrices;
    SignatureVector signature;
    ExtClassification classification;
    CommutationProfile commutation;
    // Signed multiplication table over I, W, E, C, Pi, K, S, F.
    std::vector<std::vector<std::string>> table;
};
ExtGroupReport ext_group_report(const SpinBasis& basis);

struct QuotientReport {
    EpsilonContext context;
    Idempotents idempotents;
    IdempotentCheck idempotent_check;
    TransferReport transfer;
    QuotientClass cls;
    QuotientGroup group;
};
QuotientReport quotient_report(const EpsilonContext& ctx);

std::string to_json(const ClassifyReport& r);
std::string to_json(const PeriodicTable& t);
std::string to_json(const ExtGroupReport& r);
std::string to_json(const CoveringReport& r);
std::string to_json(const OddDecompositionReport& r);
std::string to_json(const std::vector<QuotientReport>& r);
std::string to_json(const std::vector<SuiteResult>& r);

std::string to_markdown(const ClassifyReport& r);
std::string to_markdown(const ExtGroupReport& r);
std::string to_markdown(const CoveringReport& r);
std::string to_markdown(const OddDecompositionReport& r);
std::string to_markdown(const std::vector<QuotientReport>& r);
std::string to_markdown(const std::vector<SuiteResult>& r);

}  // namespace cliffork
