#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliffork/spinor.hpp"

namespace cliffork {

struct SuiteResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double seconds = 0.0;
    double budget_seconds = 0.0;
    // One line per sub-check, "label: detail".
    std::vector<std::string> details;
    // At most kMaxCounterexamples entries.
    std::vector<std::string> counterexamples;

    bool within_budget() const { return seconds <= budget_seconds; }
};

inline constexpr std::size_t kMaxCounterexamples = 12;

struct VerifyOptions {
    unsigned threads = 1;
    // Largest even p+q swept by the spinbasis suites.
    int max_n = 8;
};

// Worker count from CLIFFORK_THREADS, falling back to the hardware count.
unsigned default_threads();

// "tables", "gamma-ext", "cpt-table", "pseudo", "conditions", "commutation",
// "census", "salingaros", "quotient", "core", in acceptance order.
const std::vector<std::string>& suite_names();

// Accepts a name or its 1-based position. Throws std::invalid_argument for
// unknown suites.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts = {});
std::vector<SuiteResult> run_all(const VerifyOptions& opts = {});

// The four gamma matrices of the Dirac algebra with the spacetime subalgebra
// Cl(1,3) marked (gamma_0 squares to +I, gamma_1..3 to -I).
std::vector<Matrix> gamma_matrices();
SpinBasis gamma_basis();

}  // namespace cliffork
