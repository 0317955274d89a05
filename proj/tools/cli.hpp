#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliffork::cli {

// Exit codes: 0 success, 1 a checked invariant failed (counterexample JSON on
// err), 2 usage or input error (message and usage text on err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

// The bundled gamma basis as JSON text.
const char* gamma_basis_json();

}  // namespace cliffork::cli
