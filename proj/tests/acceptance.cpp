#include <cstdio>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "cliffork/io.hpp"

using namespace cliffork;

namespace {

// End-to-end part of criteria 1 and 2: the CLI must regenerate the tables and
// the bundled basis must be the gamma basis the suites use.
std::vector<std::string> cli_checks(int id) {
    std::vector<std::string> problems;
    auto call = [&](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        if (code != 0) {
            std::string cmd;
            for (const auto& a : args) cmd += " " + a;
            problems.push_back("cliffork" + cmd + " exited " + std::to_string(code));
        }
        return out.str();
    };
    if (id == 1) {
        for (const char* kind : {"rings", "salingaros", "representations"}) call({"table", "--kind", kind, "--max", "7"});
    } else if (id == 2) {
        if (load_basis_json(cli::gamma_basis_json()).mats != gamma_matrices())
            problems.push_back("bundled basis differs from the gamma matrices");
        const std::string md = call({"ext-group", "--p", "1", "--q", "3", "--basis", "gamma"});
        if (md.find("signature: (-,-,+,-,-,+,+)") == std::string::npos) problems.push_back("CLI signature line missing");
    }
    return problems;
}

}  // namespace

int main() {
    VerifyOptions opts;
    opts.threads = default_threads();
    bool all = true;
    std::vector<SuiteResult> results;
    for (std::size_t i = 0; i < suite_names().size(); ++i) {
        SuiteResult r = run_suite(suite_names()[i], opts);
        for (const std::string& p : cli_checks(r.id)) {
            r.pass = false;
            ++r.failures;
            r.counterexamples.push_back(p);
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.3fs of %.0fs", r.seconds, r.budget_seconds);
        std::cout << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.checks
                  << " checks, " << r.failures << " failures, " << timing << (r.within_budget() ? "" : " OVER BUDGET")
                  << "\n";
        all = all && r.pass;
        results.push_back(std::move(r));
    }
    std::cout << "\n" << to_markdown(results);
    return all ? 0 : 1;
}
