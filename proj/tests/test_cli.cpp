#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "cliffork/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace cliffork;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    const Run verb = run({"frobnicate"});
    CHECK(verb.code == 2);
    CHECK(verb.err.find("unknown verb") != std::string::npos);
    CHECK(verb.err.find("Usage") != std::string::npos);
    CHECK(run({"classify", "--p", "1", "--q", "3", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"classify", "--p", "1"}).code == 2);
    CHECK(run({"table", "--kind", "nope"}).code == 2);
    CHECK(run({"classify", "--p", "1", "--q", "3", "--format", "xml"}).code == 2);
    CHECK(run({"quotient", "--complex", "3", "--mark", "1,1"}).code == 2);
    CHECK(run({"quotient", "--p", "2", "--q", "0"}).code == 2);
    CHECK(run({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("help exits with 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("classify Cl(1,3)") {
    const Run md = run({"classify", "--p", "1", "--q", "3"});
    CHECK(md.code == 0);
    CHECK(md.out.find("| ring | H |") != std::string::npos);
    CHECK(md.out.find("| type (p-q mod 8) | 6 |") != std::string::npos);
    const Run js = run({"classify", "--p", "1", "--q", "3", "--format", "json"});
    REQUIRE(js.code == 0);
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["schema"] == kJsonSchemaVersion);
    CHECK(j["ring"] == "H");
    CHECK(j["signature"]["type"] == 6);
    CHECK(j["salingaros_family"] == "N_even");
}

TEST_CASE("tables regenerate without counterexamples") {
    for (const char* kind : {"rings", "salingaros", "representations", "quotient"}) {
        const Run r = run({"table", "--kind", kind, "--max", "7"});
        CHECK_MESSAGE(r.code == 0, kind, r.err);
    }
    const Run js = run({"table", "--kind", "rings", "--max", "7", "--format", "json"});
    const auto j = nlohmann::json::parse(js.out);
    CHECK(j["cells"].size() == 64);
    CHECK(j["cells"][0]["label"] == "R");
}

TEST_CASE("bundled basis equals the gamma matrices") {
    const SpinBasis asset = load_basis_json(cli::gamma_basis_json());
    CHECK(asset.mats == gamma_matrices());
    CHECK(asset.sig == Signature(1, 3));
    CHECK(read_file(CLIFFORK_GAMMA_ASSET) == cli::gamma_basis_json());
}

TEST_CASE("ext-group with the bundled basis") {
    const Run r = run({"ext-group", "--p", "1", "--q", "3", "--basis", "gamma", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["abc_signature"] == "(-,-,+,-,-,+,+)");
    CHECK(j["class"] == "*Z4xZ2");
    CHECK(j["order_structure"] == "(3,4)");
    CHECK(j["elements"]["W"]["units"] == "1,2,3,4");
    CHECK(j["table"][1][3] == "-E");
}

TEST_CASE("ext-group from a basis file") {
    const std::string path = (std::filesystem::temp_directory_path() / "cliffork_test_basis.json").string();
    {
        std::ofstream f(path);
        f << basis_to_json(gamma_basis());
    }
    const Run r = run({"ext-group", "--basis", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("signature: (-,-,+,-,-,+,+)") != std::string::npos);
    CHECK(run({"ext-group", "--basis", "missing.json"}).code == 2);
    CHECK(run({"ext-group", "--p", "2", "--q", "2", "--basis", "gamma"}).code == 2);
}

TEST_CASE("malformed basis files are rejected") {
    CHECK_THROWS_AS(load_basis_json("{"), BasisFileError);
    CHECK_THROWS_AS(load_basis_json(R"({"matrices": [[["1","0"]]]})"), BasisFileError);
    CHECK_THROWS_AS(load_basis_json(R"({"matrices": [[["x"]]]})"), BasisFileError);
    CHECK_THROWS_AS(load_basis_json(R"({"p": 1, "q": 0, "matrices": [[["1","0"],["0","-1"]],[["1","0"],["0","1"]]]})"),
                    SpinBasisError);
}

TEST_CASE("cover verbs") {
    const Run pt = run({"cover", "--p", "1", "--q", "3", "--format", "json"});
    CHECK(pt.code == 0);
    CHECK(nlohmann::json::parse(pt.out)["consistent"] == true);
    const Run cpt = run({"cover", "--p", "1", "--q", "3", "--cpt", "--format", "json"});
    CHECK(cpt.code == 0);
    CHECK(nlohmann::json::parse(cpt.out)["cover_group"] == "*Z4xZ2xZ2");
    const Run odd = run({"cover", "--p", "3", "--q", "0", "--format", "json"});
    CHECK(odd.code == 0);
    CHECK(nlohmann::json::parse(odd.out)["odd_decomposition"]["unitary_label"] == "SU(2) u iSU(2)");
    const Run c = run({"cover", "--complex", "4"});
    CHECK(c.code == 0);
    CHECK(c.out.find("(+,+,+)") != std::string::npos);
}

TEST_CASE("quotient output carries the representation table and failing predicates as JSON") {
    const Run r = run({"quotient", "--p", "1", "--q", "0", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["quotient_table"]["cells"].size() == 64);
    CHECK(j["reports"][0]["group"] == "pin^b");
    if (r.code == 1) {
        const auto ce = nlohmann::json::parse(r.err);
        CHECK(ce["kind"] == "counterexample");
        CHECK_FALSE(ce["counterexamples"].empty());
    } else {
        CHECK(r.code == 0);
    }
    const Run m = run({"quotient", "--complex", "3", "--mark", "1,2"});
    CHECK(m.out.find("Quotient representations of Pin(p,q)") != std::string::npos);
    CHECK(m.code == 1);
    CHECK(nlohmann::json::parse(m.err)["verb"] == "quotient");
}

TEST_CASE("verify runs a single suite") {
    const Run r = run({"verify", "--suite", "salingaros"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS 8 salingaros", 0) == 0);
    const Run n = run({"verify", "--suite", "8", "--format", "json"});
    CHECK(nlohmann::json::parse(n.out)["suites"][0]["suite"] == "salingaros");
}

TEST_CASE("output is byte-identical across runs") {
    const std::vector<std::vector<std::string>> cmds{
        {"classify", "--p", "2", "--q", "5", "--format", "json"},
        {"table", "--kind", "representations", "--max", "9"},
        {"ext-group", "--p", "1", "--q", "3", "--basis", "gamma"},
        {"cover", "--p", "2", "--q", "4", "--cpt", "--format", "json"},
        {"quotient", "--p", "3", "--q", "2", "--format", "json"},
        {"verify", "--suite", "cpt-table"},
    };
    for (const auto& c : cmds) {
        const Run a = run(c), b = run(c);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
    }
}
