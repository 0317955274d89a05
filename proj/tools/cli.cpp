#include "cli.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "cliffork/io.hpp"
#include "cliffork/printed.hpp"
#include "gamma_basis_asset.hpp"
#include "json.hpp"

namespace cliffork::cli {

namespace {

using ojson = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::optional<int> p;
    std::optional<int> q;
    std::optional<int> complex_n;
    std::string mark;
    std::string basis;
    std::string kind = "rings";
    int max = 7;
    std::string suite = "all";
    std::string format = "markdown";
    bool cpt = false;
};

struct Outcome {
    std::string report;
    std::string invariant;
    std::vector<std::string> counterexamples;
};

bool json_format(const Options& o) { return o.format == "json"; }

Signature real_signature(const Options& o) {
    if (o.complex_n) throw UsageError("--complex is not accepted by this verb");
    if (!o.p || !o.q) throw UsageError("--p and --q are required");
    if (*o.p < 0 || *o.q < 0) throw UsageError("--p and --q must be non-negative");
    return Signature(*o.p, *o.q);
}

// --complex N with an optional --mark P,Q naming the real subalgebra; without
// --mark the subalgebra is Cl(N,0).
Signature complex_signature(const Options& o) {
    const int n = *o.complex_n;
    if (n < 0) throw UsageError("--complex must be non-negative");
    if (o.p || o.q) throw UsageError("use --mark P,Q together with --complex instead of --p/--q");
    if (o.mark.empty()) return Signature(n, 0, Field::Complex);
    const auto comma = o.mark.find(',');
    if (comma == std::string::npos) throw UsageError("--mark expects P,Q");
    int mp = 0;
    int mq = 0;
    try {
        std::size_t used = 0;
        mp = std::stoi(o.mark.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("p");
        const std::string rest = o.mark.substr(comma + 1);
        mq = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("q");
    } catch (const std::exception&) {
        throw UsageError("--mark expects two integers P,Q");
    }
    if (mp < 0 || mq < 0 || mp + mq != n) throw UsageError("--mark P,Q needs P,Q >= 0 and P+Q equal to --complex");
    return Signature(mp, mq, Field::Complex);
}

Signature any_signature(const Options& o) { return o.complex_n ? complex_signature(o) : real_signature(o); }

SpinBasis load_basis(const Options& o) {
    SpinBasis b;
    if (o.basis == "gamma") {
        b = load_basis_json(gamma_basis_json(), "bundled gamma basis");
    } else if (!o.basis.empty()) {
        b = load_basis_file(o.basis);
    } else {
        const Signature s = any_signature(o);
        return build_spinbasis(Signature(s.p, s.q));
    }
    if (o.complex_n) {
        const Signature s = complex_signature(o);
        if (s.p != b.sig.p || s.q != b.sig.q) throw UsageError("basis metric " + b.sig.to_string() + " does not match --mark");
    } else if ((o.p && *o.p != b.sig.p) || (o.q && *o.q != b.sig.q)) {
        throw UsageError("basis metric " + b.sig.to_string() + " does not match --p/--q");
    }
    return b;
}

const printed::Table* printed_table(TableKind kind) {
    switch (kind) {
        case TableKind::Rings: return &printed::kRings;
        case TableKind::Salingaros: return &printed::kSalingaros;
        case TableKind::Representations: return &printed::kRepresentations;
        case TableKind::Quotient: return &printed::kQuotient;
    }
    return nullptr;
}

Outcome do_classify(const Options& o) {
    const ClassifyReport r = classify(real_signature(o));
    return {json_format(o) ? to_json(r) : to_markdown(r), "", {}};
}

Outcome do_table(const Options& o) {
    if (o.max < 0 || o.max > 15) throw UsageError("--max must lie in 0..15");
    TableKind kind;
    try {
        kind = parse_table_kind(o.kind);
    } catch (const std::exception&) {
        throw UsageError("unknown --kind '" + o.kind + "' (rings, salingaros, representations, quotient)");
    }
    const PeriodicTable t = periodic_table(o.max, o.max, kind);
    Outcome out{json_format(o) ? to_json(t) : to_markdown(t), "cells agree with the printed table", {}};
    const printed::Table& ref = *printed_table(kind);
    const int lim = std::min(o.max, 7);
    for (int q = 0; q <= lim; ++q)
        for (int p = 0; p <= lim; ++p)
            if (t.at(p, q).label != ref[q][p])
                out.counterexamples.push_back("(" + std::to_string(p) + "," + std::to_string(q) + "): printed " +
                                              ref[q][p] + ", computed " + t.at(p, q).label);
    return out;
}

Outcome do_ext_group(const Options& o) {
    const ExtGroupReport r = ext_group_report(load_basis(o));
    Outcome out{json_format(o) ? to_json(r) : to_markdown(r), "extended group is faithful with an admissible signature",
                {}};
    if (!r.classification.faithful())
        out.counterexamples.push_back("only " + std::to_string(r.classification.distinct) +
                                      " of 8 elements are distinct up to sign");
    if (!admissible_signature(r.signature))
        out.counterexamples.push_back("signature " + r.signature.to_string() + " is not an admissible pattern");
    return out;
}

Outcome do_cover(const Options& o) {
    CoveringReport r;
    std::optional<OddDecompositionReport> odd;
    const bool have_basis = !o.basis.empty();
    if (o.cpt) {
        r = have_basis ? cpt_structure(load_basis(o)) : cpt_structure([&] {
            const Signature s = any_signature(o);
            return Signature(s.p, s.q);
        }());
    } else if (have_basis) {
        r = pt_structure(load_basis(o));
    } else if (o.complex_n && o.mark.empty()) {
        r = pt_structure_complex(*o.complex_n);
    } else {
        const Signature s = any_signature(o);
        r = s.complex() ? pt_structure_complex(s.n()) : pt_structure(s);
        if (!s.complex() && s.n() % 2 == 1) odd = odd_dimensional_decomposition_report(s);
    }
    Outcome out;
    out.invariant = "printed prediction agrees with the computed signs";
    if (!r.consistent()) {
        out.counterexamples.push_back(r.subject + ": predicted " + (r.predicted ? r.predicted->to_string() : "-") +
                                      ", computed " + (r.computed ? r.computed->to_string() : "-"));
    }
    if (odd && !odd->label_matches_omega)
        out.counterexamples.push_back(odd->unitary_label + " disagrees with omega^2 = " + std::to_string(odd->omega_square));
    if (json_format(o)) {
        ojson j = ojson::parse(to_json(r));
        if (odd) {
            ojson d = ojson::parse(to_json(*odd));
            d.erase("schema");
            d.erase("kind");
            j["odd_decomposition"] = std::move(d);
        }
        out.report = j.dump(2) + "\n";
    } else {
        out.report = to_markdown(r);
        if (odd) out.report += "\n" + to_markdown(*odd);
    }
    return out;
}

Outcome do_quotient(const Options& o) {
    const Signature s = any_signature(o);
    std::vector<QuotientReport> reports;
    Outcome out;
    out.invariant = "quotient identities, homomorphism and transfer predicates";
    for (const EpsilonContext& ctx : contexts_for(s)) {
        QuotientReport r = quotient_report(ctx);
        const std::string subject = r.transfer.subject;
        if (!r.idempotent_check.ok()) out.counterexamples.push_back(subject + ": lambda identities fail");
        if (ctx.source.n() <= 5) {
            const HomomorphismCheck h = check_homomorphism(ctx);
            if (!h.ok()) out.counterexamples.push_back(subject + ": epsilon map is not a homomorphism (" + h.first_failure + ")");
        }
        for (const TransferEntry& t : r.transfer.entries)
            if (!t.agrees())
                out.counterexamples.push_back(subject + ": " + auto_symbol(t.map) + " printed " +
                                              (t.printed ? "transfers" : "blocked") + ", fixed-point test " +
                                              (t.fixed ? "transfers" : "blocked"));
        if (!r.group.labels_agree())
            out.counterexamples.push_back(subject + ": group " + r.group.listed_label + " vs derived " +
                                          r.group.derived_label);
        reports.push_back(std::move(r));
    }
    const PeriodicTable t7 = periodic_table(7, 7, TableKind::Quotient);
    if (json_format(o)) {
        ojson j = ojson::parse(to_json(reports));
        ojson t = ojson::parse(to_json(t7));
        t.erase("schema");
        t.erase("kind");
        j["quotient_table"] = std::move(t);
        out.report = j.dump(2) + "\n";
    } else {
        out.report = to_markdown(reports) + "## Quotient representations of Pin(p,q)\n\n" + to_markdown(t7);
    }
    return out;
}

Outcome do_verify(const Options& o) {
    VerifyOptions vo;
    vo.threads = default_threads();
    std::vector<SuiteResult> results;
    if (o.suite == "all") {
        results = run_all(vo);
    } else {
        try {
            results.push_back(run_suite(o.suite, vo));
        } catch (const std::invalid_argument&) {
            std::string names;
            for (const auto& n : suite_names()) names += " " + n;
            throw UsageError("unknown --suite '" + o.suite + "' (all" + names + ")");
        }
    }
    Outcome out;
    out.invariant = "acceptance suites";
    if (json_format(o)) {
        out.report = to_json(results);
    } else {
        for (const SuiteResult& r : results)
            out.report += (r.pass ? "PASS " : "FAIL ") + std::to_string(r.id) + " " + r.name + "\n";
        out.report += "\n" + to_markdown(results);
    }
    for (const SuiteResult& r : results) {
        if (r.pass) continue;
        if (!r.within_budget()) out.counterexamples.push_back(r.name + ": exceeded its time budget");
        for (const auto& c : r.counterexamples) out.counterexamples.push_back(r.name + ": " + c);
        if (r.counterexamples.empty() && r.within_budget())
            out.counterexamples.push_back(r.name + ": " + std::to_string(r.failures) + " failures");
    }
    return out;
}

std::string counterexample_json(const std::string& verb, const Outcome& o) {
    ojson j;
    j["schema"] = kJsonSchemaVersion;
    j["kind"] = "counterexample";
    j["verb"] = verb;
    j["invariant"] = o.invariant;
    j["counterexamples"] = o.counterexamples;
    return j.dump(2) + "\n";
}

}  // namespace

const char* gamma_basis_json() { return assets::kGammaBasisJson; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Clifford algebra classification, extended automorphism groups and Pin quotients", "cliffork"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_common = [&](CLI::App* sub) { sub->add_option("--format", o.format, "markdown or json")->check(CLI::IsMember({"markdown", "json"})); };
    auto add_sig = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "generators squaring to +1");
        sub->add_option("--q", o.q, "generators squaring to -1");
    };
    auto add_complex = [&](CLI::App* sub) {
        sub->add_option("--complex", o.complex_n, "complex algebra C_N");
        sub->add_option("--mark", o.mark, "real subalgebra Cl(P,Q) marked inside C_N, as P,Q");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "ring, Salingaros class and representation labels of Cl(p,q)");
    add_sig(classify_cmd);
    add_common(classify_cmd);

    CLI::App* table_cmd = app.add_subcommand("table", "periodic tables for 0 <= p,q <= max");
    table_cmd->add_option("--kind", o.kind, "rings, salingaros, representations or quotient");
    table_cmd->add_option("--max", o.max, "largest p and q");
    add_common(table_cmd);

    CLI::App* ext_cmd = app.add_subcommand("ext-group", "extended automorphism group of a spinbasis");
    add_sig(ext_cmd);
    add_complex(ext_cmd);
    ext_cmd->add_option("--basis", o.basis, "'gamma' for the bundled gamma basis, or a JSON basis file");
    add_common(ext_cmd);

    CLI::App* cover_cmd = app.add_subcommand("cover", "PT or CPT structure of the Pin double cover");
    add_sig(cover_cmd);
    add_complex(cover_cmd);
    cover_cmd->add_option("--basis", o.basis, "'gamma' for the bundled gamma basis, or a JSON basis file");
    cover_cmd->add_flag("--cpt", o.cpt, "extended CPT structure instead of PT");
    add_common(cover_cmd);

    CLI::App* quot_cmd = app.add_subcommand("quotient", "epsilon quotient of an odd-dimensional algebra");
    add_sig(quot_cmd);
    add_complex(quot_cmd);
    add_common(quot_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance suites");
    verify_cmd->add_option("--suite", o.suite, "suite name, its number, or all");
    add_common(verify_cmd);

    if (!args.empty() && !args.front().starts_with("-") && app.get_subcommand_no_throw(args.front()) == nullptr) {
        err << "error: unknown verb '" << args.front() << "'\n\n" << app.help();
        return 2;
    }
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string verb = chosen->get_name();
    Outcome outcome;
    try {
        if (verb == "classify") outcome = do_classify(o);
        else if (verb == "table") outcome = do_table(o);
        else if (verb == "ext-group") outcome = do_ext_group(o);
        else if (verb == "cover") outcome = do_cover(o);
        else if (verb == "quotient") outcome = do_quotient(o);
        else outcome = do_verify(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n\n" << chosen->help();
        return 2;
    } catch (const CoveringError& e) {
        outcome.invariant = "signature pattern lies in the cover table";
        outcome.counterexamples.push_back(e.what());
        err << counterexample_json(verb, outcome);
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << outcome.report;
    if (!outcome.counterexamples.empty()) {
        err << counterexample_json(verb, outcome);
        return 1;
    }
    return 0;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace cliffork::cli
