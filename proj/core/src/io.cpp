#include "cliffork/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cliffork {

using ojson = nlohmann::ordered_json;

namespace {

ojson header(const char* kind) {
    ojson j;
    j["schema"] = kJsonSchemaVersion;
    j["kind"] = kind;
    return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

ojson signature_json(const Signature& s) {
    ojson j;
    j["p"] = s.p;
    j["q"] = s.q;
    j["field"] = s.complex() ? "complex" : "real";
    j["type"] = s.type();
    return j;
}

ojson matrix_json(const Matrix& m) {
    ojson rows = ojson::array();
    for (std::size_t r = 0; r < m.dim(); ++r) {
        ojson row = ojson::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return rows;
}

ojson mv_json(const MultiVector& x) {
    ojson j = ojson::object();
    for (const auto& [b, c] : x.terms()) j[b.to_string()] = c.to_string();
    return j;
}

std::string masks_to_symbols(const std::vector<AutoMask>& ms) {
    std::string s;
    for (AutoMask m : ms) s += (s.empty() ? "" : ", ") + auto_symbol(m);
    return "{" + s + "}";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

SpinBasis load_basis_json(const std::string& text, const std::string& provenance) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw BasisFileError(std::string("basis file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("matrices") || !j["matrices"].is_array())
        throw BasisFileError("basis file needs a \"matrices\" array");
    std::vector<Matrix> mats;
    for (const auto& jm : j["matrices"]) {
        if (!jm.is_array() || jm.empty()) throw BasisFileError("each matrix must be a non-empty array of rows");
        std::vector<std::vector<Gaussian>> rows;
        for (const auto& jr : jm) {
            if (!jr.is_array() || jr.size() != jm.size()) throw BasisFileError("matrices must be square");
            std::vector<Gaussian> row;
            for (const auto& e : jr) {
                try {
                    row.push_back(e.is_number_integer() ? Gaussian(e.get<std::int64_t>()) : Gaussian::parse(e.get<std::string>()));
                } catch (const std::exception& ex) {
                    throw BasisFileError(std::string("bad matrix entry: ") + ex.what());
                }
            }
            rows.push_back(std::move(row));
        }
        mats.push_back(Matrix::from_rows(rows));
    }
    std::optional<Signature> expected;
    if (j.contains("p") || j.contains("q")) {
        if (!j.contains("p") || !j.contains("q") || !j["p"].is_number_integer() || !j["q"].is_number_integer())
            throw BasisFileError("\"p\" and \"q\" must both be integers");
        expected = Signature(j["p"].get<int>(), j["q"].get<int>());
    }
    return load_spinbasis(std::move(mats), expected, provenance);
}

SpinBasis load_basis_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw BasisFileError("cannot open basis file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_basis_json(ss.str(), path);
}

std::string basis_to_json(const SpinBasis& basis) {
    ojson j;
    j["p"] = basis.sig.p;
    j["q"] = basis.sig.q;
    ojson mats = ojson::array();
    for (const Matrix& m : basis.mats) mats.push_back(matrix_json(m));
    j["matrices"] = std::move(mats);
    return dump(j);
}

ClassifyReport classify(const Signature& sig) {
    ClassifyReport r;
    r.sig = Signature(sig.p, sig.q);
    r.algebra = division_ring(r.sig);
    r.salingaros = salingaros_type(r.sig);
    r.center = group_center_type(r.sig);
    r.idempotent_factors = idempotent_factor_count(r.sig);
    r.representation = cell_label(r.sig, TableKind::Representations);
    r.quotient_representation = cell_label(r.sig, TableKind::Quotient);
    return r;
}

ExtGroupReport ext_group_report(const SpinBasis& basis) {
    ExtGroupReport r{basis, ext_group(basis), {}, {}, {}, {}};
    r.signature = signature_vector(r.matrices);
    r.classification = classify_ext_group(r.matrices);
    r.commutation = commutation_profile(r.matrices);
    std::vector<std::string> labels;
    for (ExtElement e : kExtElements) labels.push_back(element_name(e));
    r.table = signed_product_table(r.matrices.all(), labels);
    return r;
}

QuotientReport quotient_report(const EpsilonContext& ctx) {
    return QuotientReport{ctx,
                          central_idempotents(ctx),
                          check_idempotents(ctx),
                          transfer_report(ctx),
                          quotient_class(ctx),
                          quotient_group(ctx)};
}

std::string to_json(const ClassifyReport& r) {
    ojson j = header("classify");
    j["signature"] = signature_json(r.sig);
    j["ring"] = ring_name(r.algebra.ring);
    j["simple"] = r.algebra.simple;
    j["matrix_dim"] = r.algebra.matrix_dim;
    j["algebra"] = r.algebra.label();
    j["salingaros"] = r.salingaros.to_string();
    j["salingaros_family"] = family_name(r.salingaros.family);
    j["group_center"] = center_name(r.center);
    j["idempotent_factors"] = r.idempotent_factors;
    j["representation"] = r.representation;
    j["quotient_representation"] = r.quotient_representation;
    return dump(j);
}

std::string to_json(const PeriodicTable& t) {
    ojson j = header("table");
    j["table"] = table_kind_name(t.kind);
    j["p_max"] = t.p_max;
    j["q_max"] = t.q_max;
    ojson cells = ojson::array();
    for (int q = 0; q <= t.q_max; ++q) {
        for (int p = 0; p <= t.p_max; ++p) {
            const TableCell& c = t.at(p, q);
            ojson cell;
            cell["p"] = p;
            cell["q"] = q;
            cell["label"] = c.label;
            if (!c.note.empty()) cell["note"] = c.note;
            cells.push_back(std::move(cell));
        }
    }
    j["cells"] = std::move(cells);
    return dump(j);
}

std::string to_json(const ExtGroupReport& r) {
    ojson j = header("ext-group");
    j["signature"] = signature_json(r.basis.sig);
    j["ring"] = ring_name(r.matrices.ring);
    j["basis"] = r.basis.provenance;
    j["counts"] = {{"a", r.basis.a}, {"b", r.basis.b}, {"l", r.basis.l}, {"m", r.basis.m}, {"v", r.basis.v}, {"u", r.basis.u}};
    ojson elems = ojson::object();
    for (std::size_t k = 1; k < 8; ++k) {
        std::string units;
        for (int i = 0; i < r.basis.n(); ++i)
            if (r.matrices.units[k] & (1u << i)) units += (units.empty() ? "" : ",") + std::to_string(i + 1);
        ojson e;
        e["units"] = units;
        e["form"] = subset_name(r.matrices.form[k]);
        e["matrix"] = matrix_json(r.matrices[kExtElements[k]]);
        elems[element_name(kExtElements[k])] = std::move(e);
    }
    j["elements"] = std::move(elems);
    j["abc_signature"] = r.signature.to_string();
    j["class"] = r.classification.name;
    j["abelian"] = r.classification.abelian;
    j["order_structure"] = r.classification.order_structure();
    j["distinct_up_to_sign"] = r.classification.distinct;
    j["signed_group"] = r.classification.signed_group;
    j["signed_order"] = r.classification.signed_order;
    j["table"] = r.table;
    j["provenance"] = r.matrices.provenance;
    return dump(j);
}

namespace {

ojson covering_json(const CoveringReport& r) {
    ojson j = header("cover");
    j["subject"] = r.subject;
    if (r.predicted) j["predicted"] = r.predicted->to_string();
    if (r.computed) j["computed"] = r.computed->to_string();
    ojson adm = ojson::array();
    for (const AbcSignature& a : r.admissible) adm.push_back(a.to_string());
    j["admissible"] = std::move(adm);
    if (r.ext_signature) j["ext_signature"] = r.ext_signature->to_string();
    if (r.ext_abelian) j["ext_abelian"] = *r.ext_abelian;
    j["cover_group"] = r.cover_group;
    j["cliffordian"] = r.cliffordian;
    j["consistent"] = r.consistent();
    j["notes"] = r.notes;
    return j;
}

}  // namespace

std::string to_json(const CoveringReport& r) { return dump(covering_json(r)); }

std::string to_json(const OddDecompositionReport& r) {
    ojson j = header("odd-decomposition");
    j["signature"] = signature_json(r.sig);
    j["decompositions"] = r.decompositions;
    j["omega_square"] = r.omega_square;
    j["omega_central"] = r.omega_central;
    j["omega_in_pin"] = r.omega_in_pin;
    j["omega_odd"] = r.omega_odd;
    j["omega_unit"] = r.omega_unit;
    if (!r.unitary_label.empty()) j["unitary_label"] = r.unitary_label;
    j["label_matches_omega"] = r.label_matches_omega;
    return dump(j);
}

std::string to_json(const std::vector<QuotientReport>& reports) {
    ojson j = header("quotient");
    ojson arr = ojson::array();
    for (const QuotientReport& r : reports) {
        ojson e;
        e["source"] = signature_json(r.context.source);
        e["target"] = signature_json(r.context.target);
        e["route"] = target_name(r.context.route);
        e["epsilon"] = r.context.epsilon.to_string();
        e["lambda_plus"] = mv_json(r.idempotents.plus);
        e["lambda_minus"] = mv_json(r.idempotents.minus);
        e["idempotents_ok"] = r.idempotent_check.ok();
        ojson tr = ojson::array();
        for (const TransferEntry& t : r.transfer.entries) {
            ojson x;
            x["map"] = auto_name(t.map);
            x["symbol"] = auto_symbol(t.map);
            x["printed"] = t.printed;
            x["fixed_point"] = t.fixed;
            x["reason"] = t.reason;
            tr.push_back(std::move(x));
        }
        e["transfer"] = std::move(tr);
        e["class"] = r.cls.label;
        e["class_symbols"] = r.cls.symbols;
        e["marked_ring"] = r.cls.ring;
        e["group"] = r.group.listed_label;
        e["derived_group"] = r.group.derived_label;
        e["is_group"] = r.group.is_group;
        if (!r.group.cover.empty()) e["cover"] = r.group.cover;
        if (!r.group.note.empty()) e["group_note"] = r.group.note;
        e["cayley"] = r.group.cayley;
        e["notes"] = r.context.notes;
        arr.push_back(std::move(e));
    }
    j["reports"] = std::move(arr);
    return dump(j);
}

std::string to_json(const std::vector<SuiteResult>& results) {
    ojson j = header("verify");
    ojson arr = ojson::array();
    bool all = true;
    for (const SuiteResult& r : results) {
        ojson e;
        e["id"] = r.id;
        e["suite"] = r.name;
        e["pass"] = r.pass;
        e["checks"] = r.checks;
        e["failures"] = r.failures;
        e["budget_seconds"] = r.budget_seconds;
        e["within_budget"] = r.within_budget();
        e["details"] = r.details;
        e["counterexamples"] = r.counterexamples;
        arr.push_back(std::move(e));
        all = all && r.pass;
    }
    j["pass"] = all;
    j["suites"] = std::move(arr);
    return dump(j);
}

std::string to_markdown(const ClassifyReport& r) {
    std::ostringstream os;
    os << "| field | value |\n|---|---|\n";
    os << "| signature | " << r.sig.to_string() << " |\n";
    os << "| type (p-q mod 8) | " << r.sig.type() << " |\n";
    os << "| ring | " << ring_name(r.algebra.ring) << (r.algebra.simple ? "" : " (semi-simple)") << " |\n";
    os << "| algebra | " << r.algebra.label() << " |\n";
    os << "| finite group | " << r.salingaros.to_string() << " (" << family_name(r.salingaros.family) << ") |\n";
    os << "| group center | " << center_name(r.center) << " |\n";
    os << "| idempotent factors | " << r.idempotent_factors << " |\n";
    os << "| representation | " << r.representation << " |\n";
    os << "| quotient representation | " << r.quotient_representation << " |\n";
    return os.str();
}

std::string to_markdown(const ExtGroupReport& r) {
    std::ostringstream os;
    os << "## Extended automorphism group of " << r.basis.sig.to_string() << " (ring " << ring_name(r.matrices.ring) << ")\n\n";
    os << "basis: " << r.basis.provenance << "; a=" << r.basis.a << " b=" << r.basis.b << " l=" << r.basis.l
       << " m=" << r.basis.m << " v=" << r.basis.v << " u=" << r.basis.u << "\n\n";
    os << "| element | units | form |\n|---|---|---|\n";
    for (std::size_t k = 1; k < 8; ++k) {
        std::string units;
        for (int i = 0; i < r.basis.n(); ++i)
            if (r.matrices.units[k] & (1u << i)) units += (units.empty() ? "" : ",") + std::to_string(i + 1);
        os << "| " << element_name(kExtElements[k]) << " | " << (units.empty() ? "-" : units) << " | "
           << subset_name(r.matrices.form[k]) << " |\n";
    }
    os << "\nsignature: " << r.signature.to_string() << "\n";
    os << "class: " << r.classification.name << " " << r.classification.order_structure()
       << (r.classification.abelian ? " Abelian" : " non-Abelian") << ", signed group "
       << (r.classification.signed_group.empty() ? "order " + std::to_string(r.classification.signed_order)
                                                 : r.classification.signed_group)
       << "\n\n|   |";
    for (ExtElement e : kExtElements) os << " " << element_name(e) << " |";
    os << "\n|---|";
    for (std::size_t k = 0; k < 8; ++k) os << "---|";
    os << "\n";
    for (std::size_t r0 = 0; r0 < 8; ++r0) {
        os << "| " << element_name(kExtElements[r0]) << " |";
        for (const auto& c : r.table[r0]) os << " " << c << " |";
        os << "\n";
    }
    return os.str();
}

std::string to_markdown(const CoveringReport& r) {
    std::ostringstream os;
    os << "## Covering structure of " << r.subject << "\n\n";
    if (r.predicted) os << "predicted: " << r.predicted->to_string() << "\n";
    if (r.computed) os << "computed: " << r.computed->to_string() << "\n";
    if (!r.admissible.empty()) {
        os << "admissible:";
        for (const auto& a : r.admissible) os << " " << a.to_string();
        os << "\n";
    }
    if (r.ext_signature) os << "extended signature: " << r.ext_signature->to_string() << "\n";
    if (!r.cover_group.empty())
        os << "cover: " << r.cover_group << " (" << (r.cliffordian ? "Cliffordian" : "non-Cliffordian") << ")\n";
    os << "consistent: " << yes(r.consistent()) << "\n";
    for (const auto& n : r.notes) os << "- " << n << "\n";
    return os.str();
}

std::string to_markdown(const OddDecompositionReport& r) {
    std::ostringstream os;
    os << "## Odd-dimensional decomposition of Pin(" << r.sig.p << "," << r.sig.q << ")\n\n";
    for (const auto& d : r.decompositions) os << "- " << d << "\n";
    os << "\nomega^2 = " << r.omega_square << ", central: " << yes(r.omega_central) << ", in Pin: " << yes(r.omega_in_pin)
       << ", unit " << r.omega_unit << "\n";
    if (!r.unitary_label.empty())
        os << "unitary form: " << r.unitary_label << (r.label_matches_omega ? "" : " (unit disagrees with omega^2)") << "\n";
    return os.str();
}

std::string to_markdown(const std::vector<QuotientReport>& reports) {
    std::ostringstream os;
    for (const QuotientReport& r : reports) {
        os << "## " << r.context.source.to_string() << " -> " << r.context.target.to_string() << " ("
           << target_name(r.context.route) << ")\n\n";
        for (const auto& n : r.context.notes) os << "- " << n << "\n";
        os << "epsilon = " << r.context.epsilon.to_string() << ", lambda+ = " << r.idempotents.plus.to_string()
           << ", lambda- = " << r.idempotents.minus.to_string() << ", identities " << (r.idempotent_check.ok() ? "hold" : "FAIL")
           << "\n\n| map | printed | fixed point |\n|---|---|---|\n";
        for (const TransferEntry& t : r.transfer.entries)
            os << "| " << auto_symbol(t.map) << " (" << auto_name(t.map) << ") | " << (t.printed ? "transfers" : "blocked")
               << " | " << (t.fixed ? "transfers" : "blocked") << " |\n";
        os << "\nclass " << r.cls.label << " " << r.cls.symbols << ", marked ring " << r.cls.ring << "\n";
        os << "quotient group " << r.group.listed_label << " (derived " << r.group.derived_label << ") over "
           << masks_to_symbols(r.group.elements) << (r.group.cover.empty() ? "" : ", cover " + r.group.cover) << "\n";
        if (!r.group.note.empty()) os << "note: " << r.group.note << "\n";
        os << "\n";
    }
    return os.str();
}

std::string to_markdown(const std::vector<SuiteResult>& results) {
    std::ostringstream os;
    for (const SuiteResult& r : results) {
        os << "## [" << r.id << "] " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.checks << " checks, "
           << r.failures << " failures)\n";
        for (const auto& d : r.details) os << "- " << d << "\n";
        for (const auto& c : r.counterexamples) os << "  - counterexample: " << c << "\n";
        os << "\n";
    }
    return os.str();
}

}  // namespace cliffork
