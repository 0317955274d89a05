#include "cliffork/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cliffork/classification.hpp"
#include "cliffork/coverings.hpp"
#include "cliffork/ext.hpp"
#include "cliffork/groups.hpp"
#include "cliffork/printed.hpp"
#include "cliffork/quotient.hpp"

namespace cliffork {

unsigned default_threads() {
    if (const char* env = std::getenv("CLIFFORK_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(std::min(v, 256L));
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"tables",      "gamma-ext", "cpt-table",   "pseudo",   "conditions",
                                                "commutation", "census",   "salingaros", "quotient", "core"};
    return names;
}

std::vector<Matrix> gamma_matrices() {
    const Gaussian i = Gaussian::i();
    const Gaussian mi = -i;
    return {
        Matrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}),
        Matrix::from_rows({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}),
        Matrix::from_rows({{0, 0, 0, mi}, {0, 0, i, 0}, {0, i, 0, 0}, {mi, 0, 0, 0}}),
        Matrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, -1}, {-1, 0, 0, 0}, {0, 1, 0, 0}}),
    };
}

SpinBasis gamma_basis() { return load_spinbasis(gamma_matrices(), Signature(1, 3), "gamma basis of the Dirac algebra"); }

namespace {

// Thread-safe accumulator for one suite.
class Tally {
public:
    void pass() { ++checks_; }
    void fail(const std::string& what) {
        ++checks_;
        std::lock_guard lock(mu_);
        ++failures_;
        examples_.push_back(what);
    }
    void check(bool ok, const std::function<std::string()>& what) { ok ? pass() : fail(what()); }
    std::size_t checks() const { return checks_; }
    std::size_t failures() const {
        std::lock_guard lock(mu_);
        return failures_;
    }
    // The first counterexamples in sorted order, independent of thread timing.
    std::vector<std::string> examples() const {
        std::lock_guard lock(mu_);
        std::vector<std::string> out = examples_;
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        if (out.size() > kMaxCounterexamples) out.resize(kMaxCounterexamples);
        return out;
    }

private:
    std::atomic<std::size_t> checks_{0};
    mutable std::mutex mu_;
    std::size_t failures_ = 0;
    std::vector<std::string> examples_;
};

template <class T, class F>
void parallel_for(const std::vector<T>& items, unsigned threads, F body) {
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::exception_ptr err;
    auto worker = [&] {
        for (std::size_t idx = next++; idx < items.size(); idx = next++) {
            try {
                body(items[idx]);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

std::vector<Signature> even_signatures(int max_n, bool ring_r, bool ring_h) {
    std::vector<Signature> out;
    for (int n = 0; n <= max_n; n += 2) {
        for (int p = 0; p <= n; ++p) {
            const Signature sig(p, n - p);
            const Ring r = division_ring(sig).ring;
            if ((ring_r && r == Ring::R) || (ring_h && r == Ring::H)) out.push_back(sig);
        }
    }
    return out;
}

std::string where(const SpinBasis& b) { return b.sig.to_string() + " [" + b.provenance + "]"; }

template <class Lhs, class Rhs>
int first_violation(const SpinBasis& basis, Lhs lhs, Rhs rhs) {
    for (int i = 0; i < basis.n(); ++i)
        if (!(lhs(basis.mats[i]) == rhs(basis.mats[i]))) return i + 1;
    return 0;
}

Matrix gamma_product(const std::vector<Matrix>& g, std::initializer_list<int> idx) {
    Matrix m = Matrix::identity(4);
    for (int k : idx) m = m * g[k];
    return m;
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

// Compares a computed signed table against the body of a printed 9x9 table.
template <std::size_t N>
std::vector<std::string> table_mismatches(const std::vector<std::vector<std::string>>& computed,
                                          const std::array<std::array<const char*, N>, N>& printed,
                                          const std::function<std::string(const std::string&)>& relabel) {
    std::vector<std::string> out;
    for (std::size_t r = 0; r + 1 < N; ++r) {
        for (std::size_t c = 0; c + 1 < N; ++c) {
            const std::string want = relabel(computed[r][c]);
            const std::string got = printed[r + 1][c + 1];
            if (want != got)
                out.push_back("row " + std::string(printed[r + 1][0]) + ", column " + printed[0][c + 1] + ": printed " + got +
                              ", computed " + want);
        }
    }
    return out;
}

std::function<std::string(const std::string&)> relabel_with(const std::map<std::string, std::string>& names) {
    return [names](const std::string& cell) {
        const bool neg = !cell.empty() && cell[0] == '-';
        const std::string body = neg ? cell.substr(1) : cell;
        const auto it = names.find(body);
        return (neg ? "-" : "") + (it == names.end() ? body : it->second);
    };
}

void suite_tables(Tally& t, std::vector<std::string>& details) {
    struct Item {
        TableKind kind;
        const std::array<std::array<const char*, 8>, 8>* printed;
        const char* title;
    };
    const std::array<Item, 4> items{{{TableKind::Rings, &printed::kRings, "rings"},
                                     {TableKind::Salingaros, &printed::kSalingaros, "salingaros"},
                                     {TableKind::Representations, &printed::kRepresentations, "representations"},
                                     {TableKind::Quotient, &printed::kQuotient, "quotient"}}};
    for (const Item& item : items) {
        const PeriodicTable tab = periodic_table(7, 7, item.kind);
        std::size_t bad = 0, notes = 0;
        for (int q = 0; q <= 7; ++q) {
            for (int p = 0; p <= 7; ++p) {
                const TableCell& cell = tab.at(p, q);
                const std::string want = (*item.printed)[q][p];
                if (!cell.note.empty()) ++notes;
                if (cell.label == want) {
                    t.pass();
                } else {
                    ++bad;
                    t.fail(std::string(item.title) + " (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + "): printed " +
                           want + ", generated " + cell.label);
                }
            }
        }
        details.push_back(std::string(item.title) + ": " + std::to_string(64 - bad) + "/64 cells match, " +
                          std::to_string(notes) + " annotated");
    }
}

void suite_gamma_ext(Tally& t, std::vector<std::string>& details) {
    const std::vector<Matrix> g = gamma_matrices();
    const SpinBasis basis = gamma_basis();
    const ExtGroupMatrices m = ext_group(basis);
    const std::vector<Matrix> expected{Matrix::identity(4),      gamma_product(g, {0, 1, 2, 3}), gamma_product(g, {1, 3}),
                                       gamma_product(g, {0, 2}), gamma_product(g, {0, 1, 3}),    gamma_product(g, {2}),
                                       gamma_product(g, {0}),    gamma_product(g, {1, 2, 3})};
    const std::vector<std::string> gamma_names{"I", "g0123", "g13", "g02", "g013", "g2", "g0", "g123"};
    std::string signs;
    for (std::size_t k = 1; k < 8; ++k) {
        const ExtElement e = kExtElements[k];
        const int s = m[e].compare_up_to_sign(expected[k]);
        signs += (signs.empty() ? "" : " ") + element_name(e) + "=" + (s == 0 ? "?" : sign_char(s)) + gamma_names[k];
        t.check(s != 0, [&] { return element_name(e) + " is not +-" + gamma_names[k]; });
    }
    details.push_back("matrices: " + signs);

    const SignatureVector sv = signature_vector(m);
    const SignatureVector want = SignatureVector::parse("(-,-,+,-,-,+,+)");
    t.check(sv == want, [&] { return "signature " + sv.to_string() + ", expected " + want.to_string(); });
    details.push_back("signature: " + sv.to_string());

    const ExtClassification cls = classify_ext_group(m);
    t.check(cls.name == "*Z4xZ2" && cls.order2 == 3 && cls.order4 == 4 && !cls.abelian,
            [&] { return "class " + cls.name + " " + cls.order_structure(); });
    details.push_back("class: " + cls.name + " " + cls.order_structure() + ", signed group " + cls.signed_group);

    const std::vector<std::string> labels{"I", "W", "E", "C", "Pi", "K", "S", "F"};
    const auto table = signed_product_table(expected, labels);
    const auto mism = table_mismatches(table, printed::kExtSymbolTable, relabel_with({}));
    for (const auto& s : mism) t.fail("symbolic table " + s);
    if (mism.empty()) t.pass();
    details.push_back("symbolic table: " + std::to_string(64 - mism.size()) + "/64 cells match");

    std::map<std::string, std::string> to_gamma;
    for (std::size_t k = 0; k < 8; ++k) to_gamma[labels[k]] = gamma_names[k];
    const auto gm = table_mismatches(table, printed::kExtGammaTable, relabel_with(to_gamma));
    std::string misprints;
    for (const auto& s : gm) misprints += (misprints.empty() ? "" : "; ") + s;
    details.push_back("gamma-labelled copy: " + std::to_string(64 - gm.size()) + "/64 cells match" +
                      (gm.empty() ? "" : " (disagrees with the symbolic copy at " + misprints + ")"));
}

void suite_cpt_table(Tally& t, std::vector<std::string>& details) {
    const std::vector<Matrix> g = gamma_matrices();
    const std::vector<Matrix> elems{Matrix::identity(4),       gamma_product(g, {0}),
                                    gamma_product(g, {1, 3}),  gamma_product(g, {0, 1, 3}),
                                    gamma_product(g, {2, 0}),  gamma_product(g, {2}),
                                    gamma_product(g, {2, 0, 1, 3}), gamma_product(g, {2, 1, 3})};
    const std::vector<std::string> labels{"1", "P", "T", "PT", "C", "CP", "CT", "CPT"};
    const std::vector<std::string> gamma_names{"1", "g0", "g13", "g013", "g20", "g2", "g2013", "g213"};

    const auto table = signed_product_table(elems, labels);
    const auto mism = table_mismatches(table, printed::kDiracSymbolTable, relabel_with({}));
    for (const auto& s : mism) t.fail("symbolic table " + s);
    if (mism.empty()) t.pass();
    details.push_back("symbolic table: " + std::to_string(64 - mism.size()) + "/64 cells match");

    std::map<std::string, std::string> to_gamma;
    for (std::size_t k = 0; k < 8; ++k) to_gamma[labels[k]] = gamma_names[k];
    const auto gm = table_mismatches(table, printed::kDiracGammaTable, relabel_with(to_gamma));
    std::string misprints;
    for (const auto& s : gm) misprints += (misprints.empty() ? "" : "; ") + s;
    details.push_back("gamma-labelled copy: " + std::to_string(64 - gm.size()) + "/64 cells match" +
                      (gm.empty() ? "" : " (disagrees with the symbolic copy at " + misprints + ")"));

    const ExtClassification cls = classify_ext_group(elems);
    t.check(!cls.abelian && cls.order2 == 3 && cls.order4 == 4,
            [&] { return std::string(cls.abelian ? "Abelian" : "non-Abelian") + " " + cls.order_structure(); });
    details.push_back("class: " + std::string(cls.abelian ? "Abelian " : "non-Abelian ") + cls.name + " " +
                      cls.order_structure());

    SignatureVector sv;
    for (std::size_t k = 1; k < 8; ++k) sv.s[k - 1] = (elems[k] * elems[k]).sign_of_identity();
    const SignatureVector want = SignatureVector::parse("(+,-,-,+,-,-,+)");
    t.check(sv == want, [&] { return "signature " + sv.to_string() + ", expected " + want.to_string(); });
    details.push_back("signature: " + sv.to_string());
}

void suite_pseudo(Tally& t, std::vector<std::string>& details, const VerifyOptions& opts) {
    std::atomic<std::size_t> instances{0}, rule_bad{0}, cond_bad{0};
    parallel_for(even_signatures(opts.max_n, false, true), opts.threads, [&](const Signature& sig) {
        for (const SpinBasis& basis : spinbasis_variants(sig)) {
            ++instances;
            const Matrix pi = matrix_Pi(basis);
            const int bad = first_violation(
                basis, [&](const Matrix& e) { return e * pi; }, [&](const Matrix& e) { return pi * e.conj(); });
            if (bad) ++cond_bad;
            t.check(bad == 0, [&] { return "E_" + std::to_string(bad) + " Pi != Pi conj(E_" + std::to_string(bad) + ") in " + where(basis); });
            const PiBarReport r = pi_bar_product(basis);
            if (!r.agrees()) ++rule_bad;
            t.check(r.agrees(), [&] {
                return "Pi conj(Pi) = " + sign_char(r.computed) + "I, rule gives " + sign_char(r.rule) + "I (" +
                       (r.pi_form == UnitSubset::Complex ? "a" : "b") + " = " + std::to_string(r.count) + ") in " + where(basis);
            });
        }
    });
    details.push_back("instances: " + std::to_string(instances.load()));
    details.push_back("Pi defining condition violations: " + std::to_string(cond_bad.load()));
    details.push_back("Pi conj(Pi) rule disagreements: " + std::to_string(rule_bad.load()));
}

void suite_conditions(Tally& t, std::vector<std::string>& details, const VerifyOptions& opts) {
    std::atomic<std::size_t> instances{0}, cond_bad{0}, square_bad{0};
    parallel_for(even_signatures(opts.max_n, true, true), opts.threads, [&](const Signature& sig) {
        for (const SpinBasis& basis : spinbasis_variants(sig)) {
            ++instances;
            const ExtGroupMatrices m = ext_group(basis);
            const Matrix& K = m.K;
            const Matrix& S = m.S;
            const Matrix& F = m.F;
            const int bk = first_violation(basis, [&](const Matrix& e) { return -(e * K); }, [&](const Matrix& e) { return K * e.conj(); });
            const int bs = first_violation(basis, [&](const Matrix& e) { return e * S; }, [&](const Matrix& e) { return S * e.conj().transpose(); });
            const int bf = first_violation(basis, [&](const Matrix& e) { return -(e * F); }, [&](const Matrix& e) { return F * e.conj().transpose(); });
            for (auto [bad, name] : {std::pair{bk, "K"}, std::pair{bs, "S"}, std::pair{bf, "F"}}) {
                if (bad) ++cond_bad;
                t.check(bad == 0, [&] { return std::string(name) + " fails its defining condition at unit " + std::to_string(bad) + " in " + where(basis); });
            }
            const SignatureVector sv = signature_vector(m);
            const SquarePrediction pred = predicted_squares(m, basis);
            for (auto [got, want, name] : {std::tuple{sv.s[4], pred.K, "K"}, std::tuple{sv.s[5], pred.S, "S"}, std::tuple{sv.s[6], pred.F, "F"}}) {
                if (got != want) ++square_bad;
                t.check(got == want, [&] {
                    return std::string(name) + "^2 = " + sign_char(got) + "I, predicate gives " + (want == 0 ? "no value" : sign_char(want) + "I") +
                           " in " + where(basis);
                });
            }
        }
    });
    details.push_back("instances: " + std::to_string(instances.load()));
    details.push_back("defining condition violations: " + std::to_string(cond_bad.load()));
    details.push_back("square predicate disagreements: " + std::to_string(square_bad.load()));
}

void suite_commutation(Tally& t, std::vector<std::string>& details, const VerifyOptions& opts) {
    std::mutex mu;
    std::map<std::string, std::size_t> by_pair;
    std::atomic<std::size_t> instances{0};
    parallel_for(even_signatures(opts.max_n, true, true), opts.threads, [&](const Signature& sig) {
        const bool quaternionic = division_ring(sig).ring == Ring::H;
        for (const SpinBasis& basis : spinbasis_variants(sig)) {
            ++instances;
            const ExtGroupMatrices m = ext_group(basis);
            const CommutationProfile got = commutation_profile(m);
            const CommutationProfile want = predicted_commutation(m, basis);
            const int last = quaternionic ? 8 : 4;
            for (int i = 1; i < last; ++i) {
                for (int j = i + 1; j < last; ++j) {
                    const ExtElement x = kExtElements[i];
                    const ExtElement y = kExtElements[j];
                    const bool ok = got.at(x, y) == want.at(x, y);
                    if (!ok) {
                        std::lock_guard lock(mu);
                        ++by_pair[element_name(x) + "-" + element_name(y)];
                    }
                    t.check(ok, [&] {
                        const auto word = [](Relation r) { return r == Relation::Commute ? "commute" : "anticommute"; };
                        return element_name(x) + " and " + element_name(y) + " " + word(got.at(x, y)) + ", predicate says " +
                               word(want.at(x, y)) + " in " + where(basis);
                    });
                }
            }
        }
    });
    details.push_back("instances: " + std::to_string(instances.load()) + " (ring R checked on W, E, C)");
    std::string pairs;
    for (const auto& [k, v] : by_pair) pairs += (pairs.empty() ? "" : ", ") + k + " " + std::to_string(v);
    details.push_back("mismatches by pair: " + (pairs.empty() ? std::string("none") : pairs));
}

void suite_census(Tally& t, std::vector<std::string>& details, const VerifyOptions& opts) {
    const SignatureCensus c = enumerate_signatures(opts.max_n, opts.threads);
    for (const auto& bad : c.inadmissible) t.fail("inadmissible signature " + bad);
    t.check(c.realized.size() <= 64, [&] { return std::to_string(c.realized.size()) + " distinct signatures exceed 64"; });
    details.push_back("instances: " + std::to_string(c.instances));
    details.push_back("distinct signatures realized: " + std::to_string(c.realized.size()) + " (bound 64)");
    std::map<int, std::size_t> by_plus;
    for (const auto& [sv, entry] : c.realized) ++by_plus[sv.plus_count()];
    std::string hist;
    for (const auto& [k, v] : by_plus) hist += (hist.empty() ? "" : ", ") + std::to_string(k) + "+: " + std::to_string(v);
    details.push_back("by plus count: " + hist);
}

void suite_salingaros(Tally& t, std::vector<std::string>& details, const VerifyOptions& opts) {
    std::vector<Signature> sigs;
    for (int n = 0; n <= 6; ++n)
        for (int p = 0; p <= n; ++p) sigs.emplace_back(p, n - p);
    parallel_for(sigs, opts.threads, [&](const Signature& sig) {
        const VeeFactorReport r = vee_factor_check(sig);
        t.check(r.ok(), [&] {
            return sig.to_string() + ": |G| = " + std::to_string(r.group_order) + ", |Z| = " + std::to_string(r.center_order) +
                   ", |G/Z| = " + std::to_string(r.factor_order) + " (predicted " + std::to_string(r.predicted_factor_order) + ")" +
                   (r.elementary_abelian ? "" : ", not elementary abelian") + (r.center_matches ? "" : ", center " + r.computed_center);
        });
    });
    details.push_back("signatures: " + std::to_string(sigs.size()) + " with p+q <= 6");
}

void suite_quotient(Tally& t, std::vector<std::string>& details, const VerifyOptions& opts) {
    std::vector<EpsilonContext> ctxs;
    std::set<std::pair<std::string, int>> seen;
    for (int n = 1; n <= 7; n += 2) {
        for (int p = 0; p <= n; ++p) {
            for (const Signature& s : {Signature(p, n - p), Signature(p, n - p, Field::Complex)}) {
                for (EpsilonContext& c : contexts_for(s)) {
                    if (seen.insert({c.source.to_string(), static_cast<int>(c.route)}).second) ctxs.push_back(std::move(c));
                }
            }
        }
    }
    std::atomic<std::size_t> idem_bad{0}, hom_bad{0}, hom_count{0}, transfer_bad{0}, transfer_count{0}, label_bad{0};
    std::mutex mu;
    std::map<std::string, std::size_t> transfer_by_map;
    parallel_for(ctxs, opts.threads, [&](const EpsilonContext& ctx) {
        const std::string name = ctx.source.to_string() + " -> " + ctx.target.to_string();
        const IdempotentCheck ic = check_idempotents(ctx);
        if (!ic.ok()) ++idem_bad;
        t.check(ic.ok(), [&] { return "lambda identities fail for " + name; });

        if (ctx.source.n() <= 5) {
            ++hom_count;
            const HomomorphismCheck h = check_homomorphism(ctx);
            if (!h.ok()) ++hom_bad;
            t.check(h.ok(), [&] {
                return "epsilon map on " + name + ": " + std::to_string(h.failures) + " product failures" +
                       (h.first_failure.empty() ? "" : " (" + h.first_failure + ")") + (h.unit_to_one ? "" : ", eps omega not sent to 1") +
                       (h.kernel_ok ? "" : ", kernel ideal not annihilated") + (h.surjective ? "" : ", not surjective");
            });
        }

        const TransferReport tr = transfer_report(ctx);
        for (const TransferEntry& e : tr.entries) {
            ++transfer_count;
            if (!e.agrees()) {
                ++transfer_bad;
                std::lock_guard lock(mu);
                ++transfer_by_map[auto_symbol(e.map)];
            }
            t.check(e.agrees(), [&] {
                return auto_name(e.map) + " on " + name + ": printed predicate says " + (e.printed ? "transfers" : "blocked") +
                       ", fixed-point test says " + (e.fixed ? "transfers" : "blocked") + " (" + e.reason + ")";
            });
        }
        t.check(!tr.entries[0].fixed, [&] { return "involution fixes eps omega on " + name; });

        const QuotientGroup g = quotient_group(ctx);
        const bool expect_group = g.listed_label != "pin^{b,d}";
        const bool ok = g.labels_agree() && g.is_group == expect_group;
        if (!ok) ++label_bad;
        t.check(ok, [&] {
            return "quotient group on " + name + ": listed " + g.listed_label + ", derived " + g.derived_label +
                   (g.is_group ? ", closed" : ", not closed");
        });
        (void)quotient_class(ctx);
    });
    details.push_back("contexts: " + std::to_string(ctxs.size()) + " (odd p+q <= 7, real and complex, both routes)");
    details.push_back("lambda identity failures: " + std::to_string(idem_bad.load()));
    details.push_back("epsilon homomorphism failures: " + std::to_string(hom_bad.load()) + " of " + std::to_string(hom_count.load()) +
                      " contexts with p+q <= 5");
    std::string by;
    for (const auto& [k, v] : transfer_by_map) by += (by.empty() ? "" : ", ") + k + " " + std::to_string(v);
    details.push_back("transfer predicate vs fixed-point disagreements: " + std::to_string(transfer_bad.load()) + " of " +
                      std::to_string(transfer_count.load()) + (by.empty() ? "" : " (" + by + ")"));
    details.push_back("quotient group label disagreements: " + std::to_string(label_bad.load()));
}

// Reversal of a blade computed by multiplying its generators in reverse order.
MultiVector reversed_product(const Signature& sig, Blade b) {
    MultiVector r(sig, Gaussian(1));
    const std::vector<int> idx = b.indices();
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) r = r * MultiVector::generator(sig, *it);
    return r;
}

void suite_core(Tally& t, std::vector<std::string>& details, const VerifyOptions& opts) {
    std::vector<Signature> sigs;
    for (int n = 0; n <= 6; ++n) {
        for (int p = 0; p <= n; ++p) {
            sigs.emplace_back(p, n - p);
            sigs.emplace_back(p, n - p, Field::Complex);
        }
    }
    const Gaussian c1(Rational(1), Rational(2));
    const Gaussian c2(Rational(3), Rational(-1));
    parallel_for(sigs, opts.threads, [&](const Signature& sig) {
        const std::uint32_t count = 1u << sig.n();
        const std::string tag = sig.to_string();
        for (std::uint32_t a = 0; a < count; ++a) {
            const Blade ba(a);
            const MultiVector x(sig, ba, c1);
            const int k = ba.grade();
            const Gaussian s_inv((k % 2) ? -1 : 1);
            const Gaussian s_rev(((k * (k - 1) / 2) % 2) ? -1 : 1);
            const Gaussian s_conj(((k * (k + 1) / 2) % 2) ? -1 : 1);
            t.check(involution(x) == x * s_inv, [&] { return "involution sign on e_" + ba.to_string() + " in " + tag; });
            t.check(reversion(x) == x * s_rev, [&] { return "reversion sign on e_" + ba.to_string() + " in " + tag; });
            t.check(conjugation(x) == x * s_conj, [&] { return "conjugation sign on e_" + ba.to_string() + " in " + tag; });
            t.check(reversion(MultiVector(sig, ba)) == reversed_product(sig, ba),
                    [&] { return "reversion differs from the reversed product on e_" + ba.to_string() + " in " + tag; });
            if (sig.n() % 2 == 0)
                t.check(involution_by_omega(x) == involution(x), [&] { return "omega x omega^-1 != x* on e_" + ba.to_string() + " in " + tag; });
            for (std::uint32_t b = 0; b < count; ++b) {
                const MultiVector y(sig, Blade(b), c2);
                const MultiVector xy = x * y;
                t.check(involution(xy) == involution(x) * involution(y), [&] { return "involution not multiplicative in " + tag; });
                t.check(reversion(xy) == reversion(y) * reversion(x), [&] { return "reversion not antimultiplicative in " + tag; });
                t.check(conjugation(xy) == conjugation(y) * conjugation(x), [&] { return "conjugation not antimultiplicative in " + tag; });
                t.check(pseudo_conjugation(xy) == pseudo_conjugation(x) * pseudo_conjugation(y), [&] {
                    return "pseudo_conjugation not multiplicative on e_" + ba.to_string() + " e_" + Blade(b).to_string() + " in " + tag;
                });
            }
        }
        const MultiVector w = MultiVector::volume(sig);
        const int w2 = (w * w).scalar_value() == Gaussian(1) ? 1 : -1;
        t.check(w2 == volume_square(sig), [&] { return "omega^2 law fails in " + tag; });
        if (sig.complex()) {
            const MultiVector bw = pseudo_conjugation(w);
            t.check(bw == w * Gaussian(sig.q % 2 ? -1 : 1), [&] { return "bar(omega) != (-1)^q omega in " + tag; });
        }
        std::size_t central = 0;
        bool omega_central = false;
        for (std::uint32_t a = 0; a < count; ++a) {
            const MultiVector x(sig, Blade(a));
            bool ok = true;
            for (int i = 1; i <= sig.n() && ok; ++i) {
                const MultiVector e = MultiVector::generator(sig, i);
                ok = x * e == e * x;
            }
            if (ok) {
                ++central;
                if (a == sig.full_mask() && a != 0) omega_central = true;
            }
        }
        const bool want_omega = center(sig) == CenterKind::UnitAndOmega;
        t.check(central == (want_omega ? 2u : 1u) && omega_central == want_omega,
                [&] { return "center law fails in " + tag + ": " + std::to_string(central) + " central blades"; });
    });
    details.push_back("signatures: " + std::to_string(sigs.size()) + " (real and complex, p+q <= 6), all blade pairs");
}

struct SuiteSpec {
    const char* name;
    double budget;
    std::function<void(Tally&, std::vector<std::string>&, const VerifyOptions&)> run;
};

const std::vector<SuiteSpec>& suite_specs() {
    static const std::vector<SuiteSpec> specs{
        {"tables", 1.0, [](Tally& t, auto& d, const VerifyOptions&) { suite_tables(t, d); }},
        {"gamma-ext", 1.0, [](Tally& t, auto& d, const VerifyOptions&) { suite_gamma_ext(t, d); }},
        {"cpt-table", 1.0, [](Tally& t, auto& d, const VerifyOptions&) { suite_cpt_table(t, d); }},
        {"pseudo", 60.0, suite_pseudo},
        {"conditions", 60.0, suite_conditions},
        {"commutation", 120.0, suite_commutation},
        {"census", 120.0, suite_census},
        {"salingaros", 30.0, suite_salingaros},
        {"quotient", 30.0, suite_quotient},
        {"core", 10.0, suite_core},
    };
    return specs;
}

}  // namespace

SuiteResult run_suite(const std::string& name, const VerifyOptions& opts) {
    const auto& specs = suite_specs();
    std::size_t idx = specs.size();
    for (std::size_t k = 0; k < specs.size(); ++k)
        if (name == specs[k].name || name == std::to_string(k + 1)) idx = k;
    if (idx == specs.size()) throw std::invalid_argument("unknown suite '" + name + "'");

    SuiteResult r;
    r.id = static_cast<int>(idx + 1);
    r.name = specs[idx].name;
    r.budget_seconds = specs[idx].budget;
    Tally t;
    const auto start = std::chrono::steady_clock::now();
    try {
        specs[idx].run(t, r.details, opts);
    } catch (const std::exception& e) {
        t.fail(std::string("suite aborted: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checks = t.checks();
    r.failures = t.failures();
    r.counterexamples = t.examples();
    r.pass = r.failures == 0 && r.within_budget();
    if (!r.within_budget()) r.details.push_back("runtime exceeds the budget");
    return r;
}

std::vector<SuiteResult> run_all(const VerifyOptions& opts) {
    std::vector<SuiteResult> out;
    for (const auto& name : suite_names()) out.push_back(run_suite(name, opts));
    return out;
}

}  // namespace cliffork
