#include "cliffork/ext.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

namespace cliffork {

std::string element_name(ExtElement e) {
    static const std::array<const char*, 8> names{"I", "W", "E", "C", "Pi", "K", "S", "F"};
    return names[static_cast<int>(e)];
}

std::string subset_name(UnitSubset s) {
    switch (s) {
        case UnitSubset::All: return "all units";
        case UnitSubset::Skew: return "skewsymmetric units";
        case UnitSubset::Symmetric: return "symmetric units";
        case UnitSubset::Complex: return "complex units";
        case UnitSubset::Real: return "real units";
        case UnitSubset::CForm: return "complex symmetric and real skewsymmetric units";
        case UnitSubset::DForm: return "complex skewsymmetric and real symmetric units";
    }
    return "?";
}

const Matrix& ExtGroupMatrices::operator[](ExtElement e) const {
    switch (e) {
        case ExtElement::I: return I;
        case ExtElement::W: return W;
        case ExtElement::E: return E;
        case ExtElement::C: return C;
        case ExtElement::Pi: return Pi;
        case ExtElement::K: return K;
        case ExtElement::S: return S;
        case ExtElement::F: return F;
    }
    throw std::out_of_range("unknown element");
}

Matrix unit_product(const SpinBasis& basis, std::uint32_t mask) {
    Matrix out = Matrix::identity(basis.dim());
    for (int i = 0; i < basis.n(); ++i)
        if (mask & (1u << i)) out = out * basis.mats[i];
    return out;
}

namespace {

struct UnitMasks {
    std::uint32_t all = 0, sym = 0, skew = 0, real = 0, complex = 0, c_form = 0, d_form = 0;
};

UnitMasks unit_masks(const SpinBasis& basis) {
    UnitMasks m;
    for (int i = 0; i < basis.n(); ++i) {
        const std::uint32_t bit = 1u << i;
        m.all |= bit;
        (basis.sym_mask[i] ? m.sym : m.skew) |= bit;
        (basis.real_mask[i] ? m.real : m.complex) |= bit;
    }
    m.c_form = (m.complex & m.sym) | (m.real & m.skew);
    m.d_form = (m.complex & m.skew) | (m.real & m.sym);
    return m;
}

std::string unit_list(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (!(mask & (1u << i))) continue;
        if (!first) s += ",";
        first = false;
        s += std::to_string(i + 1);
    }
    return s + "}";
}

Ring require_ext_ring(const SpinBasis& basis) {
    const Signature real(basis.sig.p, basis.sig.q);
    if (real.n() % 2 != 0) throw std::invalid_argument("the extended automorphism group needs an even-dimensional basis, got " + real.to_string());
    const Ring ring = division_ring(real).ring;
    if (ring != Ring::R && ring != Ring::H)
        throw std::invalid_argument("the extended automorphism group needs ring R or H, got " + ring_name(ring));
    return ring;
}

// Index of the first unit violating lhs(E_i) == rhs(E_i), or 0.
template <class Lhs, class Rhs>
int first_violation(const SpinBasis& basis, Lhs lhs, Rhs rhs) {
    for (int i = 0; i < basis.n(); ++i)
        if (!(lhs(basis.mats[i]) == rhs(basis.mats[i]))) return i + 1;
    return 0;
}

struct Built {
    Matrix m;
    std::uint32_t units = 0;
    UnitSubset form = UnitSubset::All;
};

Built build_E(const SpinBasis& basis, const UnitMasks& mk) {
    const bool skew_even = __builtin_popcount(mk.skew) % 2 == 0;
    const std::array<std::pair<std::uint32_t, UnitSubset>, 2> candidates{
        std::pair{skew_even ? mk.skew : mk.sym, skew_even ? UnitSubset::Skew : UnitSubset::Symmetric},
        std::pair{skew_even ? mk.sym : mk.skew, skew_even ? UnitSubset::Symmetric : UnitSubset::Skew}};
    int bad = 0;
    for (const auto& [mask, form] : candidates) {
        Matrix e = unit_product(basis, mask);
        bad = first_violation(basis, [&](const Matrix& u) { return u * e; }, [&](const Matrix& u) { return e * u.transpose(); });
        if (bad == 0) return {std::move(e), mask, form};
    }
    throw DefiningConditionError("no product of skewsymmetric or symmetric units satisfies E_i E = E E_i^T (unit " +
                                     std::to_string(bad) + ")",
                                 bad);
}

Built build_C(const SpinBasis& basis, const UnitMasks& mk, const Built& e, const Matrix& w) {
    Matrix c = e.m * w.transpose();
    const int bad = first_violation(basis, [&](const Matrix& u) { return c * u.transpose(); }, [&](const Matrix& u) { return -(u * c); });
    if (bad) throw DefiningConditionError("C E_i^T + E_i C != 0 for unit " + std::to_string(bad), bad);
    const std::uint32_t units = mk.all & ~e.units;
    return {std::move(c), units, e.form == UnitSubset::Skew ? UnitSubset::Symmetric : UnitSubset::Skew};
}

Built build_Pi(const SpinBasis& basis, const UnitMasks& mk) {
    const bool a_even = __builtin_popcount(mk.complex) % 2 == 0;
    const std::uint32_t mask = a_even ? mk.complex : mk.real;
    Matrix pi = unit_product(basis, mask);
    const int bad = first_violation(basis, [&](const Matrix& u) { return u * pi; }, [&](const Matrix& u) { return pi * u.conj(); });
    if (bad) throw DefiningConditionError("E_i Pi != Pi conj(E_i) for unit " + std::to_string(bad), bad);
    return {std::move(pi), mask, a_even ? UnitSubset::Complex : UnitSubset::Real};
}

// When both forms coincide (no units at all) the preferred one is returned.
UnitSubset product_form(std::uint32_t units, const UnitMasks& mk, UnitSubset preferred) {
    const bool c = units == mk.c_form;
    const bool d = units == mk.d_form;
    if (c && d) return preferred;
    if (c) return UnitSubset::CForm;
    if (d) return UnitSubset::DForm;
    throw std::logic_error("product is neither of the two pseudoantiautomorphism forms");
}

void check_K(const SpinBasis& basis, const Matrix& k) {
    const int bad = first_violation(basis, [&](const Matrix& u) { return -(u * k); }, [&](const Matrix& u) { return k * u.conj(); });
    if (bad) throw DefiningConditionError("-E_i K != K conj(E_i) for unit " + std::to_string(bad), bad);
}

void check_S(const SpinBasis& basis, const Matrix& s) {
    const int bad =
        first_violation(basis, [&](const Matrix& u) { return u * s; }, [&](const Matrix& u) { return s * u.conj().transpose(); });
    if (bad) throw DefiningConditionError("E_i S != S conj(E_i)^T for unit " + std::to_string(bad), bad);
}

void check_F(const SpinBasis& basis, const Matrix& f) {
    const int bad = first_violation(basis, [&](const Matrix& u) { return -(u * f); },
                                    [&](const Matrix& u) { return f * u.conj().transpose(); });
    if (bad) throw DefiningConditionError("-E_i F != F conj(E_i)^T for unit " + std::to_string(bad), bad);
}

}  // namespace

Matrix matrix_W(const SpinBasis& basis) { return unit_product(basis, unit_masks(basis).all); }

Matrix matrix_E(const SpinBasis& basis) { return build_E(basis, unit_masks(basis)).m; }

Matrix matrix_C(const SpinBasis& basis) {
    const UnitMasks mk = unit_masks(basis);
    return build_C(basis, mk, build_E(basis, mk), unit_product(basis, mk.all)).m;
}

Matrix matrix_Pi(const SpinBasis& basis) {
    require_ext_ring(basis);
    return build_Pi(basis, unit_masks(basis)).m;
}

Matrix matrix_K(const SpinBasis& basis) { return ext_group(basis).K; }
Matrix matrix_S(const SpinBasis& basis) { return ext_group(basis).S; }
Matrix matrix_F(const SpinBasis& basis) { return ext_group(basis).F; }

ExtGroupMatrices ext_group(const SpinBasis& basis) {
    ExtGroupMatrices x;
    x.ring = require_ext_ring(basis);
    x.sig = Signature(basis.sig.p, basis.sig.q);
    const UnitMasks mk = unit_masks(basis);

    x.I = Matrix::identity(basis.dim());
    x.W = unit_product(basis, mk.all);
    const Built e = build_E(basis, mk);
    const Built c = build_C(basis, mk, e, x.W);
    const Built pi = build_Pi(basis, mk);
    x.E = e.m;
    x.C = c.m;
    x.Pi = pi.m;
    x.K = x.Pi * x.W;
    x.S = x.Pi * x.E;
    x.F = x.Pi * x.C;
    check_K(basis, x.K);
    check_S(basis, x.S);
    check_F(basis, x.F);

    const std::uint32_t k_units = mk.all ^ pi.units;
    const std::uint32_t s_units = pi.units ^ e.units;
    const std::uint32_t f_units = pi.units ^ c.units;
    x.units = {0u, mk.all, e.units, c.units, pi.units, k_units, s_units, f_units};
    x.form = {UnitSubset::All,
              UnitSubset::All,
              e.form,
              c.form,
              pi.form,
              pi.form == UnitSubset::Complex ? UnitSubset::Real : UnitSubset::Complex,
              product_form(s_units, mk, UnitSubset::CForm),
              product_form(f_units, mk, UnitSubset::DForm)};

    std::ostringstream os;
    os << "basis: " << basis.provenance << "; E: product of the " << subset_name(e.form) << " " << unit_list(e.units)
       << "; C = E W^T; Pi: ";
    if (pi.units == 0) {
        os << "identity";
    } else {
        os << "product of the " << subset_name(pi.form) << " " << unit_list(pi.units);
    }
    os << "; K = Pi W ~ " << unit_list(k_units) << "; S = Pi E ~ " << unit_list(s_units) << " ("
       << (x.form[6] == UnitSubset::CForm ? "c-form" : "d-form") << "); F = Pi C ~ " << unit_list(f_units) << " ("
       << (x.form[7] == UnitSubset::CForm ? "c-form" : "d-form") << ")";
    x.provenance = os.str();
    return x;
}

PiBarReport pi_bar_product(const SpinBasis& basis) {
    const Ring ring = require_ext_ring(basis);
    if (ring == Ring::R) throw std::invalid_argument("Pi is proportional to I for ring R; Pi conj(Pi) is trivially +I");
    const UnitMasks mk = unit_masks(basis);
    const Built pi = build_Pi(basis, mk);
    PiBarReport r;
    r.computed = (pi.m * pi.m.conj()).sign_of_identity();
    if (r.computed == 0) throw std::runtime_error("Pi conj(Pi) is not +-I");
    r.pi_form = pi.form;
    r.count = __builtin_popcount(pi.units);
    r.rule = (r.count % 4 == 0 || r.count % 4 == 1) ? 1 : -1;
    return r;
}

int SignatureVector::plus_count() const {
    return static_cast<int>(std::count(s.begin(), s.end(), 1));
}

std::string SignatureVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s[i] > 0 ? "+" : "-";
    }
    return out + ")";
}

SignatureVector SignatureVector::parse(const std::string& text) {
    SignatureVector v;
    std::size_t k = 0;
    for (char ch : text) {
        if (ch != '+' && ch != '-') continue;
        if (k == 7) throw std::invalid_argument("signature has more than seven signs: " + text);
        v.s[k++] = ch == '+' ? 1 : -1;
    }
    if (k != 7) throw std::invalid_argument("signature needs seven signs: " + text);
    return v;
}

namespace {
int square_sign(const Matrix& m, const char* name) {
    const int s = (m * m).sign_of_identity();
    if (s == 0) throw std::runtime_error(std::string(name) + "^2 is not +-I");
    return s;
}
}  // namespace

SignatureVector signature_vector(const ExtGroupMatrices& m) {
    SignatureVector v;
    v.s = {square_sign(m.W, "W"),  square_sign(m.E, "E"), square_sign(m.C, "C"), square_sign(m.Pi, "Pi"),
           square_sign(m.K, "K"), square_sign(m.S, "S"), square_sign(m.F, "F")};
    return v;
}

bool CommutationProfile::abelian() const {
    for (const auto& row : rel)
        for (Relation r : row)
            if (r == Relation::Anticommute) return false;
    return true;
}

CommutationProfile commutation_profile(const ExtGroupMatrices& m) {
    CommutationProfile p;
    for (ExtElement x : kExtElements) {
        for (ExtElement y : kExtElements) {
            const Matrix xy = m[x] * m[y];
            const Matrix yx = m[y] * m[x];
            const int c = xy.compare_up_to_sign(yx);
            if (c == 0) throw std::runtime_error(element_name(x) + " and " + element_name(y) + " neither commute nor anticommute");
            p.rel[static_cast<int>(x)][static_cast<int>(y)] = c > 0 ? Relation::Commute : Relation::Anticommute;
        }
    }
    return p;
}

UnitCounts unit_counts(const SpinBasis& basis) {
    return UnitCounts{basis.n(), basis.a, basis.b, basis.l, basis.m, basis.v, basis.u};
}

namespace {

int mod8(int x) { return ((x % 8) + 8) % 8; }
bool odd(int x) { return (x & 1) != 0; }

}  // namespace

SquarePrediction predicted_squares(const ExtGroupMatrices& m, const SpinBasis& basis) {
    const UnitCounts c = unit_counts(basis);
    SquarePrediction out;

    // K: a_+ - a_- (odd product) or b_+ - b_- (even product) mod 8.
    const std::uint32_t ku = m.units[static_cast<int>(ExtElement::K)];
    int plus = 0, minus = 0;
    for (int i = 0; i < basis.n(); ++i) {
        if (!(ku & (1u << i))) continue;
        (m.sig.generator_square(i + 1) > 0 ? plus : minus) += 1;
    }
    const int diff = mod8(plus - minus);
    if (odd(plus + minus)) {
        out.K = (diff == 1 || diff == 5) ? 1 : -1;
    } else {
        out.K = (diff == 0 || diff == 4) ? 1 : -1;
    }

    const int ul = mod8(c.u + c.l);
    const int mv = mod8(c.m + c.v);
    if (m.form[static_cast<int>(ExtElement::S)] == UnitSubset::CForm) {
        out.S = (ul == 0 || ul == 4) ? 1 : (ul == 2 || ul == 6) ? -1 : 0;
    } else {
        out.S = (mv == 1 || mv == 5) ? 1 : (mv == 3 || mv == 7) ? -1 : 0;
    }
    if (m.form[static_cast<int>(ExtElement::F)] == UnitSubset::DForm) {
        out.F = (mv == 0 || mv == 4) ? 1 : (mv == 2 || mv == 6) ? -1 : 0;
    } else {
        out.F = (ul == 3 || ul == 7) ? 1 : (ul == 1 || ul == 5) ? -1 : 0;
    }
    return out;
}

CommutationProfile predicted_commutation(const ExtGroupMatrices& x, const SpinBasis& basis) {
    const UnitCounts c = unit_counts(basis);
    const int a = c.a, b = c.b, l = c.l, m = c.m, v = c.v, u = c.u, s = c.s(), g = c.g();
    auto form = [&](ExtElement e) { return x.form[static_cast<int>(e)]; };
    auto size = [&](ExtElement e) { return __builtin_popcount(x.units[static_cast<int>(e)]); };

    // Pi or K (complex/real product) against E or C (skew/symmetric product).
    auto pk_vs_ec = [&](UnitSubset pk, UnitSubset ec) {
        const bool complex = pk == UnitSubset::Complex;
        const bool skew = ec == UnitSubset::Skew;
        if (complex && skew) return odd(m * (u + l));
        if (complex) return odd(l * (m + v));
        if (skew) return odd(u * (m + v));
        return odd(v * (u + l));
    };
    // S or F (c/d form) against E or C.
    auto sf_vs_ec = [&](UnitSubset sf, UnitSubset ec) {
        const bool cform = sf == UnitSubset::CForm;
        const bool skew = ec == UnitSubset::Skew;
        if (cform && skew) return odd(u * (l + m));
        if (skew) return odd(m * (v + u));
        if (!cform) return odd(v * (m + l));
        return odd(l * (u + v));
    };

    std::array<std::array<bool, 8>, 8> anti{};
    auto set = [&](ExtElement p, ExtElement q, bool value) {
        anti[static_cast<int>(p)][static_cast<int>(q)] = value;
        anti[static_cast<int>(q)][static_cast<int>(p)] = value;
    };
    using X = ExtElement;
    const bool pi_complex = form(X::Pi) == UnitSubset::Complex;
    const bool k_complex = form(X::K) == UnitSubset::Complex;
    const bool s_c = form(X::S) == UnitSubset::CForm;
    const bool f_c = form(X::F) == UnitSubset::CForm;

    set(X::W, X::E, odd(size(X::E)));
    set(X::W, X::C, odd(size(X::C)));
    set(X::E, X::C, odd(size(X::E) * size(X::C)));

    set(X::Pi, X::K, odd(a * b));
    if (pi_complex) {
        set(X::Pi, X::S, s_c ? odd(m) : odd(l));
        set(X::Pi, X::F, f_c ? odd(m) : odd(l));
    } else {
        set(X::Pi, X::S, s_c ? !odd(v) : odd(u));
        set(X::Pi, X::F, f_c ? odd(v) : !odd(u));
    }
    set(X::Pi, X::W, !pi_complex);
    set(X::Pi, X::E, pk_vs_ec(form(X::Pi), form(X::E)));
    set(X::Pi, X::C, pk_vs_ec(form(X::Pi), form(X::C)));

    if (k_complex) {
        set(X::K, X::S, s_c ? !odd(m) : odd(l));
        set(X::K, X::F, f_c ? odd(m) : !odd(l));
    } else {
        set(X::K, X::S, s_c ? odd(v) : odd(u));
        set(X::K, X::F, f_c ? odd(v) : odd(u));
    }
    set(X::K, X::W, k_complex);
    set(X::K, X::E, pk_vs_ec(form(X::K), form(X::E)));
    set(X::K, X::C, pk_vs_ec(form(X::K), form(X::C)));

    set(X::S, X::F, odd(s * g));
    set(X::S, X::W, odd(s * g));
    set(X::F, X::W, odd(s * g));
    set(X::S, X::E, sf_vs_ec(form(X::S), form(X::E)));
    set(X::S, X::C, sf_vs_ec(form(X::S), form(X::C)));
    set(X::F, X::E, sf_vs_ec(form(X::F), form(X::E)));
    set(X::F, X::C, sf_vs_ec(form(X::F), form(X::C)));

    CommutationProfile p;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) p.rel[i][j] = anti[i][j] ? Relation::Anticommute : Relation::Commute;
    return p;
}

std::string ext_class_name(ExtClass c) {
    switch (c) {
        case ExtClass::Z2Z2Z2: return "Z2xZ2xZ2";
        case ExtClass::Z4Z2: return "Z4xZ2";
        case ExtClass::Z8: return "Z8";
        case ExtClass::D4: return "D4";
        case ExtClass::Q4: return "Q4";
        case ExtClass::StarZ4Z2: return "*Z4xZ2";
    }
    return "?";
}

const std::vector<Order8Row>& order8_table() {
    static const std::vector<Order8Row> rows{
        {ExtClass::Z2Z2Z2, true, 7, 0, 0}, {ExtClass::Z4Z2, true, 3, 4, 0},  {ExtClass::Z8, true, 1, 2, 4},
        {ExtClass::D4, false, 5, 2, 0},     {ExtClass::Q4, false, 1, 6, 0},   {ExtClass::StarZ4Z2, false, 3, 4, 0},
    };
    return rows;
}

ExtClassification classify_ext_group(const std::vector<Matrix>& elems) {
    if (elems.empty()) throw std::invalid_argument("empty element list");
    const Matrix id = Matrix::identity(elems.front().dim());
    std::vector<Matrix> reps{id};
    for (const Matrix& x : elems) {
        const bool seen = std::any_of(reps.begin(), reps.end(), [&](const Matrix& r) { return x.compare_up_to_sign(r) != 0; });
        if (!seen) reps.push_back(x);
    }
    ExtClassification r;
    r.distinct = reps.size();
    int order8 = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (std::size_t j = i + 1; j < reps.size(); ++j) {
            if (!(reps[i] * reps[j] == reps[j] * reps[i])) r.abelian = false;
        }
        if (i == 0) continue;
        Matrix x = reps[i];
        int k = 1;
        while (!(x == id)) {
            if (++k > 16) throw std::runtime_error("element order exceeds 16");
            x = x * reps[i];
        }
        if (k == 2) ++r.order2;
        else if (k == 4) ++r.order4;
        else if (k == 8) ++order8;
        else throw std::runtime_error("element of order " + std::to_string(k) + " outside the order-8 table");
    }
    const GroupTable signed_group = generate_group(reps);
    r.signed_order = signed_group.size();
    try {
        r.signed_group = identify_small_group(signed_group);
    } catch (const std::out_of_range&) {
        r.signed_group.clear();
    }
    if (!r.faithful()) {
        r.name = r.signed_group.empty() ? "order " + std::to_string(r.signed_order) : r.signed_group;
        return r;
    }
    for (const auto& row : order8_table()) {
        if (row.abelian == r.abelian && row.order2 == r.order2 && row.order4 == r.order4 && row.order8 == order8) {
            r.cls = row.cls;
            r.name = ext_class_name(row.cls);
            return r;
        }
    }
    throw std::runtime_error(std::string(r.abelian ? "Abelian" : "non-Abelian") + " order structure " + r.order_structure() +
                             " is outside the order-8 table");
}

ExtClassification classify_ext_group(const ExtGroupMatrices& m) { return classify_ext_group(m.all()); }

bool admissible_signature(const SignatureVector& s) {
    const int plus = s.plus_count();
    return plus == 7 || plus == 5 || plus == 3 || plus == 1;
}

SignatureCensus enumerate_signatures(int max_n, unsigned threads) {
    if (max_n < 0 || max_n > 10) throw std::invalid_argument("enumerate_signatures supports 0 <= p+q <= 10");
    std::vector<Signature> sigs;
    for (int n = 0; n <= max_n; n += 2) {
        for (int p = 0; p <= n; ++p) {
            const Signature sig(p, n - p);
            const int t = sig.type();
            if (t == 0 || t == 2 || t == 4 || t == 6) sigs.push_back(sig);
        }
    }
    SignatureCensus census;
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t idx = next++; idx < sigs.size(); idx = next++) {
            const Signature sig = sigs[idx];
            for (const SpinBasis& basis : spinbasis_variants(sig)) {
                const ExtGroupMatrices m = ext_group(basis);
                const SignatureVector sv = signature_vector(m);
                std::string cls;
                try {
                    cls = classify_ext_group(m).name;
                } catch (const std::runtime_error& e) {
                    cls = std::string("unclassified: ") + e.what();
                }
                std::lock_guard lock(mu);
                ++census.instances;
                CensusEntry& entry = census.realized[sv];
                entry.sig = sv;
                entry.classes.insert(cls);
                entry.where.insert(sig.to_string());
                if (!admissible_signature(sv)) {
                    census.inadmissible.push_back(sig.to_string() + " " + sv.to_string() + " [" + basis.provenance + "]");
                }
            }
        }
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(sigs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    std::sort(census.inadmissible.begin(), census.inadmissible.end());
    return census;
}

}  // namespace cliffork
