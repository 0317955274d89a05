#include "cliffork/coverings.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliffork {

int AbcSignature::plus_count() const { return static_cast<int>(std::count(s.begin(), s.end(), 1)); }

std::string AbcSignature::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += s[i] > 0 ? "+" : "-";
    }
    return out + ")";
}

AbcSignature AbcSignature::parse(const std::string& text) {
    AbcSignature v;
    std::size_t k = 0;
    for (char ch : text) {
        if (ch != '+' && ch != '-') continue;
        if (k == 3) throw std::invalid_argument("signature has more than three signs: " + text);
        v.s[k++] = ch == '+' ? 1 : -1;
    }
    if (k != 3) throw std::invalid_argument("signature needs three signs: " + text);
    return v;
}

const std::vector<PTRow>& pt_table() {
    static const std::vector<PTRow> rows{
        {AbcSignature::parse("+++"), "Z2xZ2xZ2", false}, {AbcSignature::parse("+--"), "Z2xZ4", false},
        {AbcSignature::parse("-+-"), "Z2xZ4", false},    {AbcSignature::parse("--+"), "Z2xZ4", false},
        {AbcSignature::parse("---"), "Q4", true},        {AbcSignature::parse("-++"), "D4", true},
        {AbcSignature::parse("+-+"), "D4", true},        {AbcSignature::parse("++-"), "D4", true},
    };
    return rows;
}

const PTRow& pt_row(const AbcSignature& s) {
    for (const PTRow& r : pt_table())
        if (r.sig == s) return r;
    throw std::logic_error("no PT row for " + s.to_string());
}

const std::vector<CptRow>& cpt_table() {
    static const std::vector<CptRow> rows{
        {"+++++++", 7, true, "Z2xZ2xZ2xZ2"},
        {"3+4-", 3, true, "Z4xZ2xZ2"},
        {"1+6-", 1, false, "Q4xZ2"},
        {"5+2-", 5, false, "D4xZ2"},
        {"3+4-", 3, false, "*Z4xZ2xZ2"},
    };
    return rows;
}

bool CoveringReport::consistent() const {
    if (!computed) return true;
    if (predicted) return *predicted == *computed;
    return std::find(admissible.begin(), admissible.end(), *computed) != admissible.end();
}

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

AbcSignature abc(const char* text) { return AbcSignature::parse(text); }

// Signatures of the family that real types 0,4 (first sign +) or 2,6 (first sign -) admit.
std::vector<AbcSignature> family(int type) {
    if (type == 0 || type == 4) return {abc("+++"), abc("+--"), abc("+-+"), abc("++-")};
    return {abc("-+-"), abc("--+"), abc("---"), abc("-++")};
}

void set_cover(CoveringReport& r, const AbcSignature& s) {
    const PTRow& row = pt_row(s);
    r.cover_group = row.cover;
    r.cliffordian = row.anticommuting;
}

// Sign of the square of a product of units: + iff (plus - minus) mod 8 lies in {0,1,4,5}.
int product_square_rule(int plus, int minus) {
    const int d = (((plus - minus) % 8) + 8) % 8;
    return (d == 0 || d == 1 || d == 4 || d == 5) ? 1 : -1;
}

std::optional<AbcSignature> real_even_prediction(const Signature& sig, CoveringReport& r) {
    const int p = mod4(sig.p);
    const int q = mod4(sig.q);
    switch (sig.type()) {
        case 0:
            r.notes.push_back("ring R, p-q = 0 (mod 8), p,q = " + std::to_string(p) + " (mod 4)");
            if (p == 0) return abc("+++");
            if (p == 2) return abc("+--");
            if (p == 3) return abc("+-+");
            return abc("++-");
        case 2:
            r.notes.push_back("ring R, p-q = 2 (mod 8), p = " + std::to_string(p) + ", q = " + std::to_string(q) + " (mod 4)");
            if (p == 2 && q == 0) return abc("-+-");
            if (p == 0 && q == 2) return abc("--+");
            if (p == 3 && q == 1) return abc("---");
            return abc("-++");
        default:
            return std::nullopt;
    }
}

// Quaternionic case: E a product of k skewsymmetric units (l with square +I,
// t with -I) and C of the symmetric ones (h, g), or the reverse for odd k.
AbcSignature quaternionic_prediction(const SpinBasis& basis, const ExtGroupMatrices& m, CoveringReport& r) {
    const std::uint32_t e_units = m.units[static_cast<int>(ExtElement::E)];
    const std::uint32_t c_units = m.units[static_cast<int>(ExtElement::C)];
    auto squares = [&](std::uint32_t mask) {
        int plus = 0, minus = 0;
        for (int i = 0; i < basis.n(); ++i) {
            if (!(mask & (1u << i))) continue;
            ((basis.mats[i] * basis.mats[i]).sign_of_identity() > 0 ? plus : minus) += 1;
        }
        return std::pair{plus, minus};
    };
    const auto [ep, em] = squares(e_units);
    const auto [cp, cm] = squares(c_units);
    AbcSignature s;
    s.s[0] = basis.sig.type() == 4 ? 1 : -1;
    s.s[1] = product_square_rule(ep, em);
    s.s[2] = product_square_rule(cp, cm);
    const bool k_even = m.form[static_cast<int>(ExtElement::E)] == UnitSubset::Skew;
    r.notes.push_back(std::string("ring H, E from ") + (k_even ? "an even number of skewsymmetric" : "the symmetric") +
                      " units: (+,-) counts E " + std::to_string(ep) + "," + std::to_string(em) + ", C " + std::to_string(cp) +
                      "," + std::to_string(cm));
    // The printed rule lists two signatures for each (type, parity of k).
    const bool abelian_row = !pt_row(s).anticommuting;
    if (abelian_row != k_even)
        r.notes.push_back("signature " + s.to_string() + " is outside the printed list for this parity of k");
    return s;
}

AbcSignature computed_abc(const ExtGroupMatrices& m) {
    const SignatureVector v = signature_vector(m);
    return AbcSignature{{v.s[0], v.s[1], v.s[2]}};
}

CoveringReport pt_even(const SpinBasis& basis) {
    CoveringReport r;
    const Signature sig(basis.sig.p, basis.sig.q);
    r.subject = sig.to_string();
    const ExtGroupMatrices m = ext_group(basis);
    r.computed = computed_abc(m);
    if (auto pred = real_even_prediction(sig, r)) {
        r.predicted = pred;
    } else {
        r.admissible = family(sig.type());
        r.predicted = quaternionic_prediction(basis, m, r);
    }
    r.notes.push_back("matrices: " + m.provenance);
    set_cover(r, *r.predicted);
    return r;
}

}  // namespace

CoveringReport pt_structure_complex(int n) {
    if (n < 0) throw std::invalid_argument("complex dimension must be non-negative");
    CoveringReport r;
    r.subject = "C_" + std::to_string(n);
    const int k = n % 4;
    r.predicted = (k == 0 || k == 1) ? abc("+++") : abc("---");
    set_cover(r, *r.predicted);
    r.notes.push_back(std::string(r.cliffordian ? "Cliffordian" : "non-Cliffordian") + " cover, n = " + std::to_string(k) +
                      " (mod 4)");
    if (n % 2 == 1)
        r.notes.push_back("Pin(" + std::to_string(n) + ",C) = Pin(" + std::to_string(n - 1) + ",C) u e_{1.." +
                          std::to_string(n) + "} Pin(" + std::to_string(n - 1) + ",C)");
    return r;
}

CoveringReport pt_structure(const SpinBasis& basis) {
    const Signature sig(basis.sig.p, basis.sig.q);
    if (sig.n() % 2 != 0) throw std::invalid_argument("a spinbasis report needs an even-dimensional signature");
    return pt_even(basis);
}

CoveringReport pt_structure(const Signature& input) {
    const Signature sig(input.p, input.q);
    if (input.complex()) return pt_structure_complex(sig.n());
    const int t = sig.type();
    if (sig.n() % 2 == 0) return pt_even(build_spinbasis(sig));

    CoveringReport r;
    r.subject = sig.to_string();
    if (t == 3 || t == 7) {
        if (sig.p % 2 == 0) {
            r.predicted = abc("+++");
            r.notes.push_back("ring C with p even, q odd: Pin^{+,+,+}(" + std::to_string(sig.n() - 1) + ",C)");
        } else {
            r.predicted = abc("---");
            r.notes.push_back("ring C with p odd, q even: Pin^{-,-,-}(" + std::to_string(sig.n() - 1) + ",C)");
        }
        set_cover(r, *r.predicted);
        return r;
    }
    // Types 1,5: the two summands Cl(p,q-1) and Cl(q,p-1), when they exist.
    std::vector<std::string> addends;
    auto add_family = [&](const Signature& s) {
        addends.push_back(s.to_string() + " (type " + std::to_string(s.type()) + ")");
        for (const AbcSignature& a : family(s.type()))
            if (std::find(r.admissible.begin(), r.admissible.end(), a) == r.admissible.end()) r.admissible.push_back(a);
    };
    if (sig.q >= 1) add_family(Signature(sig.p, sig.q - 1));
    if (sig.p >= 1) add_family(Signature(sig.q, sig.p - 1));
    std::sort(r.admissible.begin(), r.admissible.end());
    std::string joined;
    for (const auto& a : addends) joined += (joined.empty() ? "" : ", ") + a;
    r.notes.push_back("double ring " + ring_name(division_ring(sig).ring) + ", summands " + joined + ": admits " +
                      std::to_string(r.admissible.size()) + " signatures");
    return r;
}

namespace {

CoveringReport cpt_from_basis(const SpinBasis& basis) {
    const Signature sig(basis.sig.p, basis.sig.q);
    const Ring ring = division_ring(sig).ring;
    if (ring == Ring::R) {
        CoveringReport r = pt_even(basis);
        r.notes.push_back("ring R: the extended structure reduces to the PT row");
        return r;
    }
    CoveringReport r = pt_even(basis);
    const ExtGroupMatrices m = ext_group(basis);
    const SignatureVector v = signature_vector(m);
    const bool abelian = commutation_profile(m).abelian();
    r.ext_signature = v;
    r.ext_abelian = abelian;
    for (const CptRow& row : cpt_table()) {
        if (row.plus == v.plus_count() && row.abelian == abelian) {
            r.cover_group = row.cover;
            r.cliffordian = !abelian;
            const ExtClassification cls = classify_ext_group(m);
            r.notes.push_back("extended group " + cls.name + " " + cls.order_structure() + ", signed group " +
                              (cls.signed_group.empty() ? "order " + std::to_string(cls.signed_order) : cls.signed_group));
            return r;
        }
    }
    throw CoveringError("signature " + v.to_string() + " (" + (abelian ? "Abelian" : "non-Abelian") +
                        ") is outside the CPT cover table [" + m.provenance + "]");
}

}  // namespace

CoveringReport cpt_structure(const SpinBasis& basis) { return cpt_from_basis(basis); }

CoveringReport cpt_structure(const Signature& input) {
    const Signature sig(input.p, input.q);
    const Ring ring = division_ring(sig).ring;
    if (sig.n() % 2 != 0 || (ring != Ring::R && ring != Ring::H))
        throw std::invalid_argument("cpt_structure needs an even-dimensional signature with ring R or H, got " + sig.to_string());
    return cpt_from_basis(build_spinbasis(sig));
}

std::optional<MultiVector> multivector_inverse(const MultiVector& x) {
    const Signature& sig = x.sig();
    const int n = sig.n();
    if (n > 10) throw std::invalid_argument("multivector_inverse supports n <= 10");
    const std::size_t dim = std::size_t{1} << n;
    // Column B of the left-regular matrix holds x * e_B; augmented with the unit.
    std::vector<std::vector<Gaussian>> a(dim, std::vector<Gaussian>(dim + 1));
    for (std::uint32_t col = 0; col < dim; ++col) {
        const MultiVector prod = x * MultiVector(sig, Blade(col));
        for (const auto& [blade, c] : prod.terms()) a[blade.bits()][col] = c;
    }
    a[0][dim] = Gaussian(1);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t pivot = col;
        while (pivot < dim && a[pivot][col].is_zero()) ++pivot;
        if (pivot == dim) return std::nullopt;
        std::swap(a[pivot], a[col]);
        const Gaussian inv = Gaussian(1) / a[col][col];
        for (std::size_t k = col; k <= dim; ++k) a[col][k] *= inv;
        for (std::size_t row = 0; row < dim; ++row) {
            if (row == col || a[row][col].is_zero()) continue;
            const Gaussian f = a[row][col];
            for (std::size_t k = col; k <= dim; ++k) a[row][k] -= f * a[col][k];
        }
    }
    MultiVector y(sig);
    for (std::uint32_t b = 0; b < dim; ++b)
        if (!a[b][dim].is_zero()) y.add_term(Blade(b), a[b][dim]);
    return y;
}

MembershipReport membership(const MultiVector& x) {
    const Signature& sig = x.sig();
    if (sig.n() > 4) throw std::invalid_argument("membership checks support p+q <= 4");
    MembershipReport r;
    const auto inv = multivector_inverse(x);
    r.invertible = inv.has_value();
    if (!r.invertible) {
        r.reason = "not invertible";
        return r;
    }
    const int par = x.parity();
    r.homogeneous = par >= 0;
    r.even = par == 0;
    const MultiVector norm = x * reversion(x);
    if (norm.is_scalar() || norm.is_zero()) r.norm = norm.is_zero() ? Gaussian(0) : norm.scalar_value();
    r.vectors_preserved = true;
    for (int i = 1; i <= sig.n() && r.vectors_preserved; ++i) {
        const MultiVector image = x * MultiVector::generator(sig, i) * *inv;
        for (const auto& [blade, c] : image.terms()) {
            if (blade.grade() != 1) {
                r.vectors_preserved = false;
                break;
            }
        }
    }
    const bool unit_norm = r.norm && (*r.norm == Gaussian(1) || *r.norm == Gaussian(-1));
    if (!r.homogeneous) {
        r.reason = "mixed parity";
    } else if (!r.vectors_preserved) {
        r.reason = "conjugation leaves the vector space";
    } else if (!unit_norm) {
        r.reason = r.norm ? "norm " + r.norm->to_string() + " is not +-1" : "norm is not a scalar";
    }
    r.pin = r.reason.empty();
    r.spin = r.pin && r.even;
    r.spin_plus = r.spin && *r.norm == Gaussian(1);
    return r;
}

bool pin_membership(const MultiVector& x) { return membership(x).pin; }
bool spin_membership(const MultiVector& x) { return membership(x).spin; }

OddDecompositionReport odd_dimensional_decomposition_report(const Signature& input) {
    const Signature sig(input.p, input.q);
    if (sig.n() % 2 == 0) throw std::invalid_argument("odd-dimensional decomposition needs odd p+q, got " + sig.to_string());
    OddDecompositionReport r;
    r.sig = sig;
    const std::string p = std::to_string(sig.p);
    const std::string q = std::to_string(sig.q);
    const std::string pin = "Pin(" + p + "," + q + ")";
    if (sig.q >= 1) r.decompositions.push_back(pin + " = Pin(" + p + "," + std::to_string(sig.q - 1) + ") u w Pin(" + p + "," + std::to_string(sig.q - 1) + ")");
    if (sig.p >= 1) r.decompositions.push_back(pin + " = Pin(" + q + "," + std::to_string(sig.p - 1) + ") u w Pin(" + q + "," + std::to_string(sig.p - 1) + ")");
    r.decompositions.push_back(pin + " = Spin(" + p + "," + q + ") u w Spin(" + p + "," + q + ")");

    const MultiVector w = MultiVector::volume(sig);
    r.omega_square = volume_square(sig);
    r.omega_odd = w.parity() == 1;
    r.omega_central = true;
    for (int i = 1; i <= sig.n(); ++i) {
        const MultiVector e = MultiVector::generator(sig, i);
        if (!(w * e == e * w)) r.omega_central = false;
    }
    r.omega_in_pin = sig.n() <= 4 ? pin_membership(w) : r.omega_central && (w * reversion(w)).is_scalar();
    r.omega_unit = r.omega_square < 0 ? "i" : "e";

    struct Known {
        int p, q;
        const char* label;
        const char* unit;
    };
    static const std::array<Known, 4> known{{{3, 0, "SU(2) u iSU(2)", "i"},
                                             {0, 3, "SU(2) u eSU(2)", "e"},
                                             {5, 0, "Sp(2) u eSp(2)", "e"},
                                             {0, 5, "Sp(2) u iSp(2)", "i"}}};
    for (const Known& k : known) {
        if (k.p == sig.p && k.q == sig.q) {
            r.unitary_label = k.label;
            r.label_matches_omega = r.omega_unit == k.unit;
        }
    }
    return r;
}

}  // namespace cliffork
