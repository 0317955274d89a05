#include "cliffork/spinor.hpp"

#include <algorithm>
#include <tuple>

namespace cliffork {

std::string MatrixClass::to_string() const {
    std::string s = real ? "real/" : "complex/";
    switch (symmetry) {
        case Symmetry::Symmetric: return s + "symmetric";
        case Symmetry::Skew: return s + "skewsymmetric";
        case Symmetry::Mixed: return s + "mixed";
    }
    return s;
}

MatrixClass classify_matrix(const Matrix& m) {
    MatrixClass c;
    c.real = m.is_real();
    if (m.is_symmetric()) {
        c.symmetry = Symmetry::Symmetric;
    } else if (m.is_skew_symmetric()) {
        c.symmetry = Symmetry::Skew;
    } else {
        c.symmetry = Symmetry::Mixed;
    }
    return c;
}

Matrix pauli_x() { return Matrix::from_rows({{0, 1}, {1, 0}}); }
Matrix pauli_z() { return Matrix::from_rows({{1, 0}, {0, -1}}); }
Matrix pauli_j() { return Matrix::from_rows({{0, 1}, {-1, 0}}); }

SpinBasis load_spinbasis(std::vector<Matrix> mats, std::optional<Signature> expected, std::string provenance) {
    SpinBasis sb;
    sb.provenance = std::move(provenance);
    const int n = static_cast<int>(mats.size());
    const std::size_t dim = mats.empty() ? 1 : mats.front().dim();
    std::vector<int> squares(n);
    for (int i = 0; i < n; ++i) {
        if (mats[i].dim() != dim) throw SpinBasisError("unit " + std::to_string(i + 1) + " has a different size", i + 1, 0);
        squares[i] = (mats[i] * mats[i]).sign_of_identity();
        if (squares[i] == 0) throw SpinBasisError("unit " + std::to_string(i + 1) + " does not square to +I or -I", i + 1, 0);
    }
    int p = 0;
    while (p < n && squares[p] == 1) ++p;
    for (int i = p; i < n; ++i) {
        if (squares[i] != -1) {
            throw SpinBasisError("unit " + std::to_string(i + 1) + " squares to +I after a unit squaring to -I", i + 1, 0);
        }
    }
    if (expected) {
        const Signature& e = *expected;
        if (e.n() != n) throw SpinBasisError("expected " + std::to_string(e.n()) + " units, got " + std::to_string(n), 0, 0);
        for (int i = 0; i < n; ++i) {
            const int want = (i < e.p) ? 1 : -1;
            if (squares[i] != want) {
                throw SpinBasisError("unit " + std::to_string(i + 1) + " squares to " + (squares[i] > 0 ? "+I" : "-I") +
                                         " but the signature requires " + (want > 0 ? "+I" : "-I"),
                                     i + 1, 0);
            }
        }
        sb.sig = e;
    } else {
        sb.sig = Signature(p, n - p);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!(mats[i] * mats[j] + mats[j] * mats[i]).is_zero()) {
                throw SpinBasisError("units " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " do not anticommute",
                                     i + 1, j + 1);
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        const MatrixClass c = classify_matrix(mats[i]);
        if (c.symmetry == Symmetry::Mixed) {
            throw SpinBasisError("unit " + std::to_string(i + 1) + " is neither symmetric nor skewsymmetric", i + 1, 0);
        }
        const bool sym = c.symmetry == Symmetry::Symmetric;
        sb.real_mask.push_back(c.real);
        sb.sym_mask.push_back(sym);
        if (c.real) {
            ++sb.b;
            ++(sym ? sb.v : sb.u);
        } else {
            ++sb.a;
            ++(sym ? sb.l : sb.m);
        }
    }
    sb.mats = std::move(mats);
    return sb;
}

namespace {

struct RawBasis {
    std::size_t dim = 1;
    std::vector<Matrix> mats;  // positives first
};

RawBasis real_raw(int p, int q) {
    const int t = (((p - q) % 8) + 8) % 8;
    if (t != 0 && t != 2) throw std::invalid_argument("no real spinbasis for Cl(" + std::to_string(p) + "," + std::to_string(q) + ")");
    RawBasis out;
    if (p == 0 && q == 0) return out;
    if (p >= 1 && q >= 1) {
        // Cl(p-1,q-1) -> Cl(p,q): E (x) Z keeps squares, I (x) X and I (x) J add one of each sign.
        const RawBasis base = real_raw(p - 1, q - 1);
        const Matrix id = Matrix::identity(base.dim);
        out.dim = base.dim * 2;
        for (int i = 0; i < p - 1; ++i) out.mats.push_back(kron(base.mats[i], pauli_z()));
        out.mats.push_back(kron(id, pauli_x()));
        for (int j = 0; j < q - 1; ++j) out.mats.push_back(kron(base.mats[p - 1 + j], pauli_z()));
        out.mats.push_back(kron(id, pauli_j()));
        return out;
    }
    if (q == 0) {
        // Cl(0,p-2) -> Cl(p,0): E (x) J flips every square.
        const RawBasis base = real_raw(0, p - 2);
        const Matrix id = Matrix::identity(base.dim);
        out.dim = base.dim * 2;
        out.mats.push_back(kron(id, pauli_x()));
        out.mats.push_back(kron(id, pauli_z()));
        for (const auto& e : base.mats) out.mats.push_back(kron(e, pauli_j()));
        return out;
    }
    // p == 0: Cl(4,q-4) -> Cl(0,q) with f_i = E_i U, U = E_1 E_2 E_3 E_4 (U^2 = +I).
    const RawBasis base = real_raw(4, q - 4);
    const Matrix u = base.mats[0] * base.mats[1] * base.mats[2] * base.mats[3];
    out.dim = base.dim;
    for (int i = 0; i < 4; ++i) out.mats.push_back(base.mats[i] * u);
    for (std::size_t i = 4; i < base.mats.size(); ++i) out.mats.push_back(base.mats[i]);
    return out;
}

int square_sign(const Matrix& m) { return (m * m).sign_of_identity(); }

// Stable reorder: units squaring to +I first.
std::vector<Matrix> positives_first(const std::vector<Matrix>& mats) {
    std::vector<Matrix> pos;
    std::vector<Matrix> neg;
    for (const auto& m : mats) (square_sign(m) > 0 ? pos : neg).push_back(m);
    pos.insert(pos.end(), neg.begin(), neg.end());
    return pos;
}

struct QuaternionicChoice {
    int base_p;
    std::uint32_t flips;
};

// All (real base, flip subset) pairs that realise Cl(p,q) by multiplying
// the flipped units of the real base by i.
std::vector<QuaternionicChoice> quaternionic_choices(int p, int q) {
    const int n = p + q;
    std::vector<QuaternionicChoice> out;
    for (int bp = 0; bp <= n; ++bp) {
        const int bt = (((2 * bp - n) % 8) + 8) % 8;
        if (bt != 0 && bt != 2) continue;
        for (std::uint32_t s = 0; s < (1u << n); ++s) {
            const int pos = __builtin_popcount(s & ((1u << bp) - 1u));
            const int neg = __builtin_popcount(s) - pos;
            if (pos - neg == bp - p) out.push_back({bp, s});
        }
    }
    return out;
}

std::vector<Matrix> apply_flips(const RawBasis& base, std::uint32_t flips) {
    std::vector<Matrix> mats = base.mats;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (flips & (1u << i)) mats[i] *= Gaussian::i();
    }
    return positives_first(mats);
}

std::string flips_text(std::uint32_t flips) {
    std::string s = "{";
    bool first = true;
    for (std::uint32_t b = flips; b != 0; b &= b - 1) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(__builtin_ctz(b) + 1);
    }
    return s + "}";
}

std::vector<Matrix> build_units(const Signature& sig, std::string& provenance) {
    const int p = sig.p;
    const int q = sig.q;
    const int t = sig.type();
    switch (t) {
        case 0:
        case 2: {
            provenance = "real doubling Cl(" + std::to_string(p) + "," + std::to_string(q) + ")";
            return real_raw(p, q).mats;
        }
        case 4:
        case 6: {
            auto choices = quaternionic_choices(p, q);
            auto best = std::min_element(choices.begin(), choices.end(), [](const auto& x, const auto& y) {
                return std::make_tuple(__builtin_popcount(x.flips), x.base_p, x.flips) <
                       std::make_tuple(__builtin_popcount(y.flips), y.base_p, y.flips);
            });
            const int bq = p + q - best->base_p;
            provenance = "real base Cl(" + std::to_string(best->base_p) + "," + std::to_string(bq) + ") with units " +
                         flips_text(best->flips) + " multiplied by i";
            return apply_flips(real_raw(best->base_p, bq), best->flips);
        }
        case 3:
        case 7: {
            // Append c*W to a basis one dimension lower; W anticommutes with every unit there.
            const bool add_positive = (t == 3) ? (p >= 1) : (q == 0);
            const Signature lower = add_positive ? Signature(p - 1, q) : Signature(p, q - 1);
            std::string inner;
            std::vector<Matrix> mats = build_units(lower, inner);
            Matrix w = Matrix::identity(mats.empty() ? 1 : mats.front().dim());
            for (const auto& e : mats) w = w * e;
            if (square_sign(w) != (add_positive ? 1 : -1)) w *= Gaussian::i();
            mats.push_back(w);
            provenance = inner + ", plus " + std::string(add_positive ? "+" : "-") + " unit from the volume product";
            return positives_first(mats);
        }
        default:
            throw std::invalid_argument(sig.to_string() + " is semi-simple; use the quotient module");
    }
}

}  // namespace

SpinBasis build_real_spinbasis(int p, int q) {
    return load_spinbasis(real_raw(p, q).mats, Signature(p, q), "real doubling");
}

SpinBasis build_spinbasis(const Signature& sig) {
    const Signature real(sig.p, sig.q);
    if (real.n() == 0) {
        SpinBasis sb;
        sb.sig = sig;
        sb.provenance = "Cl(0,0) acting on a line";
        return sb;
    }
    std::string provenance;
    std::vector<Matrix> mats = build_units(real, provenance);
    SpinBasis sb = load_spinbasis(std::move(mats), real, provenance);
    sb.sig = sig;
    return sb;
}

std::vector<SpinBasis> spinbasis_variants(const Signature& sig) {
    const Signature real(sig.p, sig.q);
    const int t = real.type();
    std::vector<std::pair<std::vector<Matrix>, std::string>> bases;
    if (t == 0 || t == 2) {
        bases.emplace_back(real_raw(sig.p, sig.q).mats, "real doubling");
    } else if (t == 4 || t == 6) {
        for (const auto& ch : quaternionic_choices(sig.p, sig.q)) {
            const int bq = sig.n() - ch.base_p;
            bases.emplace_back(apply_flips(real_raw(ch.base_p, bq), ch.flips),
                               "real base Cl(" + std::to_string(ch.base_p) + "," + std::to_string(bq) + ") flips " +
                                   flips_text(ch.flips));
        }
    } else {
        throw std::invalid_argument("variant sweep covers ring R and ring H signatures only, got " + real.to_string());
    }

    std::vector<SpinBasis> out;
    for (const auto& [mats, text] : bases) {
        for (int order = 0; order < 2; ++order) {
            std::vector<Matrix> ordered = mats;
            if (order == 1) {
                std::reverse(ordered.begin(), ordered.begin() + sig.p);
                std::reverse(ordered.begin() + sig.p, ordered.end());
            }
            for (int signs = 0; signs < 3; ++signs) {
                std::vector<Matrix> signed_mats = ordered;
                for (std::size_t i = 0; i < signed_mats.size(); ++i) {
                    const bool negate = (signs == 1 && i == 0) || (signs == 2 && i % 2 == 1);
                    if (negate) signed_mats[i] = -signed_mats[i];
                }
                std::string prov = text + (order ? ", reversed blocks" : "") +
                                   (signs == 1 ? ", first unit negated" : signs == 2 ? ", even units negated" : "");
                SpinBasis sb = load_spinbasis(std::move(signed_mats), real, prov);
                sb.sig = sig;
                out.push_back(std::move(sb));
            }
        }
    }
    return out;
}

Matrix blade_image(Blade b, const SpinBasis& basis) {
    Matrix m = Matrix::identity(basis.dim());
    for (int i : b.indices()) {
        if (i > basis.n()) throw std::out_of_range("blade index beyond the spinbasis");
        m = m * basis.mats[i - 1];
    }
    return m;
}

Matrix evaluate(const MultiVector& x, const SpinBasis& basis) {
    const Signature& sig = x.sig();
    const std::uint32_t marked = sig.complex() ? sig.q_mask() : 0u;
    Matrix out(basis.dim());
    for (const auto& [b, c] : x.terms()) {
        Gaussian coeff = c;
        // Over C the generator e_j (j > p) equals -i times the marked unit.
        const int k = __builtin_popcount(b.bits() & marked) % 4;
        static const Gaussian powers[4] = {Gaussian(1), Gaussian(Rational(0), Rational(-1)), Gaussian(-1),
                                           Gaussian(Rational(0), Rational(1))};
        coeff *= powers[k];
        out += blade_image(b, basis) * coeff;
    }
    return out;
}

}  // namespace cliffork
