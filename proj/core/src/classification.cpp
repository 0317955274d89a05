#include "cliffork/classification.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace cliffork {

std::string ring_name(Ring r) {
    switch (r) {
        case Ring::R: return "R";
        case Ring::C: return "C";
        case Ring::H: return "H";
        case Ring::RR: return "2R";
        case Ring::HH: return "2H";
    }
    return "?";
}

std::string AlgebraClass::label() const {
    std::string s = ring_name(ring);
    if (matrix_dim != 1) s += "(" + std::to_string(matrix_dim) + ")";
    return s;
}

AlgebraClass division_ring(const Signature& sig) {
    if (sig.complex()) throw std::invalid_argument("division_ring expects a real signature");
    AlgebraClass c;
    c.mod8 = sig.type();
    const int n = sig.n();
    int exponent = 0;
    switch (c.mod8) {
        case 0:
        case 2:
            c.ring = Ring::R;
            exponent = n / 2;
            break;
        case 3:
        case 7:
            c.ring = Ring::C;
            exponent = (n - 1) / 2;
            break;
        case 4:
        case 6:
            c.ring = Ring::H;
            exponent = (n - 2) / 2;
            break;
        case 1:
            c.ring = Ring::RR;
            exponent = (n - 1) / 2;
            break;
        case 5:
            c.ring = Ring::HH;
            exponent = (n - 3) / 2;
            break;
    }
    c.simple = c.mod8 != 1 && c.mod8 != 5;
    c.matrix_dim = std::int64_t{1} << exponent;
    return c;
}

namespace {
constexpr std::array<int, 8> kRadonHurwitzBase{0, 1, 2, 2, 3, 3, 3, 3};
}

int radon_hurwitz(int i) {
    if (i < 0) throw std::invalid_argument("Radon-Hurwitz number needs a non-negative index");
    return radon_hurwitz_extended(i);
}

int radon_hurwitz_extended(int i) {
    const int period = (i >= 0) ? i / 8 : -((-i + 7) / 8);
    const int rest = i - 8 * period;
    return kRadonHurwitzBase[rest] + 4 * period;
}

int idempotent_factor_count(const Signature& sig) {
    if (sig.complex()) throw std::invalid_argument("idempotent_factor_count expects a real signature");
    return sig.q - radon_hurwitz_extended(sig.q - sig.p);
}

PrimitiveIdempotent primitive_idempotent(const Signature& sig) {
    const AlgebraClass cls = division_ring(sig);
    if (!cls.simple) throw std::invalid_argument("primitive_idempotent expects a simple algebra, got " + sig.to_string());
    const int k = idempotent_factor_count(sig);

    std::vector<Blade> order;
    for (std::uint32_t b = 1; b <= sig.full_mask(); ++b) order.emplace_back(b);
    std::sort(order.begin(), order.end(), BladeOrder{});

    const std::uint32_t neg = sig.negative_mask();
    PrimitiveIdempotent out{MultiVector(sig, Gaussian(1)), {}};
    for (Blade b : order) {
        if (static_cast<int>(out.generators.size()) == k) break;
        if (blade_product_sign(b.bits(), b.bits(), neg) != 1) continue;
        bool commutes = true;
        for (Blade a : out.generators) {
            if (blade_product_sign(a.bits(), b.bits(), neg) != blade_product_sign(b.bits(), a.bits(), neg)) {
                commutes = false;
                break;
            }
        }
        if (!commutes) continue;
        // Independence: a product of accepted blades would make the factor redundant.
        bool dependent = false;
        const std::size_t m = out.generators.size();
        for (std::uint32_t subset = 1; subset < (1u << m) && !dependent; ++subset) {
            std::uint32_t prod = 0;
            for (std::size_t t = 0; t < m; ++t)
                if (subset & (1u << t)) prod ^= out.generators[t].bits();
            dependent = prod == b.bits();
        }
        if (dependent) continue;
        out.generators.push_back(b);
    }
    if (static_cast<int>(out.generators.size()) != k) {
        throw std::runtime_error("no commuting idempotent family of size " + std::to_string(k) + " in " + sig.to_string());
    }
    const Gaussian half(Rational(1, 2));
    for (Blade b : out.generators) {
        out.f = out.f * ((MultiVector(sig, Gaussian(1)) + MultiVector(sig, b)) * half);
    }
    return out;
}

std::string family_name(SalingarosFamily f) {
    switch (f) {
        case SalingarosFamily::NOdd: return "N_odd";
        case SalingarosFamily::NEven: return "N_even";
        case SalingarosFamily::OmegaOdd: return "Omega_odd";
        case SalingarosFamily::OmegaEven: return "Omega_even";
        case SalingarosFamily::S: return "S";
    }
    return "?";
}

std::string SalingarosLabel::to_string() const {
    switch (family) {
        case SalingarosFamily::NOdd:
        case SalingarosFamily::NEven: return "N" + std::to_string(index);
        case SalingarosFamily::OmegaOdd:
        case SalingarosFamily::OmegaEven: return "Omega" + std::to_string(index);
        case SalingarosFamily::S: return "S" + std::to_string(index);
    }
    return "?";
}

SalingarosLabel salingaros_type(const Signature& sig) {
    if (sig.complex()) throw std::invalid_argument("salingaros_type expects a real signature");
    const int n = sig.n();
    const int t = sig.type();
    SalingarosLabel l;
    if (n == 0) {
        l.family = SalingarosFamily::NOdd;
        l.index = 0;
        return l;
    }
    const int k = n / 2;
    switch (t) {
        case 0:
        case 2:
            l.family = SalingarosFamily::NOdd;
            l.index = 2 * k - 1;
            break;
        case 4:
        case 6:
            l.family = SalingarosFamily::NEven;
            l.index = 2 * k;
            break;
        case 1:
            l.family = SalingarosFamily::OmegaOdd;
            l.index = (n == 1) ? 0 : 2 * k - 1;
            break;
        case 5:
            l.family = SalingarosFamily::OmegaEven;
            l.index = 2 * k;
            break;
        case 3:
        case 7:
            l.family = SalingarosFamily::S;
            l.index = k;
            break;
    }
    return l;
}

std::string center_name(GroupCenter c) {
    switch (c) {
        case GroupCenter::Z2: return "Z2";
        case GroupCenter::Z2xZ2: return "Z2xZ2";
        case GroupCenter::Z4: return "Z4";
    }
    return "?";
}

GroupCenter group_center_type(const Signature& sig) {
    const int t = sig.type();
    if (t % 2 == 0) return GroupCenter::Z2;
    if (t == 1 || t == 5) return GroupCenter::Z2xZ2;
    return GroupCenter::Z4;
}

std::int64_t salingaros_factor_order(const Signature& sig) { return std::int64_t{1} << (2 * (sig.n() / 2)); }

std::string table_kind_name(TableKind k) {
    switch (k) {
        case TableKind::Rings: return "rings";
        case TableKind::Salingaros: return "salingaros";
        case TableKind::Representations: return "representations";
        case TableKind::Quotient: return "quotient";
    }
    return "?";
}

TableKind parse_table_kind(const std::string& name) {
    for (TableKind k : {TableKind::Rings, TableKind::Salingaros, TableKind::Representations, TableKind::Quotient}) {
        if (table_kind_name(k) == name) return k;
    }
    throw std::invalid_argument("unknown table kind '" + name + "'");
}

std::string cell_label(const Signature& sig, TableKind kind) {
    switch (kind) {
        case TableKind::Rings: return division_ring(sig).label();
        case TableKind::Salingaros: return salingaros_type(sig).to_string();
        case TableKind::Representations:
        case TableKind::Quotient: {
            const AlgebraClass c = division_ring(sig);
            const int t = c.mod8;
            std::string s;
            if (t == 1 || t == 5) s = (kind == TableKind::Quotient) ? "e" : "2";
            if (t == 3 || t == 7) {
                s += "C";
            } else if (t == 4 || t == 5 || t == 6) {
                s += "H";
            } else {
                s += "R";
            }
            const int sup = (t == 1) ? 0 : (t == 5) ? 4 : t;
            s += "^" + std::to_string(sup) + "_" + std::to_string(c.matrix_dim / 2);
            return s;
        }
    }
    return "?";
}

PeriodicTable periodic_table(int p_max, int q_max, TableKind kind) {
    if (p_max < 0 || q_max < 0) throw std::invalid_argument("table bounds must be non-negative");
    PeriodicTable t;
    t.kind = kind;
    t.p_max = p_max;
    t.q_max = q_max;
    t.rows.resize(q_max + 1);
    for (int q = 0; q <= q_max; ++q) {
        for (int p = 0; p <= p_max; ++p) {
            TableCell cell{p, q, cell_label(Signature(p, q), kind), {}};
            if (kind == TableKind::Salingaros) {
                if (p == 0 && q == 0) {
                    // The printed table shows N1 here although the group of Cl(0,0) is N0 = Z2.
                    cell.label = "N1";
                    cell.note = "printed N1; the group of Cl(0,0) is N0 = Z2";
                } else if (p > 7 || q > 7) {
                    cell.note = "index derived outside the printed range";
                }
            }
            t.rows[q].push_back(std::move(cell));
        }
    }
    return t;
}

std::string to_markdown(const PeriodicTable& t) {
    std::ostringstream os;
    os << "| q \\ p |";
    for (int p = 0; p <= t.p_max; ++p) os << " " << p << " |";
    os << "\n|---|";
    for (int p = 0; p <= t.p_max; ++p) os << "---|";
    os << "\n";
    for (int q = 0; q <= t.q_max; ++q) {
        os << "| " << q << " |";
        for (int p = 0; p <= t.p_max; ++p) os << " " << t.at(p, q).label << " |";
        os << "\n";
    }
    bool any_note = false;
    for (const auto& row : t.rows) {
        for (const auto& cell : row) {
            if (cell.note.empty()) continue;
            if (!any_note) os << "\n";
            any_note = true;
            os << "- (" << cell.p << "," << cell.q << "): " << cell.note << "\n";
        }
    }
    return os.str();
}

}  // namespace cliffork
