#include "cliffork/quotient.hpp"

#include <algorithm>
#include <set>

namespace cliffork {

std::string auto_name(AutoMask m) {
    static const std::array<const char*, 8> names{"Id",  "star",     "tilde",     "tilde-star",
                                                  "bar", "bar-star", "bar-tilde", "bar-tilde-star"};
    return names.at(m & 7);
}

std::string auto_symbol(AutoMask m) {
    static const std::array<const char*, 8> names{"1", "P", "T", "PT", "C", "CP", "CT", "CPT"};
    return names.at(m & 7);
}

char auto_letter(AutoMask m) {
    if (m == 0 || m > 7) throw std::invalid_argument("the identity has no covering letter");
    return static_cast<char>('a' + m - 1);
}

MultiVector apply_auto(AutoMask m, const MultiVector& x) {
    MultiVector y = x;
    if ((m & kStar) && (m & kTilde)) {
        y = conjugation(y);
    } else if (m & kStar) {
        y = involution(y);
    } else if (m & kTilde) {
        y = reversion(y);
    }
    if (m & kBar) y = pseudo_conjugation(y);
    return y;
}

std::string target_name(Target t) { return t == Target::DropLast ? "drop-last" : "even-part"; }

namespace {

// Signed target blade for each even source blade under f_j = e_1 e_j, with
// the target generators ordered so that the f_j squaring to +1 come first.
std::vector<SignedBlade> build_even_image(const Signature& source) {
    const int n = source.n();
    std::vector<int> order;
    for (int j = source.p + 1; j <= n; ++j) order.push_back(j);
    for (int j = 2; j <= source.p; ++j) order.push_back(j);
    std::vector<SignedBlade> image(std::size_t{1} << n, SignedBlade{Blade(0), 0});
    for (std::uint32_t b = 0; b < (1u << (n - 1)); ++b) {
        MultiVector prod(source, Gaussian(1));
        for (int k = 0; k < n - 1; ++k) {
            if (!(b & (1u << k))) continue;
            prod = prod * MultiVector(source, Blade(1u | (1u << (order[k] - 1))));
        }
        const auto& [blade, c] = *prod.terms().begin();
        const int sign = c == Gaussian(1) ? 1 : -1;
        image[blade.bits()] = SignedBlade{Blade(b), sign};
    }
    return image;
}

MultiVector even_to_target(const MultiVector& x, const EpsilonContext& ctx) {
    MultiVector r(ctx.target);
    for (const auto& [b, c] : x.terms()) {
        const SignedBlade& sb = ctx.even_image.at(b.bits());
        if (sb.sign == 0) throw std::logic_error("odd blade reached the even-part map");
        r.add_term(sb.blade, sb.sign > 0 ? c : -c);
    }
    return r;
}

MultiVector retarget(const MultiVector& x, const Signature& target) {
    MultiVector r(target);
    for (const auto& [b, c] : x.terms()) r.add_term(b, c);
    return r;
}

}  // namespace

EpsilonContext make_context(const Signature& input, Target route) {
    if (input.n() % 2 == 0)
        throw QuotientError("the quotient map needs an odd-dimensional algebra, got " + input.to_string());
    EpsilonContext ctx;
    ctx.route = route;
    ctx.source = input;
    if (!input.complex() && (input.type() == 3 || input.type() == 7)) {
        ctx.source = Signature(input.p, input.q, Field::Complex);
        ctx.notes.push_back(input.to_string() + " has an imaginary central volume element; using C_" +
                            std::to_string(input.n()) + " marked by (" + std::to_string(input.p) + "," +
                            std::to_string(input.q) + ")");
    }
    const Signature& s = ctx.source;
    if (s.complex()) {
        if (route != Target::DropLast) throw QuotientError("the complex algebra only supports the drop-last route");
        ctx.target = s.q >= 1 ? Signature(s.p, s.q - 1, Field::Complex) : Signature(s.p - 1, 0, Field::Complex);
    } else if (route == Target::DropLast) {
        if (s.q < 1) throw QuotientError("the (p,q-1) route needs q >= 1, got " + s.to_string());
        ctx.target = Signature(s.p, s.q - 1);
    } else {
        if (s.p < 1) throw QuotientError("the (q,p-1) route needs p >= 1, got " + s.to_string());
        ctx.target = Signature(s.q, s.p - 1);
        ctx.even_image = build_even_image(s);
    }
    const MultiVector w = MultiVector::volume(s);
    const Gaussian w2 = (w * w).scalar_value();
    ctx.epsilon = w2 == Gaussian(1) ? Gaussian(1) : Gaussian::i();
    ctx.eps_omega = w * ctx.epsilon;
    return ctx;
}

std::vector<EpsilonContext> contexts_for(const Signature& sig) {
    if (sig.complex() || sig.type() == 3 || sig.type() == 7) return {make_context(sig, Target::DropLast)};
    std::vector<EpsilonContext> out;
    if (sig.q >= 1) out.push_back(make_context(sig, Target::DropLast));
    if (sig.p >= 1) out.push_back(make_context(sig, Target::EvenPart));
    return out;
}

Idempotents central_idempotents(const EpsilonContext& ctx) {
    const Signature& s = ctx.source;
    const MultiVector one(s, Gaussian(1));
    if (!(ctx.eps_omega * ctx.eps_omega == one))
        throw QuotientError("(eps omega)^2 is not 1 for " + s.to_string());
    const Gaussian half(Rational(1, 2));
    return {(one + ctx.eps_omega) * half, (one - ctx.eps_omega) * half};
}

IdempotentCheck check_idempotents(const EpsilonContext& ctx) {
    const Idempotents l = central_idempotents(ctx);
    const Signature& s = ctx.source;
    IdempotentCheck c;
    c.plus_idempotent = l.plus * l.plus == l.plus;
    c.minus_idempotent = l.minus * l.minus == l.minus;
    c.annihilate = (l.plus * l.minus).is_zero() && (l.minus * l.plus).is_zero();
    c.sum_is_one = l.plus + l.minus == MultiVector(s, Gaussian(1));
    c.central = true;
    for (int i = 1; i <= s.n(); ++i) {
        const MultiVector e = MultiVector::generator(s, i);
        if (!(e * l.plus == l.plus * e)) c.central = false;
    }
    return c;
}

EpsilonSplit epsilon_split(const MultiVector& x, const EpsilonContext& ctx) {
    const Signature& s = ctx.source;
    EpsilonSplit out{MultiVector(s), MultiVector(s)};
    if (ctx.route == Target::EvenPart) {
        out.a1 = grade_part(x, 0);
        out.a2 = ctx.eps_omega * grade_part(x, 1);
        return out;
    }
    // e_A = e_{A'} e_n = eps^{-1} e_{A'} w'^{-1} (eps w) with w' = e_1 ... e_{n-1}.
    const std::uint32_t last = 1u << (s.n() - 1);
    const MultiVector w_rest(s, Blade(s.full_mask() & ~last));
    const MultiVector w_rest_inv = w_rest * (w_rest * w_rest).scalar_value();
    const Gaussian eps_inv = Gaussian(1) / ctx.epsilon;
    for (const auto& [b, c] : x.terms()) {
        if (!(b.bits() & last)) {
            out.a1.add_term(b, c);
        } else {
            out.a2 += MultiVector(s, Blade(b.bits() & ~last), c * eps_inv) * w_rest_inv;
        }
    }
    return out;
}

MultiVector epsilon_map(const MultiVector& x, const EpsilonContext& ctx) {
    if (!(x.sig() == ctx.source)) throw QuotientError("element does not belong to " + ctx.source.to_string());
    const EpsilonSplit split = epsilon_split(x, ctx);
    if (ctx.route == Target::EvenPart) return even_to_target(split.a1 + split.a2, ctx);
    return retarget(split.a1 + split.a2, ctx.target);
}

namespace {

std::size_t rank_of(std::vector<std::vector<Gaussian>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        const Gaussian inv = Gaussian(1) / rows[rank][col];
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            const Gaussian f = rows[r][col] * inv;
            for (std::size_t k = col; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

HomomorphismCheck check_homomorphism(const EpsilonContext& ctx) {
    const Signature& s = ctx.source;
    if (s.n() > 7) throw std::invalid_argument("check_homomorphism supports n <= 7");
    const std::uint32_t count = 1u << s.n();
    std::vector<MultiVector> image;
    image.reserve(count);
    for (std::uint32_t b = 0; b < count; ++b) image.push_back(epsilon_map(MultiVector(s, Blade(b)), ctx));

    HomomorphismCheck c;
    for (std::uint32_t a = 0; a < count; ++a) {
        for (std::uint32_t b = 0; b < count; ++b) {
            ++c.pairs;
            const MultiVector lhs = epsilon_map(MultiVector(s, Blade(a)) * MultiVector(s, Blade(b)), ctx);
            if (lhs == image[a] * image[b]) continue;
            if (c.failures++ == 0)
                c.first_failure = "e_" + Blade(a).to_string() + " * e_" + Blade(b).to_string() + ": " + lhs.to_string() +
                                  " vs " + (image[a] * image[b]).to_string();
        }
    }
    c.unit_to_one = epsilon_map(ctx.eps_omega, ctx) == MultiVector(ctx.target, Gaussian(1));

    c.kernel_ok = true;
    for (std::uint32_t b = 0; b < count; ++b) {
        const MultiVector x(s, Blade(b));
        if (!epsilon_map(x - ctx.eps_omega * x, ctx).is_zero()) c.kernel_ok = false;
    }

    const std::uint32_t target_count = 1u << ctx.target.n();
    std::vector<std::vector<Gaussian>> rows(count, std::vector<Gaussian>(target_count));
    for (std::uint32_t b = 0; b < count; ++b)
        for (const auto& [blade, coeff] : image[b].terms()) rows[b][blade.bits()] = coeff;
    const std::size_t rank = rank_of(std::move(rows));
    c.surjective = rank == target_count;
    c.kernel_dimension_ok = count - rank == count / 2;
    return c;
}

int TransferReport::disagreements() const {
    return static_cast<int>(std::count_if(entries.begin(), entries.end(), [](const TransferEntry& e) { return !e.agrees(); }));
}

std::vector<AutoMask> TransferReport::printed_set() const {
    std::vector<AutoMask> out;
    for (const TransferEntry& e : entries)
        if (e.printed) out.push_back(e.map);
    return out;
}

std::vector<AutoMask> TransferReport::fixed_set() const {
    std::vector<AutoMask> out;
    for (const TransferEntry& e : entries)
        if (e.fixed) out.push_back(e.map);
    return out;
}

namespace {

struct PrintedRule {
    std::vector<AutoMask> maps;
    std::string clause;
};

PrintedRule printed_rule(const EpsilonContext& ctx) {
    const Signature& s = ctx.source;
    const int t = s.type();
    const bool type15 = t == 1 || t == 5;
    if (s.complex()) {
        const bool n1 = s.n() % 4 == 1;
        const std::string head = "n+1 = " + std::string(n1 ? "1" : "3") + " (mod 4), marked type " + std::to_string(t);
        if (n1 && type15) return {{kTilde, kBar}, head};
        if (n1) return {{kTilde, kBar | kStar, kBar | kTilde | kStar}, head};
        if (!type15) return {{kTilde | kStar, kBar, kBar | kTilde | kStar}, head};
        return {{kTilde | kStar, kBar | kStar, kBar | kTilde}, head};
    }
    if (!type15) throw QuotientError("no printed transfer rule for real type " + std::to_string(t));
    if (s.q % 2 == 0) return {{kTilde, kBar, kBar | kTilde}, "p-q = " + std::to_string(t) + " (mod 8), q even"};
    return {{kTilde, kBar | kStar, kBar | kTilde | kStar}, "p-q = " + std::to_string(t) + " (mod 8), q odd"};
}

}  // namespace

TransferReport transfer_report(const EpsilonContext& ctx) {
    const PrintedRule rule = printed_rule(ctx);
    TransferReport r;
    r.subject = ctx.source.to_string() + " -> " + ctx.target.to_string();
    for (AutoMask m = 1; m <= 7; ++m) {
        TransferEntry& e = r.entries[m - 1];
        e.map = m;
        e.printed = std::find(rule.maps.begin(), rule.maps.end(), m) != rule.maps.end();
        e.fixed = apply_auto(m, ctx.eps_omega) == ctx.eps_omega;
        e.reason = m == kStar ? "involution reverses the volume element" : rule.clause;
    }
    return r;
}

QuotientClass quotient_class(const EpsilonContext& ctx) {
    const Signature& s = ctx.source;
    const int t = s.type();
    QuotientClass c;
    c.ring = ring_name(division_ring(Signature(s.p, s.q)).ring);
    if (s.complex()) {
        if (s.n() % 4 == 1) {
            if (t == 1) c = {"a1", "{T, C~I}", c.ring};
            else if (t == 5) c = {"a2", "{T, C}", c.ring};
            else c = {"b", "{T, CP, CPT}", c.ring};
        } else {
            if (t == 3 || t == 7) c = {"c", "{PT, C, CPT}", c.ring};
            else if (t == 1) c = {"d1", "{PT, CP~IP, CT~IT}", c.ring};
            else c = {"d2", "{PT, CP, CT}", c.ring};
        }
        return c;
    }
    const bool q_even = s.q % 2 == 0;
    if (t == 1) return {q_even ? "e1" : "e2", q_even ? "{T, C~I, CT~IT}" : "{T, CP~IP, CPT~IPT}", c.ring};
    if (t == 5) return {q_even ? "f1" : "f2", q_even ? "{T, C~C', CT~C'T}" : "{T, CP~C'P, CPT~C'PT}", c.ring};
    throw QuotientError("real type " + std::to_string(t) + " is outside the quotient classes");
}

namespace {

std::string listed_label(const EpsilonContext& ctx) {
    const Signature& s = ctx.source;
    const int t = s.type();
    if (s.complex()) {
        if (s.n() % 4 == 1) return t == 1 ? "pin^b" : t == 5 ? "pin^{b,d}" : "pin^{b,e,g}";
        return (t == 3 || t == 7) ? "pin^{c,d,g}" : t == 1 ? "pin^{a,b,c}" : "pin^{c,e,f}";
    }
    const bool q_even = s.q % 2 == 0;
    if (t == 1) return q_even ? "pin^b" : "pin^{a,b,c}";
    return q_even ? "pin^{b,d,f}" : "pin^{b,e,g}";
}

std::string label_from(const std::vector<AutoMask>& maps) {
    std::string letters;
    for (AutoMask m : maps) {
        if (m == 0) continue;
        if (!letters.empty()) letters += ",";
        letters += auto_letter(m);
    }
    const bool single = letters.size() == 1;
    return "pin^" + (single ? letters : "{" + letters + "}");
}

}  // namespace

QuotientGroup quotient_group(const EpsilonContext& ctx) {
    QuotientGroup g;
    g.listed_label = listed_label(ctx);
    // Over the double real ring the pseudoautomorphism acts as the identity.
    const bool reduce = ctx.source.type() == 1;
    std::set<AutoMask> kept{0};
    for (AutoMask m : transfer_report(ctx).printed_set()) kept.insert(reduce ? static_cast<AutoMask>(m & ~kBar) : m);
    g.elements.assign(kept.begin(), kept.end());
    g.derived_label = label_from(g.elements);
    g.is_group = true;
    for (AutoMask x : g.elements) {
        std::vector<std::string> row;
        for (AutoMask y : g.elements) {
            const AutoMask z = x ^ y;
            const bool inside = kept.count(z) > 0;
            if (!inside) g.is_group = false;
            row.push_back(inside ? auto_symbol(z) : "(" + auto_symbol(z) + ")");
        }
        g.cayley.push_back(std::move(row));
    }
    if (!g.is_group) {
        std::string set;
        for (AutoMask m : g.elements) set += (set.empty() ? "" : ",") + auto_symbol(m);
        g.note = "{" + set + "} is not closed under composition, so it is not a group";
    } else if (g.elements.size() == 2) {
        g.cover = "Z2xZ2";
    } else {
        g.cover = "C^" + g.derived_label.substr(4);
    }
    return g;
}

}  // namespace cliffork
