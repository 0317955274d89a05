#include <algorithm>
#include <random>

#include "cliffork/quotient.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cliffork;

namespace {

MultiVector one(const Signature& s) { return {s, Gaussian(1)}; }

bool contains(const std::vector<AutoMask>& v, AutoMask m) { return std::find(v.begin(), v.end(), m) != v.end(); }

std::vector<EpsilonContext> all_odd_contexts(int max_n) {
    std::vector<EpsilonContext> out;
    for (int n = 1; n <= max_n; n += 2)
        for (int p = 0; p <= n; ++p)
            for (Field f : {Field::Real, Field::Complex})
                for (const EpsilonContext& c : contexts_for(Signature(p, n - p, f))) out.push_back(c);
    return out;
}

}  // namespace

TEST_CASE("automorphism masks compose by xor") {
    CHECK(auto_symbol(kStar) == "P");
    CHECK(auto_symbol(kTilde) == "T");
    CHECK(auto_symbol(kBar) == "C");
    CHECK(auto_symbol(kStar | kTilde | kBar) == "CPT");
    CHECK(auto_letter(kStar) == 'a');
    CHECK(auto_letter(kStar | kTilde | kBar) == 'g');
    std::mt19937 rng(3);
    const Signature s(2, 1, Field::Complex);
    for (int t = 0; t < 30; ++t) {
        const MultiVector x = cliffork::testing::random_mv(s, rng);
        for (AutoMask a = 1; a < 8; ++a)
            for (AutoMask b = 1; b < 8; ++b) CHECK(apply_auto(a, apply_auto(b, x)) == apply_auto(a ^ b, x));
    }
}

TEST_CASE("central idempotents of Cl(1,0)") {
    const EpsilonContext ctx = make_context(Signature(1, 0), Target::EvenPart);
    const Idempotents id = central_idempotents(ctx);
    const Signature s(1, 0);
    const MultiVector e1 = MultiVector::generator(s, 1);
    CHECK(id.plus == (one(s) + e1) * Gaussian(Rational(1, 2)));
    CHECK(id.minus == (one(s) - e1) * Gaussian(Rational(1, 2)));
    CHECK((id.plus * id.minus).is_zero());
    CHECK(id.plus + id.minus == one(s));
}

TEST_CASE("C3 uses epsilon = i") {
    const Signature c3(3, 0, Field::Complex);
    const EpsilonContext ctx = make_context(c3);
    CHECK(ctx.epsilon == Gaussian::i());
    const Idempotents id = central_idempotents(ctx);
    const MultiVector iw = MultiVector::volume(c3) * Gaussian::i();
    CHECK(id.plus == (one(c3) + iw) * Gaussian(Rational(1, 2)));
}

TEST_CASE("idempotent identities for every odd context up to n = 7") {
    for (const EpsilonContext& ctx : all_odd_contexts(7)) CHECK_MESSAGE(check_idempotents(ctx).ok(), ctx.source.to_string());
}

TEST_CASE("epsilon map sends eps omega to one and kills the complement") {
    std::mt19937 rng(8);
    for (const EpsilonContext& ctx : all_odd_contexts(5)) {
        CHECK(epsilon_map(ctx.eps_omega, ctx) == one(ctx.target));
        for (int t = 0; t < 10; ++t) {
            const MultiVector x = cliffork::testing::random_mv(ctx.source, rng);
            CHECK(epsilon_map(x - ctx.eps_omega * x, ctx).is_zero());
            const EpsilonSplit sp = epsilon_split(x, ctx);
            CHECK(sp.a1 + ctx.eps_omega * sp.a2 == x);
        }
    }
}

TEST_CASE("epsilon map is a surjective homomorphism up to n = 5") {
    for (const EpsilonContext& ctx : all_odd_contexts(5)) {
        const HomomorphismCheck h = check_homomorphism(ctx);
        CHECK_MESSAGE(h.ok(), ctx.source.to_string(), " ", target_name(ctx.route), " ", h.first_failure);
        CHECK(h.pairs == (std::size_t{1} << (2 * ctx.source.n())));
    }
}

TEST_CASE("epsilon map on random products") {
    std::mt19937 rng(41);
    for (const EpsilonContext& ctx : all_odd_contexts(7)) {
        for (int t = 0; t < 5; ++t) {
            const MultiVector x = cliffork::testing::random_mv(ctx.source, rng, 3);
            const MultiVector y = cliffork::testing::random_mv(ctx.source, rng, 3);
            CHECK(epsilon_map(x * y, ctx) == epsilon_map(x, ctx) * epsilon_map(y, ctx));
        }
    }
}

TEST_CASE("even-dimensional input is rejected") { CHECK_THROWS_AS(make_context(Signature(2, 0)), QuotientError); }

TEST_CASE("the involution never transfers") {
    for (const EpsilonContext& ctx : all_odd_contexts(7)) {
        const TransferReport r = transfer_report(ctx);
        CHECK_FALSE(r.entries[kStar - 1].fixed);
        CHECK_FALSE(r.entries[kStar - 1].printed);
    }
}

TEST_CASE("fixed-point column matches a direct evaluation") {
    for (const EpsilonContext& ctx : all_odd_contexts(7)) {
        const TransferReport r = transfer_report(ctx);
        for (const TransferEntry& e : r.entries) CHECK(e.fixed == (apply_auto(e.map, ctx.eps_omega) == ctx.eps_omega));
    }
}

TEST_CASE("reversion transfers from C5") {
    const TransferReport r = transfer_report(make_context(Signature(5, 0, Field::Complex)));
    CHECK(r.entries[kTilde - 1].printed);
    CHECK(r.entries[kTilde - 1].fixed);
}

TEST_CASE("pseudoautomorphism transfers for types 1 and 5 with q even") {
    for (const Signature& s : {Signature(1, 0), Signature(3, 2), Signature(5, 0), Signature(1, 4)}) {
        const TransferReport r = transfer_report(contexts_for(s).front());
        CHECK(contains(r.printed_set(), kBar));
        CHECK(contains(r.fixed_set(), kBar));
    }
}

TEST_CASE("quotient classes") {
    CHECK(quotient_class(make_context(Signature(3, 2, Field::Complex))).label == "a1");
    CHECK(quotient_class(make_context(Signature(3, 2, Field::Complex))).symbols == "{T, C~I}");
    CHECK(quotient_class(make_context(Signature(5, 0), Target::EvenPart)).label == "f1");
    CHECK(quotient_class(make_context(Signature(2, 1))).label == "e2");
}

TEST_CASE("quotient group labels") {
    const QuotientGroup b = quotient_group(make_context(Signature(1, 0), Target::EvenPart));
    CHECK(b.listed_label == "pin^b");
    CHECK(b.cover == "Z2xZ2");
    CHECK(b.labels_agree());
    const QuotientGroup beg = quotient_group(make_context(Signature(2, 5)));
    CHECK(beg.listed_label == "pin^{b,e,g}");
    CHECK(beg.is_group);
}

TEST_CASE("the three-element set of the quaternionic complex case is not a group") {
    const QuotientGroup g = quotient_group(make_context(Signature(1, 4, Field::Complex)));
    CHECK(g.listed_label == "pin^{b,d}");
    CHECK(g.elements.size() == 3);
    CHECK_FALSE(g.is_group);
}

TEST_CASE("labels derived from the printed predicates agree with the listed ones") {
    for (const EpsilonContext& ctx : all_odd_contexts(7)) CHECK_MESSAGE(quotient_group(ctx).labels_agree(), ctx.source.to_string());
}
