#include <limits>
#include <random>
#include <stdexcept>

#include "cliffork/gaussian.hpp"
#include "doctest.h"

using cliffork::Gaussian;
using cliffork::Rational;

TEST_CASE("rationals are kept in lowest terms with a positive denominator") {
    const Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(-1, 4) == Rational(-2));
    CHECK((Rational(0, 5)).is_zero());
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational overflow is reported instead of wrapping") {
    const Rational big(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + Rational(1), std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("rational text round trip") {
    for (const Rational& r : {Rational(0), Rational(-7), Rational(3, 4), Rational(-5, 9)})
        CHECK(Rational::parse(r.to_string()) == r);
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("gaussian arithmetic") {
    const Gaussian i = Gaussian::i();
    CHECK(i * i == Gaussian(-1));
    CHECK((Gaussian(1) + i) * (Gaussian(1) - i) == Gaussian(2));
    CHECK(Gaussian(1) / i == -i);
    CHECK(Gaussian(Rational(1), Rational(2)).conj() == Gaussian(Rational(1), Rational(-2)));
    CHECK_THROWS(Gaussian(1) / Gaussian(0));
}

TEST_CASE("gaussian text round trip on random values") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int t = 0; t < 200; ++t) {
        const int den1 = d(rng) == 0 ? 1 : std::abs(d(rng)) + 1;
        const Gaussian g(Rational(d(rng), den1), Rational(d(rng), 3));
        CHECK(Gaussian::parse(g.to_string()) == g);
    }
    CHECK(Gaussian::parse("-i") == -Gaussian::i());
    CHECK(Gaussian::parse("1/2+i") == Gaussian(Rational(1, 2), Rational(1)));
}

TEST_CASE("gaussian field laws on random values") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> d(-6, 6);
    auto draw = [&] { return Gaussian(Rational(d(rng)), Rational(d(rng))); };
    for (int t = 0; t < 300; ++t) {
        const Gaussian a = draw(), b = draw(), c = draw();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
