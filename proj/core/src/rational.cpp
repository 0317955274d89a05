#include "cliffork/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace cliffork {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow in addition");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow in multiplication");
    return r;
}

std::int64_t checked_neg(std::int64_t a) {
    std::int64_t r;
    if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw std::overflow_error("rational overflow in negation");
    return r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = checked_neg(n);
        d = checked_neg(d);
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = g > 1 ? n / g : n;
    den_ = g > 1 ? d / g : d;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_neg(num_);
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ = checked_add(num_, o.num_);
        return *this;
    }
    const std::int64_t g = std::gcd(den_, o.den_);
    const std::int64_t lhs = checked_mul(num_, o.den_ / g);
    const std::int64_t rhs = checked_mul(o.num_, den_ / g);
    *this = Rational(checked_add(lhs, rhs), checked_mul(den_, o.den_ / g));
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (den_ == 1 && o.den_ == 1) {
        num_ = checked_mul(num_, o.num_);
        return *this;
    }
    const std::int64_t g1 = std::gcd(num_, o.den_);
    const std::int64_t g2 = std::gcd(o.num_, den_);
    // Denominators are positive, so both gcds are at least 1.
    const std::int64_t n = checked_mul(num_ / g1, o.num_ / g2);
    const std::int64_t d = checked_mul(den_ / g2, o.den_ / g1);
    *this = Rational(n, d);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    Rational inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
        inv.num_ = checked_neg(inv.num_);
        inv.den_ = checked_neg(inv.den_);
    }
    return *this *= inv;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const std::int64_t lhs = checked_mul(a.num_, b.den_);
    const std::int64_t rhs = checked_mul(b.num_, a.den_);
    return lhs <=> rhs;
}

std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const std::int64_t n = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return Rational(n);
        }
        const std::string a = text.substr(0, slash);
        const std::string b = text.substr(slash + 1);
        const std::int64_t n = std::stoll(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        const std::int64_t d = std::stoll(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return Rational(n, d);
    } catch (const std::logic_error&) {
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace cliffork
