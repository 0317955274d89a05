#pragma once

#include <ostream>
#include <string>

#include "cliffork/rational.hpp"

namespace cliffork {

// Exact Gaussian rational re + im*i.
struct Gaussian {
    Rational re;
    Rational im;

    constexpr Gaussian() = default;
    constexpr Gaussian(Rational r) : re(r) {}  // NOLINT(google-explicit-constructor)
    constexpr Gaussian(std::int64_t r) : re(r) {}  // NOLINT(google-explicit-constructor)
    Gaussian(Rational r, Rational i) : re(r), im(i) {}

    static Gaussian i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }
    bool is_imaginary() const { return re.is_zero(); }

    Gaussian conj() const { return {re, -im}; }
    Gaussian operator-() const { return {-re, -im}; }

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

    // Canonical text: "0", "3", "-1/2", "i", "-i", "2i", "1+i", "1/2-3/4i".
    std::string to_string() const;
    // Inverse of to_string; also accepts "a+bi" forms with explicit "1i".
    static Gaussian parse(const std::string& text);
};

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

}  // namespace cliffork
