#include "cliffork/gaussian.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cliffork {

Gaussian& Gaussian::operator*=(const Gaussian& o) {
    if (im.is_zero() && o.im.is_zero()) {
        re *= o.re;
        return *this;
    }
    const Rational r = re * o.re - im * o.im;
    const Rational i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    const Rational norm = o.re * o.re + o.im * o.im;
    if (norm.is_zero()) throw std::domain_error("gaussian division by zero");
    *this *= o.conj();
    re /= norm;
    im /= norm;
    return *this;
}

std::string Gaussian::to_string() const {
    auto imag_part = [](const Rational& v, bool leading) {
        std::string s;
        if (v == Rational(1)) {
            s = leading ? "i" : "+i";
        } else if (v == Rational(-1)) {
            s = "-i";
        } else {
            s = v.to_string() + "i";
            if (!leading && v.sign() > 0) s = "+" + s;
        }
        return s;
    };
    if (im.is_zero()) return re.to_string();
    if (re.is_zero()) return imag_part(im, true);
    return re.to_string() + imag_part(im, false);
}

Gaussian Gaussian::parse(const std::string& raw) {
    std::string text;
    std::copy_if(raw.begin(), raw.end(), std::back_inserter(text), [](unsigned char c) { return !std::isspace(c); });
    if (text.empty()) throw std::invalid_argument("empty gaussian literal");
    if (text.back() != 'i') return Gaussian(Rational::parse(text));

    // Find the sign that separates the real and imaginary parts, skipping a
    // leading sign and any sign right after a '/' (which cannot occur in valid input).
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size() - 1; k > 0; --k) {
        if (text[k] == '+' || text[k] == '-') {
            split = k;
            break;
        }
    }
    auto parse_imag = [](std::string body) {
        body.pop_back();  // drop 'i'
        if (body.empty() || body == "+") return Rational(1);
        if (body == "-") return Rational(-1);
        return Rational::parse(body);
    };
    if (split == std::string::npos) return Gaussian(Rational(0), parse_imag(text));
    return Gaussian(Rational::parse(text.substr(0, split)), parse_imag(text.substr(split)));
}

std::ostream& operator<<(std::ostream& os, const Gaussian& g) { return os << g.to_string(); }

}  // namespace cliffork
