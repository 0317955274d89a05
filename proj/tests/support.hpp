#pragma once

#include <random>

#include "cliffork/algebra.hpp"

namespace cliffork::testing {

// Small integer coefficients on a random subset of blades; imaginary parts
// only for complex signatures.
inline MultiVector random_mv(const Signature& sig, std::mt19937& rng, int terms = 5) {
    std::uniform_int_distribution<std::uint32_t> blade(0, sig.full_mask());
    std::uniform_int_distribution<int> coeff(-3, 3);
    MultiVector x(sig);
    for (int t = 0; t < terms; ++t) {
        const int im = sig.complex() ? coeff(rng) : 0;
        x.add_term(Blade(blade(rng)), Gaussian(Rational(coeff(rng)), Rational(im)));
    }
    return x;
}

inline std::vector<Signature> real_signatures(int max_n) {
    std::vector<Signature> out;
    for (int n = 0; n <= max_n; ++n)
        for (int p = 0; p <= n; ++p) out.emplace_back(p, n - p);
    return out;
}

}  // namespace cliffork::testing
