#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffork/algebra.hpp"
#include "cliffork/matrix.hpp"

namespace cliffork {

enum class Symmetry { Symmetric, Skew, Mixed };

struct MatrixClass {
    bool real = true;
    Symmetry symmetry = Symmetry::Symmetric;
    // "real/symmetric", "complex/skewsymmetric", "real/mixed"
    std::string to_string() const;
};

MatrixClass classify_matrix(const Matrix& m);

// Images E_i of the generators in a faithful matrix representation.
struct SpinBasis {
    Signature sig;
    std::vector<Matrix> mats;
    std::vector<bool> real_mask;
    std::vector<bool> sym_mask;
    // a = #complex, b = #real, l/m = complex symmetric/skew, v/u = real symmetric/skew.
    int a = 0, b = 0, l = 0, m = 0, v = 0, u = 0;
    // Human-readable description of how the basis was produced.
    std::string provenance;

    std::size_t dim() const { return mats.empty() ? 1 : mats.front().dim(); }
    int n() const { return static_cast<int>(mats.size()); }
};

class SpinBasisError : public std::runtime_error {
public:
    SpinBasisError(const std::string& what, int i, int j) : std::runtime_error(what), first(i), second(j) {}
    // 1-based indices of the offending units; second is 0 for single-unit failures.
    int first;
    int second;
};

// Validates squares and anticommutation and fills masks and counts. When
// `expected` is given its (p,q) must match; otherwise p is the number of leading
// units squaring to +I. Throws SpinBasisError naming the offending pair.
SpinBasis load_spinbasis(std::vector<Matrix> mats, std::optional<Signature> expected = std::nullopt,
                         std::string provenance = "loaded");

// Canonical spinbasis for simple types (p - q = 0, 2, 3, 4, 6, 7 mod 8).
// Throws std::invalid_argument for p - q = 1, 5 (semi-simple, see quotient module).
SpinBasis build_spinbasis(const Signature& sig);

// Every variant the construction exposes for ring R and ring H signatures:
// real base choice, i-flip subset, generator order within the +/- blocks and sign patterns.
std::vector<SpinBasis> spinbasis_variants(const Signature& sig);

// Real spinbasis for p - q = 0, 2 mod 8.
SpinBasis build_real_spinbasis(int p, int q);

// Product of the images of the generators in blade b.
Matrix blade_image(Blade b, const SpinBasis& basis);
// Algebra homomorphism Cl -> matrices. Over a complex signature the blades use
// the all-(+1) generators, whose images are E_i for i <= p and -i E_i otherwise.
Matrix evaluate(const MultiVector& x, const SpinBasis& basis);

// Paulis used by the doubling construction.
Matrix pauli_x();
Matrix pauli_z();
Matrix pauli_j();  // [[0,1],[-1,0]], J^2 = -I

}  // namespace cliffork
