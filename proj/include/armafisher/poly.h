#pragma once

#include <span>
#include <vector>

#include "armafisher/linalg.h"

namespace armafisher {

/// Real polynomial p(z) = 1 + p_1 z + ... + p_n z^n stored in ascending
/// powers. The constant term is always exactly one.
///
/// The reciprocal p̂(z) = z^n p(1/z) is monic; its zeros are the reciprocals
/// of the zeros of p. A factor (1 - alpha z) of p corresponds to the zero
/// alpha of p̂, and alpha is called the factor parameter.
class Polynomial {
 public:
  /// The constant polynomial 1.
  Polynomial() : coeffs_{1.0} {}

  /// Throws EmptyCoefficients or ConstantTermNotOne.
  static Polynomial FromCoefficients(std::vector<double> coeffs);

  /// Builds 1 + tail[0] z + tail[1] z^2 + ... (the constant term is implied).
  static Polynomial FromTail(std::span<const double> tail);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  std::span<const double> coefficients() const { return coeffs_; }

  /// Coefficient of z^k; zero outside [0, degree].
  double operator[](int k) const {
    return (k < 0 || k > degree()) ? 0.0 : coeffs_[k];
  }

  /// (p_1, ..., p_n) as a vector.
  Vector TailVector() const;

  Complex Evaluate(Complex z) const;
  Complex EvaluateReciprocal(Complex z) const;

  bool operator==(const Polynomial&) const = default;

 private:
  explicit Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  std::vector<double> coeffs_;
};

Polynomial MakePolynomial(std::vector<double> coeffs);

/// Ascending coefficients of p̂, i.e. the reversed sequence.
std::vector<double> Reciprocal(const Polynomial& p);

Polynomial Product(const Polynomial& a, const Polynomial& c);

/// Horner polynomials p̂_0(λ), ..., p̂_{n-1}(λ) with p̂_0 = 1 and
/// p̂_k(λ) = λ p̂_{k-1}(λ) + p_k. Requires degree >= 1.
std::vector<Complex> HornerSequence(const Polynomial& p, Complex lambda);

struct Root {
  Complex value;
  int multiplicity = 1;
};

struct RootSet {
  std::vector<Root> roots;
  /// max |p̂(root)| over the unclustered iterates.
  double residual = 0.0;

  int TotalMultiplicity() const;
};

struct RootFinderOptions {
  double tol = 1e-12;
  int max_iter = 200;
  double cluster_radius = 1e-6;
};

/// Zeros of p̂ by Aberth-Ehrlich iteration. Degree 0 yields an empty set.
/// Throws NoConvergence.
RootSet RootsOfReciprocal(const Polynomial& p,
                          const RootFinderOptions& options = {});

/// Zeros shared by â and ĉ (within `tol`), with the multiplicity of the
/// common factor.
std::vector<Root> CommonRoots(const Polynomial& a, const Polynomial& c,
                              double tol = 1e-8,
                              const RootFinderOptions& options = {});

// Complex-coefficient helpers for factor manipulations. Coefficients are in
// ascending powers with unit constant term.
using CoeffVector = std::vector<Complex>;

CoeffVector ToComplex(const Polynomial& p);

/// prod_k (1 - params[k] z).
CoeffVector FromFactorParameters(std::span<const Complex> params);

struct Deflation {
  CoeffVector quotient;
  /// |remainder| of dividing by (1 - alpha z), relative to the coefficient
  /// magnitude.
  double residual = 0.0;
};

/// Synthetic division of p(z) by (1 - alpha z).
Deflation DeflateFactor(std::span<const Complex> coeffs, Complex alpha);

}  // namespace armafisher
