#pragma once

#include <span>
#include <vector>

#include "armafisher/linalg.h"
#include "armafisher/poly.h"

namespace armafisher {

// Bezout matrix B(a,b) of two degree-n polynomials, defined by
//
//   a(z) b(w) - a(w) b(z) = (z - w) u_n(z)^T B(a,b) u_n(w).
//
// Matching coefficients of z^i w^j gives the recursion
// B_{i,j} = d_{i+1,j} + B_{i+1,j-1} with d_{ij} = a_i b_j - a_j b_i, filled
// from the last row upwards. B is symmetric and B(a,b) = -B(b,a).

/// Throws DegreeMismatch, or BadDimension when n == 0.
Matrix BezoutMatrix(const Polynomial& a, const Polynomial& b);

/// Complex-coefficient variant; degree 0 gives a 0x0 matrix.
CMatrix BezoutMatrix(std::span<const Complex> a, std::span<const Complex> b);

struct BezoutDecomposition {
  /// B(a_{-1}, b_{-1}), of order n-1.
  CMatrix inner;
  /// U_alpha (inner ⊕ 0) U_beta^T + (beta - alpha) b_beta a_alpha^T.
  CMatrix reconstruction;
  /// Coefficients of a_{-1} padded to length n, so a_alpha^T u_n(z) = a_{-1}(z).
  CVector a_alpha;
  CVector b_beta;
};

/// One peeling step with factors (1 - alpha z) of a and (1 - beta z) of b.
/// Throws NotAFactor when a deflation residual exceeds `tol`.
BezoutDecomposition BezoutDecomposeOnce(const Polynomial& a,
                                        const Polynomial& b, Complex alpha,
                                        Complex beta, double tol = 1e-8);

/// Sum of n rank-one terms built from the full factor parameter lists
/// a(z) = prod (1 - alphas[k] z), b(z) = prod (1 - betas[k] z).
/// Throws BadFactorization if the lists do not reproduce a and b.
CMatrix BezoutExpansion(const Polynomial& a, const Polynomial& b,
                        std::span<const Complex> alphas,
                        std::span<const Complex> betas, double tol = 1e-8);

struct CommonZeroFactor {
  /// B(a_{-1}, b_{-1}) with B(a,b) = U_phi (inner ⊕ 0) U_phi^T.
  CMatrix inner;
  CoeffVector a_deflated;
  CoeffVector b_deflated;
};

/// Throws NotAFactor unless phi is a zero of both â and b̂.
CommonZeroFactor BezoutCommonZeroFactor(std::span<const Complex> a,
                                        std::span<const Complex> b,
                                        Complex phi, double tol = 1e-8);
CommonZeroFactor BezoutCommonZeroFactor(const Polynomial& a,
                                        const Polynomial& b, Complex phi,
                                        double tol = 1e-8);

struct KernelBasis {
  /// v_k^j = (T_{gamma_k}^j J^{j-1})^T l, grouped by common root.
  std::vector<CVector> vectors;
  std::vector<Root> common_roots;
  /// max ||B v|| / (||B|| ||v||) over the basis (0 when B vanishes).
  double max_residual = 0.0;
};

/// Basis of ker B(a,b) from the common zeros of â and b̂ (matched within
/// `tol`).
KernelBasis BezoutKernelBasis(const Polynomial& a, const Polynomial& b,
                              double tol = 1e-8);

}  // namespace armafisher
