#pragma once

#include <optional>

#include "armafisher/linalg.h"
#include "armafisher/poly.h"

namespace armafisher {

enum class SteinMethod { kDoubling, kKronecker };

/// Solution of the Stein (discrete Lyapunov) equation X = A X A^T + Q.
struct SteinSolution {
  Matrix X;
  /// ||X - A X A^T - Q||_F / ||Q||_F (absolute when Q == 0).
  double residual = 0.0;
  SteinMethod method = SteinMethod::kDoubling;
  int iterations = 0;
};

struct SteinOptions {
  /// Stop once ||A_k||_F^2 ||X_k||_F <= tol ||X_k||_F.
  double tol = 1e-13;
  int max_doublings = 100;
  double stability_margin = 1e-8;
};

/// Doubling iteration X_{k+1} = X_k + A_k X_k A_k^T, A_{k+1} = A_k^2, which
/// after k steps sums the first 2^k terms of sum_j A^j Q (A^T)^j.
/// Throws NotStable when the spectral radius of A is >= 1 - margin, and
/// NoConvergence when max_doublings is exhausted.
SteinSolution SolveStein(const Matrix& a, const Matrix& q,
                         const SteinOptions& options = {});

/// Direct solve of (I - A ⊗ A) vec X = vec Q. Limited to m <= 12.
/// Throws SingularSystem.
SteinSolution SolveSteinKronecker(const Matrix& a, const Matrix& q);

/// The four Stein solutions attached to a model theta = (a, c):
///   I = F I F^T + b_in b_in^T     (general p, q)
///   P = G P G^T + e e^T           (general p, q)
///   H = G_M H G_M^T + e_P e_P^T   (p == q only)
///   Q = F_N Q F_N^T + e_P e_P^T   (p == q only)
/// related by H = T Q T with T = I ⊕ B(c,a), I = M^{-1} H M^{-T},
/// P = N^{-1} Q N^{-T}, and I = R(c,-a) P R(c,-a)^T.
struct SteinQuartet {
  Matrix I;
  Matrix P;
  std::optional<Matrix> H;
  std::optional<Matrix> Q;

  // Relative Frobenius residuals of the transformation identities; only
  // populated in the equal-degree case.
  std::optional<double> hq_residual;
  std::optional<double> ih_residual;
  std::optional<double> pq_residual;
};

SteinQuartet BuildSteinQuartet(const Polynomial& a, const Polynomial& c,
                               const SteinOptions& options = {});

}  // namespace armafisher
