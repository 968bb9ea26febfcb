#pragma once

#include "armafisher/linalg.h"
#include "armafisher/poly.h"

namespace armafisher {

/// State-space data for the score process of an ARMA(p,q) model.
///
///   F    = diag(J - e a^T, J - e c^T)   (block companion, order p+q)
///   G    = J - e g^T                     (companion of ĝ = â ĉ)
///   b_in = (e_p; -e_q)
///   C    = R(c,-a)
///
/// xi_{t+1} = F xi_t + b_in eps_t realizes the score derivatives directly;
/// Z_{t+1} = G Z_t + e eps_t, xi_t = C Z_t is the second realization. The
/// two are linked by C G = F C.
struct ScoreSystem {
  Matrix F;
  Matrix G;
  Vector b_in;
  Matrix C;
  int p = 0;
  int q = 0;
};

/// Throws BadDimension when p + q == 0.
ScoreSystem BuildScoreSystem(const Polynomial& a, const Polynomial& c);

/// tau(z) = ( u*_p(z) / â(z) ; -u*_q(z) / ĉ(z) ). Throws PoleEvaluation when
/// |â(z)| or |ĉ(z)| is below 1e-12.
CVector TransferTau(const Polynomial& a, const Polynomial& c, Complex z);

/// [b, A b, ..., A^{m-1} b].
Matrix ControllabilityMatrix(const Matrix& a, const Vector& b);

/// Stacked C A^k, k = 0..m-1.
Matrix ObservabilityMatrix(const Matrix& c, const Matrix& a);

/// Row vector (u, v) built from the Horner sequences of a and c at a common
/// zero lambda of â and ĉ; it annihilates both F - lambda I and b_in.
/// Throws NotCommonZero.
CVector UncontrollableDirection(const Polynomial& a, const Polynomial& c,
                                Complex lambda, double tol = 1e-8);

/// Block forms, for deg a == deg c == n:
///
///   G_M = [P(J - e a^T)P, 0; (c - a) e^T, PJP - c e^T] = M(c,a) F M(c,a)^{-1}
///   F_N = [P(J - e a^T)P, 0; e e^T,       J - e c^T  ] = N(c) G N(c)^{-1}
///
/// and G_M (I ⊕ B(c,a)) = (I ⊕ B(c,a)) F_N.
struct TransformedPair {
  Matrix G_M;
  Matrix F_N;
};

/// Built from the explicit blocks, no inversion. Throws DegreeMismatch.
TransformedPair BuildTransformedPair(const Polynomial& a, const Polynomial& c);

/// e_P = (P e; 0) in R^{2n}; equals M(c,a) b_in and N(c) e.
Vector TransformedDrivingVector(int n);

struct StabilityReport {
  bool stable = true;
  /// Largest modulus among the zeros of p̂ (0 for degree 0).
  double spectral_radius = 0.0;
};

/// Stable iff every zero of p̂ has modulus below 1 - margin.
StabilityReport StabilityCheck(const Polynomial& p, double margin = 1e-8);

}  // namespace armafisher
