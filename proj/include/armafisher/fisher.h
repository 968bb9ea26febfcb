#pragma once

#include <optional>
#include <vector>

#include "armafisher/bezout.h"
#include "armafisher/linalg.h"
#include "armafisher/poly.h"
#include "armafisher/stein.h"

namespace armafisher {

/// a(L) y = c(L) eps with Var(eps) = sigma2. Parameter order is
/// theta = (a_1, ..., a_p, c_1, ..., c_q).
struct ArmaModel {
  Polynomial ar;
  Polynomial ma;
  double sigma2 = 1.0;

  int p() const { return ar.degree(); }
  int q() const { return ma.degree(); }
};

/// Validates causality and invertibility (zeros of â, ĉ strictly inside the
/// unit circle, with `margin`) and sigma2 > 0. Throws NotStable or BadModel.
ArmaModel MakeArmaModel(Polynomial ar, Polynomial ma, double sigma2 = 1.0,
                        double margin = 1e-8);

/// Asymptotic Fisher information I(theta): the solution of
/// I = F I F^T + b_in b_in^T. It does not depend on sigma2.
Matrix FisherInformation(const ArmaModel& model,
                         const SteinOptions& options = {});

struct FisherFactorization {
  /// R(c,-a).
  Matrix R;
  /// Solution of P = G P G^T + e e^T; strictly positive definite.
  Matrix P;
  /// ||I - R P R^T||_F / ||I||_F.
  double residual = 0.0;
};

FisherFactorization FactorFisher(const ArmaModel& model,
                                 const SteinOptions& options = {});

enum class Verdict { kIdentifiable, kSingular };

const char* VerdictName(Verdict v);

struct IdentReport {
  Matrix fisher;
  Vector singular_values;
  int rank = 0;
  /// sigma_rank / sigma_{rank+1} (infinity at full rank or rank 0).
  double singular_value_gap = 0.0;
  double resultant_det = 0.0;
  int resultant_rank = 0;
  /// Rank of B(c,a); only for p == q >= 1.
  std::optional<int> bezout_rank;
  std::vector<Root> common_roots;
  /// Kernel of B(c,a); only for p == q >= 1 with common roots.
  std::optional<KernelBasis> kernel_basis;
  Verdict verdict = Verdict::kIdentifiable;
  /// The detectors disagreed; verdict forced to singular.
  bool borderline = false;
};

/// Runs every singularity detector: Fisher rank (singular values below
/// tol * sigma_max count as zero), Sylvester rank, common roots (distance
/// tol), and Bezout rank when p == q.
IdentReport IdentifiabilityReport(const ArmaModel& model, double tol = 1e-8);

}  // namespace armafisher
