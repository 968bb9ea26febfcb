#include "armafisher/fisher.h"

#include <cmath>
#include <limits>
#include <string>

#include "armafisher/error.h"
#include "armafisher/statespace.h"
#include "armafisher/structmat.h"

namespace armafisher {

ArmaModel MakeArmaModel(Polynomial ar, Polynomial ma, double sigma2,
                        double margin) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2)) {
    throw Error(ErrorCode::kBadModel, "sigma2 must be a positive number");
  }
  if (ar.degree() + ma.degree() < 1) {
    throw Error(ErrorCode::kBadModel, "model needs p + q >= 1");
  }
  const StabilityReport ar_check = StabilityCheck(ar, margin);
  if (!ar_check.stable) {
    throw Error(ErrorCode::kNotStable,
                "AR polynomial is not causal: reciprocal zero of modulus " +
                    std::to_string(ar_check.spectral_radius));
  }
  const StabilityReport ma_check = StabilityCheck(ma, margin);
  if (!ma_check.stable) {
    throw Error(ErrorCode::kNotStable,
                "MA polynomial is not invertible: reciprocal zero of modulus " +
                    std::to_string(ma_check.spectral_radius));
  }
  return ArmaModel{std::move(ar), std::move(ma), sigma2};
}

Matrix FisherInformation(const ArmaModel& model, const SteinOptions& options) {
  const ScoreSystem sys = BuildScoreSystem(model.ar, model.ma);
  return SolveStein(sys.F, sys.b_in * sys.b_in.transpose(), options).X;
}

FisherFactorization FactorFisher(const ArmaModel& model,
                                 const SteinOptions& options) {
  const ScoreSystem sys = BuildScoreSystem(model.ar, model.ma);
  const Eigen::Index m = sys.G.rows();
  const Vector e = Vector::Unit(m, 0);

  FisherFactorization out;
  out.R = sys.C;
  out.P = SolveStein(sys.G, e * e.transpose(), options).X;
  const Matrix fisher =
      SolveStein(sys.F, sys.b_in * sys.b_in.transpose(), options).X;
  out.residual = RelativeResidual(out.R * out.P * out.R.transpose(), fisher);
  return out;
}

const char* VerdictName(Verdict v) {
  return v == Verdict::kSingular ? "singular" : "identifiable";
}

IdentReport IdentifiabilityReport(const ArmaModel& model, double tol) {
  const int m = model.p() + model.q();
  IdentReport report;
  report.fisher = FisherInformation(model);
  report.singular_values = SingularValues(report.fisher);
  const Vector& s = report.singular_values;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > tol * s(0)) ++report.rank;
  }
  report.singular_value_gap = std::numeric_limits<double>::infinity();
  if (report.rank > 0 && report.rank < m) {
    report.singular_value_gap = s(report.rank - 1) / s(report.rank);
  }

  const Matrix sylvester = SylvesterMatrix(model.ma, model.ar);
  report.resultant_det = DeterminantLU(sylvester);
  report.resultant_rank = NumericalRank(sylvester, tol);
  report.common_roots = CommonRoots(model.ar, model.ma, tol);

  std::vector<bool> singular_votes = {
      report.rank < m,
      report.resultant_rank < m,
      !report.common_roots.empty(),
  };
  if (model.p() == model.q()) {
    const Matrix bez = BezoutMatrix(model.ma, model.ar);
    report.bezout_rank = NumericalRank(bez, tol);
    singular_votes.push_back(*report.bezout_rank < model.p());
    if (!report.common_roots.empty()) {
      report.kernel_basis = BezoutKernelBasis(model.ma, model.ar, tol);
    }
  }

  bool any = false;
  bool all = true;
  for (bool v : singular_votes) {
    any = any || v;
    all = all && v;
  }
  report.verdict = any ? Verdict::kSingular : Verdict::kIdentifiable;
  report.borderline = any && !all;
  return report;
}

}  // namespace armafisher
