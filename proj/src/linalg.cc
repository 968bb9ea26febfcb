#include "armafisher/linalg.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "armafisher/error.h"

namespace armafisher {

namespace {

template <typename M>
int RankFromSvd(const M& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<M> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > rel_tol * s(0)) ++rank;
  }
  return rank;
}

}  // namespace

int NumericalRank(const Matrix& m, double rel_tol) {
  return RankFromSvd(m, rel_tol);
}

int NumericalRank(const CMatrix& m, double rel_tol) {
  return RankFromSvd(m, rel_tol);
}

Vector SingularValues(const Matrix& m) {
  if (m.size() == 0) return Vector(0);
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues();
}

double StructuralRankTolerance(const Matrix& m) {
  const double dim = static_cast<double>(std::max(m.rows(), m.cols()));
  return 1e3 * dim * std::numeric_limits<double>::epsilon();
}

double DeterminantLU(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "determinant requires a square matrix");
  }
  if (m.size() == 0) return 1.0;
  return Eigen::PartialPivLU<Matrix>(m).determinant();
}

bool IsNumericallySingular(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return false;
  double hadamard = 1.0;
  for (Eigen::Index j = 0; j < m.cols(); ++j) hadamard *= m.col(j).norm();
  if (hadamard == 0.0) return true;
  return std::abs(DeterminantLU(m)) <= rel_tol * hadamard;
}

double RelativeResidual(const Matrix& a, const Matrix& b, double floor) {
  return (a - b).norm() / std::max(b.norm(), floor);
}

double RelativeResidual(const CMatrix& a, const CMatrix& b, double floor) {
  return (a - b).norm() / std::max(b.norm(), floor);
}

double SpectralRadius(const Matrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "spectral radius requires a square matrix");
  }
  if (a.size() == 0) return 0.0;
  Eigen::EigenSolver<Matrix> es(a, /*computeEigenvectors=*/false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

bool IsPositiveDefinite(const Matrix& m) {
  if (m.size() == 0) return true;
  Eigen::LLT<Matrix> llt(m);
  return llt.info() == Eigen::Success;
}

}  // namespace armafisher
