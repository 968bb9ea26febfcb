#include "armafisher/statespace.h"

#include <algorithm>
#include <cmath>

#include "armafisher/error.h"
#include "armafisher/structmat.h"

namespace armafisher {

namespace {

Matrix Companion(const Polynomial& p) {
  const int n = p.degree();
  Matrix m = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int j = 0; j < n; ++j) m(0, j) = -p[j + 1];
  return m;
}

}  // namespace

ScoreSystem BuildScoreSystem(const Polynomial& a, const Polynomial& c) {
  const int p = a.degree();
  const int q = c.degree();
  if (p + q < 1) {
    throw Error(ErrorCode::kBadDimension, "score system needs p + q >= 1");
  }
  ScoreSystem sys;
  sys.p = p;
  sys.q = q;
  sys.F = Matrix::Zero(p + q, p + q);
  if (p > 0) sys.F.topLeftCorner(p, p) = Companion(a);
  if (q > 0) sys.F.bottomRightCorner(q, q) = Companion(c);
  sys.G = Companion(Product(a, c));
  sys.b_in = Vector::Zero(p + q);
  if (p > 0) sys.b_in(0) = 1.0;
  if (q > 0) sys.b_in(p) = -1.0;
  sys.C = SylvesterMatrix(c, a);
  return sys;
}

CVector TransferTau(const Polynomial& a, const Polynomial& c, Complex z) {
  const int p = a.degree();
  const int q = c.degree();
  const Complex ahat = a.EvaluateReciprocal(z);
  const Complex chat = c.EvaluateReciprocal(z);
  if ((p > 0 && std::abs(ahat) < 1e-12) || (q > 0 && std::abs(chat) < 1e-12)) {
    throw Error(ErrorCode::kPoleEvaluation,
                "transfer function evaluated at a zero of the AR or MA "
                "reciprocal polynomial");
  }
  CVector tau(p + q);
  if (p > 0) tau.head(p) = UVector(p, z, /*starred=*/true) / ahat;
  if (q > 0) tau.tail(q) = -UVector(q, z, /*starred=*/true) / chat;
  return tau;
}

Matrix ControllabilityMatrix(const Matrix& a, const Vector& b) {
  const Eigen::Index m = a.rows();
  if (a.cols() != m || b.size() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "controllability matrix: A must be square and match b");
  }
  Matrix r(m, m);
  if (m == 0) return r;
  r.col(0) = b;
  for (Eigen::Index k = 1; k < m; ++k) r.col(k) = a * r.col(k - 1);
  return r;
}

Matrix ObservabilityMatrix(const Matrix& c, const Matrix& a) {
  const Eigen::Index m = a.rows();
  if (a.cols() != m || c.cols() != m) {
    throw Error(ErrorCode::kDimensionMismatch,
                "observability matrix: A must be square and match C");
  }
  const Eigen::Index rows = c.rows();
  Matrix o(rows * m, m);
  Matrix block = c;
  for (Eigen::Index k = 0; k < m; ++k) {
    o.middleRows(k * rows, rows) = block;
    block = block * a;
  }
  return o;
}

CVector UncontrollableDirection(const Polynomial& a, const Polynomial& c,
                                Complex lambda, double tol) {
  const int p = a.degree();
  const int q = c.degree();
  if (p < 1 || q < 1 || std::abs(a.EvaluateReciprocal(lambda)) > tol ||
      std::abs(c.EvaluateReciprocal(lambda)) > tol) {
    throw Error(ErrorCode::kNotCommonZero,
                "lambda is not a common zero of the AR and MA reciprocals");
  }
  const std::vector<Complex> u = HornerSequence(a, lambda);
  const std::vector<Complex> v = HornerSequence(c, lambda);
  CVector row(p + q);
  for (int k = 0; k < p; ++k) row(k) = u[k];
  for (int k = 0; k < q; ++k) row(p + k) = v[k];
  return row;
}

TransformedPair BuildTransformedPair(const Polynomial& a,
                                     const Polynomial& c) {
  if (a.degree() != c.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "equal degrees required (p=q)");
  }
  const int n = a.degree();
  if (n < 1) {
    throw Error(ErrorCode::kBadDimension, "transformed pair needs n >= 1");
  }
  const Matrix p = ExchangeMatrix(n);
  const Matrix j = ShiftMatrix(n);
  const Vector e = FirstBasisVector(n);
  const Vector av = a.TailVector();
  const Vector cv = c.TailVector();
  const Matrix top_left = p * (j - e * av.transpose()) * p;

  TransformedPair out;
  out.G_M = Matrix::Zero(2 * n, 2 * n);
  out.G_M.topLeftCorner(n, n) = top_left;
  out.G_M.bottomLeftCorner(n, n) = (cv - av) * e.transpose();
  out.G_M.bottomRightCorner(n, n) = p * j * p - cv * e.transpose();

  out.F_N = Matrix::Zero(2 * n, 2 * n);
  out.F_N.topLeftCorner(n, n) = top_left;
  out.F_N.bottomLeftCorner(n, n) = e * e.transpose();
  out.F_N.bottomRightCorner(n, n) = j - e * cv.transpose();
  return out;
}

Vector TransformedDrivingVector(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kBadDimension, "driving vector needs n >= 1");
  }
  Vector ep = Vector::Zero(2 * n);
  ep(n - 1) = 1.0;
  return ep;
}

StabilityReport StabilityCheck(const Polynomial& p, double margin) {
  StabilityReport report;
  for (const Root& r : RootsOfReciprocal(p).roots) {
    report.spectral_radius = std::max(report.spectral_radius, std::abs(r.value));
  }
  report.stable = report.spectral_radius < 1.0 - margin;
  return report;
}

}  // namespace armafisher
