#include "armafisher/stein.h"

#include <string>

#include <Eigen/LU>

#include "armafisher/bezout.h"
#include "armafisher/error.h"
#include "armafisher/statespace.h"
#include "armafisher/structmat.h"

namespace armafisher {

namespace {

void RequireSquarePair(const Matrix& a, const Matrix& q) {
  if (a.rows() != a.cols() || q.rows() != a.rows() || q.cols() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "Stein equation needs square A and Q of equal size");
  }
}

double SteinResidual(const Matrix& a, const Matrix& q, const Matrix& x) {
  const Matrix r = x - a * x * a.transpose() - q;
  const double qn = q.norm();
  return qn > 0.0 ? r.norm() / qn : r.norm();
}

}  // namespace

SteinSolution SolveStein(const Matrix& a, const Matrix& q,
                         const SteinOptions& options) {
  RequireSquarePair(a, q);
  const double rho = SpectralRadius(a);
  if (!(rho < 1.0 - options.stability_margin)) {
    throw Error(ErrorCode::kNotStable,
                "Stein equation needs spectral radius < 1, got " +
                    std::to_string(rho));
  }

  SteinSolution sol;
  sol.method = SteinMethod::kDoubling;
  Matrix ak = a;
  Matrix xk = q;
  bool converged = false;
  for (int k = 0; k < options.max_doublings; ++k) {
    const double an = ak.norm();
    if (an * an <= options.tol || xk.norm() == 0.0) {
      converged = true;
      sol.iterations = k;
      break;
    }
    xk += ak * xk * ak.transpose();
    ak = ak * ak;
  }
  if (!converged) {
    throw Error(ErrorCode::kNoConvergence,
                "Stein doubling did not converge in " +
                    std::to_string(options.max_doublings) + " steps");
  }
  sol.X = 0.5 * (xk + xk.transpose());
  sol.residual = SteinResidual(a, q, sol.X);
  return sol;
}

SteinSolution SolveSteinKronecker(const Matrix& a, const Matrix& q) {
  RequireSquarePair(a, q);
  const Eigen::Index m = a.rows();
  if (m > 12) {
    throw Error(ErrorCode::kBadDimension,
                "Kronecker Stein solve is limited to m <= 12");
  }
  const Eigen::Index mm = m * m;
  // vec is column-major: vec(A X A^T) = (A ⊗ A) vec X.
  Matrix system = Matrix::Identity(mm, mm);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      system.block(i * m, j * m, m, m) -= a(i, j) * a;
    }
  }
  Eigen::FullPivLU<Matrix> lu(system);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::kSingularSystem,
                "I - A ⊗ A is singular; A has reciprocal eigenvalue pairs");
  }
  const Vector rhs = Eigen::Map<const Vector>(q.data(), mm);
  const Vector x = lu.solve(rhs);

  SteinSolution sol;
  sol.method = SteinMethod::kKronecker;
  sol.X = Eigen::Map<const Matrix>(x.data(), m, m);
  sol.X = 0.5 * (sol.X + sol.X.transpose()).eval();
  sol.residual = SteinResidual(a, q, sol.X);
  return sol;
}

SteinQuartet BuildSteinQuartet(const Polynomial& a, const Polynomial& c,
                               const SteinOptions& options) {
  const ScoreSystem sys = BuildScoreSystem(a, c);
  const Eigen::Index m = sys.F.rows();
  const Vector e = Vector::Unit(m, 0);

  SteinQuartet out;
  out.I = SolveStein(sys.F, sys.b_in * sys.b_in.transpose(), options).X;
  out.P = SolveStein(sys.G, e * e.transpose(), options).X;
  if (a.degree() != c.degree()) return out;

  const int n = a.degree();
  const TransformedPair pair = BuildTransformedPair(a, c);
  const Vector ep = TransformedDrivingVector(n);
  const Matrix drive = ep * ep.transpose();
  out.H = SolveStein(pair.G_M, drive, options).X;
  out.Q = SolveStein(pair.F_N, drive, options).X;

  Matrix t = Matrix::Identity(2 * n, 2 * n);
  t.bottomRightCorner(n, n) = BezoutMatrix(c, a);
  out.hq_residual = RelativeResidual(t * *out.Q * t, *out.H);

  const Eigen::PartialPivLU<Matrix> m_lu(MMatrix(c, a));
  const Eigen::PartialPivLU<Matrix> n_lu(NMatrix(c));
  // M^{-1} H M^{-T} = (M^{-1} (M^{-1} H)^T)^T, H symmetric.
  const Matrix m_inv_h = m_lu.solve(*out.H);
  const Matrix i_from_h = m_lu.solve(m_inv_h.transpose()).transpose();
  out.ih_residual = RelativeResidual(i_from_h, out.I);
  const Matrix n_inv_q = n_lu.solve(*out.Q);
  const Matrix p_from_q = n_lu.solve(n_inv_q.transpose()).transpose();
  out.pq_residual = RelativeResidual(p_from_q, out.P);
  return out;
}

}  // namespace armafisher
