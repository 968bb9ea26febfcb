#include "armafisher/bezout.h"

#include <algorithm>
#include <string>

#include "armafisher/error.h"
#include "armafisher/structmat.h"

namespace armafisher {

namespace {

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> BezoutRecursion(
    std::span<const Scalar> a, std::span<const Scalar> b) {
  using M = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDegreeMismatch, "equal degrees required (p=q)");
  }
  const int n = static_cast<int>(a.size()) - 1;
  if (n < 0) {
    throw Error(ErrorCode::kEmptyCoefficients, "empty coefficient sequence");
  }
  auto d = [&](int i, int j) -> Scalar {
    if (i > n || j > n) return Scalar(0);
    return a[i] * b[j] - a[j] * b[i];
  };
  M bez = M::Zero(n, n);
  for (int i = n - 1; i >= 0; --i) {
    for (int j = 0; j < n; ++j) {
      Scalar v = d(i + 1, j);
      if (i + 1 < n && j >= 1) v += bez(i + 1, j - 1);
      bez(i, j) = v;
    }
  }
  return bez;
}

CoeffVector DeflateOrThrow(std::span<const Complex> coeffs, Complex alpha,
                           double tol, const char* which) {
  Deflation d = DeflateFactor(coeffs, alpha);
  if (!(d.residual <= tol)) {
    throw Error(ErrorCode::kNotAFactor,
                std::string(which) + ": factor parameter is not a zero of the "
                "reciprocal polynomial (deflation residual " +
                    std::to_string(d.residual) + ")");
  }
  return std::move(d.quotient);
}

CMatrix PadWithZeroBlock(const CMatrix& inner, int n) {
  CMatrix padded = CMatrix::Zero(n, n);
  padded.topLeftCorner(inner.rows(), inner.cols()) = inner;
  return padded;
}

CVector PaddedCoefficients(const CoeffVector& coeffs, int n) {
  CVector v = CVector::Zero(n);
  for (std::size_t k = 0; k < coeffs.size(); ++k) v(k) = coeffs[k];
  return v;
}

void RequireEqualPositiveDegree(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "equal degrees required (p=q)");
  }
  if (a.degree() < 1) {
    throw Error(ErrorCode::kBadDimension, "Bezout matrix needs degree >= 1");
  }
}

double FactorizationMismatch(const Polynomial& p,
                             std::span<const Complex> params) {
  const CoeffVector rebuilt = FromFactorParameters(params);
  double worst = 0.0;
  for (int k = 0; k <= p.degree(); ++k) {
    worst = std::max(worst, std::abs(rebuilt[k] - p[k]));
  }
  return worst;
}

}  // namespace

Matrix BezoutMatrix(const Polynomial& a, const Polynomial& b) {
  RequireEqualPositiveDegree(a, b);
  return BezoutRecursion<double>(a.coefficients(), b.coefficients());
}

CMatrix BezoutMatrix(std::span<const Complex> a, std::span<const Complex> b) {
  return BezoutRecursion<Complex>(a, b);
}

BezoutDecomposition BezoutDecomposeOnce(const Polynomial& a,
                                        const Polynomial& b, Complex alpha,
                                        Complex beta, double tol) {
  RequireEqualPositiveDegree(a, b);
  const int n = a.degree();
  const CoeffVector ac = ToComplex(a);
  const CoeffVector bc = ToComplex(b);
  const CoeffVector a1 = DeflateOrThrow(ac, alpha, tol, "a");
  const CoeffVector b1 = DeflateOrThrow(bc, beta, tol, "b");

  BezoutDecomposition out;
  out.inner = BezoutMatrix(a1, b1);
  out.a_alpha = PaddedCoefficients(a1, n);
  out.b_beta = PaddedCoefficients(b1, n);
  out.reconstruction = UPhiMatrix(n, alpha) * PadWithZeroBlock(out.inner, n) *
                           UPhiMatrix(n, beta).transpose() +
                       (beta - alpha) * out.b_beta * out.a_alpha.transpose();
  return out;
}

CMatrix BezoutExpansion(const Polynomial& a, const Polynomial& b,
                        std::span<const Complex> alphas,
                        std::span<const Complex> betas, double tol) {
  RequireEqualPositiveDegree(a, b);
  const int n = a.degree();
  if (static_cast<int>(alphas.size()) != n ||
      static_cast<int>(betas.size()) != n) {
    throw Error(ErrorCode::kBadFactorization,
                "factor parameter lists must have length n");
  }
  if (FactorizationMismatch(a, alphas) > tol ||
      FactorizationMismatch(b, betas) > tol) {
    throw Error(ErrorCode::kBadFactorization,
                "factor parameters do not reproduce the polynomials");
  }

  std::vector<CMatrix> u_alpha;
  std::vector<CMatrix> u_beta;
  for (int k = 0; k < n; ++k) {
    u_alpha.push_back(UPhiMatrix(n, alphas[k]));
    u_beta.push_back(UPhiMatrix(n, betas[k]));
  }
  const CVector e = CVector::Unit(n, 0);

  CMatrix sum = CMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    // Left factor applied to e, right factor applied to e^T.
    CVector left = e;
    for (int i = n - 1; i > k; --i) left = u_beta[i] * left;
    for (int i = k - 1; i >= 0; --i) left = u_alpha[i] * left;
    Eigen::RowVectorXcd right = e.transpose();
    for (int i = 0; i < k; ++i) right = right * u_beta[i].transpose();
    for (int i = k + 1; i < n; ++i) right = right * u_alpha[i].transpose();
    sum += (betas[k] - alphas[k]) * left * right;
  }
  return sum;
}

CommonZeroFactor BezoutCommonZeroFactor(std::span<const Complex> a,
                                        std::span<const Complex> b,
                                        Complex phi, double tol) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDegreeMismatch, "equal degrees required (p=q)");
  }
  if (a.size() < 2) {
    throw Error(ErrorCode::kBadDimension, "cannot deflate a constant");
  }
  CommonZeroFactor out;
  out.a_deflated = DeflateOrThrow(a, phi, tol, "a");
  out.b_deflated = DeflateOrThrow(b, phi, tol, "b");
  out.inner = BezoutMatrix(out.a_deflated, out.b_deflated);
  return out;
}

CommonZeroFactor BezoutCommonZeroFactor(const Polynomial& a,
                                        const Polynomial& b, Complex phi,
                                        double tol) {
  RequireEqualPositiveDegree(a, b);
  return BezoutCommonZeroFactor(ToComplex(a), ToComplex(b), phi, tol);
}

KernelBasis BezoutKernelBasis(const Polynomial& a, const Polynomial& b,
                              double tol) {
  RequireEqualPositiveDegree(a, b);
  const int n = a.degree();
  KernelBasis basis;
  basis.common_roots = CommonRoots(a, b, tol);

  const CMatrix shift = ShiftMatrix(n).cast<Complex>();
  const CVector last = CVector::Unit(n, n - 1);
  for (const Root& root : basis.common_roots) {
    const CMatrix t = TPhiMatrix(n, root.value);
    CMatrix t_power = t;
    CMatrix shift_power = CMatrix::Identity(n, n);
    for (int j = 1; j <= root.multiplicity; ++j) {
      basis.vectors.push_back((t_power * shift_power).transpose() * last);
      t_power = t_power * t;
      shift_power = shift_power * shift;
    }
  }

  const Matrix bez = BezoutMatrix(a, b);
  const double bez_norm = bez.norm();
  if (bez_norm > 0.0) {
    for (const CVector& v : basis.vectors) {
      const double r = (bez.cast<Complex>() * v).norm() / (bez_norm * v.norm());
      basis.max_residual = std::max(basis.max_residual, r);
    }
  }
  return basis;
}

}  // namespace armafisher
