#include "armafisher/structmat.h"

#include <string>

#include "armafisher/error.h"

namespace armafisher {

namespace {

void RequirePositive(int n, const char* what) {
  if (n < 1) {
    throw Error(ErrorCode::kBadDimension,
                std::string(what) + ": dimension must be >= 1, got " +
                    std::to_string(n));
  }
}

void RequireEqualDegree(const Polynomial& c, const Polynomial& a) {
  if (a.degree() != c.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "equal degrees required (p=q)");
  }
  RequirePositive(a.degree(), "degree");
}

}  // namespace

Matrix ShiftMatrix(int n) {
  RequirePositive(n, "ShiftMatrix");
  Matrix j = Matrix::Zero(n, n);
  for (int i = 1; i < n; ++i) j(i, i - 1) = 1.0;
  return j;
}

Matrix ExchangeMatrix(int n) {
  RequirePositive(n, "ExchangeMatrix");
  Matrix p = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) p(i, n - 1 - i) = 1.0;
  return p;
}

Vector FirstBasisVector(int n) {
  RequirePositive(n, "FirstBasisVector");
  return Vector::Unit(n, 0);
}

Vector LastBasisVector(int n) {
  RequirePositive(n, "LastBasisVector");
  return Vector::Unit(n, n - 1);
}

CVector UVector(int n, Complex z, bool starred) {
  RequirePositive(n, "UVector");
  CVector u(n);
  Complex power = 1.0;
  for (int k = 0; k < n; ++k) {
    u(starred ? n - 1 - k : k) = power;
    power *= z;
  }
  return u;
}

CMatrix UPhiMatrix(int n, Complex phi) {
  RequirePositive(n, "UPhiMatrix");
  CMatrix u = CMatrix::Identity(n, n);
  for (int i = 1; i < n; ++i) u(i, i - 1) = -phi;
  return u;
}

CMatrix TPhiMatrix(int n, Complex phi) {
  RequirePositive(n, "TPhiMatrix");
  CMatrix t = CMatrix::Zero(n, n);
  Complex power = 1.0;
  for (int d = 0; d < n; ++d) {
    for (int j = 0; j + d < n; ++j) t(j + d, j) = power;
    power *= phi;
  }
  return t;
}

Matrix SMatrix(const Polynomial& p) {
  const int n = p.degree();
  RequirePositive(n, "SMatrix degree");
  Matrix s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) = p[i + j + 1];
  }
  return s;
}

Matrix SHatMatrix(const Polynomial& p) {
  const int n = p.degree();
  RequirePositive(n, "SHatMatrix degree");
  Matrix s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) = p[n - 1 - i - j];
  }
  return s;
}

Matrix STildeHatMatrix(const Polynomial& p) {
  const int n = p.degree();
  RequirePositive(n, "STildeHatMatrix degree");
  Matrix s(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) s(i, j) = p[n - i - j];
  }
  return s;
}

Matrix SylvesterMatrix(const Polynomial& c, const Polynomial& a) {
  const int p = a.degree();
  const int q = c.degree();
  if (p + q < 1) {
    throw Error(ErrorCode::kBadDimension,
                "Sylvester matrix needs p + q >= 1");
  }
  Matrix r = Matrix::Zero(p + q, p + q);
  for (int i = 0; i < p; ++i) {
    for (int k = 0; k <= q; ++k) r(i, i + k) = c[k];
  }
  for (int i = 0; i < q; ++i) {
    for (int k = 0; k <= p; ++k) r(p + i, i + k) = -a[k];
  }
  return r;
}

double ResultantDeterminant(const Polynomial& a, const Polynomial& c) {
  if (a.degree() + c.degree() == 0) return 1.0;
  return DeterminantLU(SylvesterMatrix(c, a));
}

double ResultantFromRoots(const Polynomial& a, const Polynomial& c) {
  const RootSet alphas = RootsOfReciprocal(a);
  const RootSet gammas = RootsOfReciprocal(c);
  // The -a rows contribute (-1)^q.
  Complex prod = (c.degree() % 2 == 0) ? 1.0 : -1.0;
  for (const Root& alpha : alphas.roots) {
    for (const Root& gamma : gammas.roots) {
      const Complex diff = gamma.value - alpha.value;
      for (int k = 0; k < alpha.multiplicity * gamma.multiplicity; ++k) {
        prod *= diff;
      }
    }
  }
  return prod.real();
}

Matrix MMatrix(const Polynomial& c, const Polynomial& a) {
  RequireEqualDegree(c, a);
  const int n = a.degree();
  const Matrix p = ExchangeMatrix(n);
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = p;
  m.bottomLeftCorner(n, n) = p * SHatMatrix(a) * p;
  m.bottomRightCorner(n, n) = p * SHatMatrix(c) * p;
  return m;
}

Matrix NMatrix(const Polynomial& c) {
  const int n = c.degree();
  RequirePositive(n, "NMatrix degree");
  const Matrix p = ExchangeMatrix(n);
  Matrix m = Matrix::Zero(2 * n, 2 * n);
  m.topLeftCorner(n, n) = p * SHatMatrix(c) * p;
  m.topRightCorner(n, n) = SMatrix(c);
  m.bottomRightCorner(n, n) = Matrix::Identity(n, n);
  return m;
}

}  // namespace armafisher
