#pragma once

#include <complex>

#include <Eigen/Core>

namespace armafisher {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

/// Numerical rank: number of singular values above rel_tol * sigma_max.
int NumericalRank(const Matrix& m, double rel_tol);
int NumericalRank(const CMatrix& m, double rel_tol);

/// Singular values in descending order.
Vector SingularValues(const Matrix& m);

/// Default rank threshold for structural rank decisions on small systems:
/// 1e3 * max(rows, cols) * machine epsilon.
double StructuralRankTolerance(const Matrix& m);

/// Determinant by LU with partial pivoting.
double DeterminantLU(const Matrix& m);

/// |det| small relative to the product of column norms (Hadamard bound).
bool IsNumericallySingular(const Matrix& m, double rel_tol = 1e-10);

/// ||a - b||_F / max(||b||_F, floor).
double RelativeResidual(const Matrix& a, const Matrix& b, double floor = 1e-300);
double RelativeResidual(const CMatrix& a, const CMatrix& b,
                        double floor = 1e-300);

/// Spectral radius from the eigenvalues of a square matrix.
double SpectralRadius(const Matrix& a);

/// Cholesky succeeds (strict positive definiteness).
bool IsPositiveDefinite(const Matrix& m);

}  // namespace armafisher
