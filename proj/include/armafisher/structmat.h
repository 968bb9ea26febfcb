#pragma once

#include "armafisher/linalg.h"
#include "armafisher/poly.h"

namespace armafisher {

/// Forward shift J: ones on the first subdiagonal.
Matrix ShiftMatrix(int n);

/// Exchange (anti-diagonal identity) P.
Matrix ExchangeMatrix(int n);

/// First basis vector e of R^n.
Vector FirstBasisVector(int n);

/// Last basis vector of R^n.
Vector LastBasisVector(int n);

/// u_n(z) = (1, z, ..., z^{n-1}); starred gives the reversed order.
CVector UVector(int n, Complex z, bool starred = false);

/// U_phi = I - phi J.
CMatrix UPhiMatrix(int n, Complex phi);

/// T_phi = U_phi^{-1}, lower triangular Toeplitz with entries phi^{i-j}.
CMatrix TPhiMatrix(int n, Complex phi);

// Hankel matrices attached to a polynomial of degree n >= 1:
//   S(p)_{ij}  = p_{i+j+1}   (0-based, zero beyond n),
//   S(p̂)_{ij} = p_{n-1-i-j} (zero for negative index),
//   S̃(p̂) is (n+1)x(n+1) with entries p_{n-i-j}.
Matrix SMatrix(const Polynomial& p);
Matrix SHatMatrix(const Polynomial& p);
Matrix STildeHatMatrix(const Polynomial& p);

/// Sylvester resultant matrix R(c,-a) of order p+q: p shifted rows of
/// (1, c_1, ..., c_q) over q shifted rows of -(1, a_1, ..., a_p).
Matrix SylvesterMatrix(const Polynomial& c, const Polynomial& a);

/// det R(c,-a) by LU with partial pivoting.
double ResultantDeterminant(const Polynomial& a, const Polynomial& c);

/// (-1)^q prod_{i,j} (gamma_j - alpha_i) over the zeros of â and ĉ. Cross-check
/// route for ResultantDeterminant; uses the root finder.
double ResultantFromRoots(const Polynomial& a, const Polynomial& c);

/// M(c,a) = [P, 0; P S(â) P, P S(ĉ) P]. Requires deg a == deg c >= 1.
Matrix MMatrix(const Polynomial& c, const Polynomial& a);

/// N(c) = [P S(ĉ) P, S(c); 0, I].
Matrix NMatrix(const Polynomial& c);

}  // namespace armafisher
