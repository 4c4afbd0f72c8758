#ifndef AFR_LEGENDRE_HPP
#define AFR_LEGENDRE_HPP

#include "afr/types.hpp"

namespace afr {

/// Legendre polynomial P_n and its first derivative at x.
void legendre_eval(int n, Real x, Real& P, Real& dP);

/// Orthonormal Legendre value: phi_n = sqrt((2n+1)/2) * P_n, so that
/// the phi_n are orthonormal in L2 on [-1, 1].
Real orthonormal_legendre(int n, Real x);

/// k-th derivative of phi_n at x (k >= 0).
Real orthonormal_legendre_deriv(int n, Real x, int k);

/// Generalized Vandermonde of the orthonormal basis: V(i,j) = phi_j(x_i),
/// modes j = 0..p. der selects the derivative order of the columns.
Matrix orthonormal_vandermonde(const Vector& x, int p, int der = 0);

} // namespace afr

#endif
