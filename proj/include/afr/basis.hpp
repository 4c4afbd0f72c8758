#ifndef AFR_BASIS_HPP
#define AFR_BASIS_HPP

#include "afr/types.hpp"

namespace afr {

/// One-dimensional nodal basis of degree p: Lagrange polynomials on the
/// p+1 Gauss-Lobatto solution nodes, evaluated against an n_q-point
/// Gauss-Legendre volume quadrature. The orthonormal modal transform
/// (normalized Legendre) is kept alongside for sensor use.
struct Basis1D {
    int p = 0;
    int nq = 0;

    Vector sol_nodes;       // p+1 GLL points
    Vector quad_nodes;      // n_q GL points
    Vector quad_weights;

    Matrix modal_at_sol;    // (p+1)^2, phi_j(sol_i); nodal = modal_at_sol * modal
    Matrix nodal_to_modal;  // inverse of the above

    Matrix interp_quad;     // n_q x (p+1): nodal coeffs -> values at quadrature
    Matrix dinterp_quad;    // n_q x (p+1): nodal coeffs -> d/dxi at quadrature
    RowVector interp_left;  // value at xi = -1
    RowVector interp_right; // value at xi = +1

    /// Interpolation matrix from nodal coefficients to arbitrary points.
    Matrix interp_to(const Vector& x) const;
};

/// Build the degree-p basis with n_q-point volume quadrature.
/// Requires p >= 1 and n_q >= p+1.
Basis1D build_basis(int p, int nq);

} // namespace afr

#endif
