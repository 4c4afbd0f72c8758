#include "afr/basis.hpp"
#include "afr/legendre.hpp"
#include "afr/quadrature.hpp"

namespace afr {

Matrix Basis1D::interp_to(const Vector& x) const {
    return orthonormal_vandermonde(x, p) * nodal_to_modal;
}

Basis1D build_basis(int p, int nq) {
    if (p < 1) throw std::invalid_argument("build_basis: p must be >= 1");
    if (nq < p + 1) throw std::invalid_argument("build_basis: n_q must be >= p+1");

    Basis1D b;
    b.p = p;
    b.nq = nq;
    b.sol_nodes = gauss_lobatto(p + 1).nodes;
    QuadratureRule gq = gauss_legendre(nq);
    b.quad_nodes = gq.nodes;
    b.quad_weights = gq.weights;

    b.modal_at_sol = orthonormal_vandermonde(b.sol_nodes, p);
    b.nodal_to_modal = b.modal_at_sol.inverse();

    b.interp_quad = orthonormal_vandermonde(b.quad_nodes, p) * b.nodal_to_modal;
    b.dinterp_quad = orthonormal_vandermonde(b.quad_nodes, p, 1) * b.nodal_to_modal;

    Vector ends(2);
    ends << -1.0, 1.0;
    Matrix trace = orthonormal_vandermonde(ends, p) * b.nodal_to_modal;
    b.interp_left = trace.row(0);
    b.interp_right = trace.row(1);
    return b;
}

} // namespace afr
