#include "afr/field.hpp"

namespace afr {

SolutionField SolutionField::zeros(const CartesianMesh& mesh, const ReferenceOperators& ops) {
    SolutionField f;
    f.dim = mesh.dim;
    f.p = ops.p;
    f.nstate = mesh.dim + 2;
    f.mesh = &mesh;
    f.ops = &ops;
    f.elem.assign(mesh.n_elements(), Matrix::Zero(ops.n_nodes(), f.nstate));
    return f;
}

Matrix SolutionField::node_coords(int e) const {
    const MeshElement& el = mesh->elems[e];
    const Vector& xi = ops->basis.sol_nodes;
    const int n1 = p + 1;
    Matrix coords(ops->n_nodes(), dim);
    if (dim == 1) {
        for (int i = 0; i < n1; ++i)
            coords(i, 0) = el.x0 + 0.5 * (xi[i] + 1.0) * el.hx;
    } else {
        for (int j = 0; j < n1; ++j)
            for (int i = 0; i < n1; ++i) {
                coords(j * n1 + i, 0) = el.x0 + 0.5 * (xi[i] + 1.0) * el.hx;
                coords(j * n1 + i, 1) = el.y0 + 0.5 * (xi[j] + 1.0) * el.hy;
            }
    }
    return coords;
}

StateVec SolutionField::evaluate(int e, Real x, Real y) const {
    const MeshElement& el = mesh->elems[e];
    Vector xi(1), eta(1);
    xi[0] = 2.0 * (x - el.x0) / el.hx - 1.0;
    Matrix rx = ops->basis.interp_to(xi); // 1 x (p+1)
    RowVector row;
    if (dim == 1) {
        row = rx.row(0);
    } else {
        eta[0] = 2.0 * (y - el.y0) / el.hy - 1.0;
        Matrix ry = ops->basis.interp_to(eta);
        row = kron(ry, rx).row(0);
    }
    StateVec out(nstate);
    out = (row * elem[e]).transpose();
    return out;
}

Real max_wavespeed(const SolutionField& field, Real gamma) {
    Real lam = 0;
    for (int e = 0; e < field.mesh->n_elements(); ++e) {
        const Matrix& u = field.elem[e];
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            StateVec s = u.row(i).transpose();
            EulerPrim q = cons_to_prim(s, field.dim, gamma);
            if (!admissible(q))
                throw PositivityError("max_wavespeed: inadmissible nodal state", e);
            lam = std::max(lam, wavespeed(q, field.dim, gamma));
        }
    }
    return lam;
}

StateVec cell_average(const SolutionField& field, int e) {
    const ReferenceOperators& ops = *field.ops;
    const Matrix uq = ops.vol_interp * field.elem[e];
    const int nq = ops.nq;
    StateVec avg = StateVec::Zero(field.nstate);
    Real measure = 0;
    for (int q = 0; q < ops.n_quad(); ++q) {
        Real w = field.dim == 1
                     ? ops.basis.quad_weights[q]
                     : ops.basis.quad_weights[q % nq] * ops.basis.quad_weights[q / nq];
        avg += w * uq.row(q).transpose();
        measure += w;
    }
    return avg / measure;
}

StateVec conserved_totals(const SolutionField& field) {
    StateVec tot = StateVec::Zero(field.nstate);
    const ReferenceOperators& ops = *field.ops;
    const int nq = ops.nq;
    for (int e = 0; e < field.mesh->n_elements(); ++e) {
        const Matrix uq = ops.vol_interp * field.elem[e];
        const Real J = field.mesh->jacobian(e);
        for (int q = 0; q < ops.n_quad(); ++q) {
            Real w = field.dim == 1
                         ? ops.basis.quad_weights[q]
                         : ops.basis.quad_weights[q % nq] * ops.basis.quad_weights[q / nq];
            tot += J * w * uq.row(q).transpose();
        }
    }
    return tot;
}

Real total_entropy(const SolutionField& field, Real gamma) {
    Real tot = 0;
    const ReferenceOperators& ops = *field.ops;
    const int nq = ops.nq;
    for (int e = 0; e < field.mesh->n_elements(); ++e) {
        const Matrix uq = ops.vol_interp * field.elem[e];
        const Real J = field.mesh->jacobian(e);
        for (int q = 0; q < ops.n_quad(); ++q) {
            Real w = field.dim == 1
                         ? ops.basis.quad_weights[q]
                         : ops.basis.quad_weights[q % nq] * ops.basis.quad_weights[q / nq];
            StateVec s = uq.row(q).transpose();
            tot += J * w * entropy_density(cons_to_prim(s, field.dim, gamma), gamma);
        }
    }
    return tot;
}

} // namespace afr
