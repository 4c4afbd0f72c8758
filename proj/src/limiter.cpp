#include "afr/limiter.hpp"

namespace afr {

namespace {

// enforcement values: volume quadrature points followed by all facet
// quadrature points
Matrix enforcement_values(const Matrix& u, const ReferenceOperators& ops) {
    const int nv = ops.n_quad();
    const int nfp = ops.n_face_points();
    Matrix vals(nv + ops.n_faces() * nfp, u.cols());
    vals.topRows(nv) = ops.vol_interp * u;
    for (int f = 0; f < ops.n_faces(); ++f)
        vals.middleRows(nv + f * nfp, nfp) = ops.face_interp[f] * u;
    return vals;
}

StateVec quadrature_average(const Matrix& u, const ReferenceOperators& ops, int dim) {
    const Matrix uq = ops.vol_interp * u;
    StateVec avg = StateVec::Zero(u.cols());
    const int nq = ops.nq;
    Real measure = 0;
    for (int q = 0; q < ops.n_quad(); ++q) {
        const Real w = dim == 1
                           ? ops.basis.quad_weights[q]
                           : ops.basis.quad_weights[q % nq] * ops.basis.quad_weights[q / nq];
        avg += w * uq.row(q).transpose();
        measure += w;
    }
    return avg / measure;
}

} // namespace

bool limit_element(Matrix& u, const ReferenceOperators& ops, const LimiterConfig& cfg,
                   Real gamma, int elem_id, LimiterStats* stats) {
    if (!cfg.enabled) return false;
    const int dim = ops.dim;
    const StateVec avg = quadrature_average(u, ops, dim);
    const Real rho_avg = avg[0];
    const EulerPrim qavg = cons_to_prim(avg, dim, gamma);
    if (!(rho_avg > cfg.eps_pos) || !(qavg.p > cfg.eps_pos))
        throw PositivityError("limiter: inadmissible cell average", elem_id);

    bool touched = false;

    // density squeeze
    Matrix vals = enforcement_values(u, ops);
    const Real rho_floor = std::min(cfg.eps_pos, rho_avg);
    const Real rho_min = vals.col(0).minCoeff();
    if (rho_min < rho_floor) {
        const Real theta = (rho_avg - rho_floor) / (rho_avg - rho_min);
        u.col(0) = (rho_avg + theta * (u.col(0).array() - rho_avg)).matrix();
        touched = true;
        if (stats) ++stats->density_activations;
        vals = enforcement_values(u, ops);
    }

    // pressure squeeze: largest theta in [0,1] with p >= floor at every
    // point, via the secant bound p(u_theta) >= (1-theta) p_avg + theta p
    const Real p_floor = std::min(cfg.eps_pos, qavg.p);
    Real theta = 1.0;
    for (Eigen::Index i = 0; i < vals.rows(); ++i) {
        StateVec ui = vals.row(i).transpose();
        const Real p = pressure(ui, dim, gamma);
        if (p < p_floor) theta = std::min(theta, (qavg.p - p_floor) / (qavg.p - p));
    }
    if (theta < 1.0) {
        theta = std::max(theta, 0.0);
        for (Eigen::Index s = 0; s < u.cols(); ++s)
            u.col(s) = (avg[s] + theta * (u.col(s).array() - avg[s])).matrix();
        touched = true;
        if (stats) ++stats->pressure_activations;
    }
    return touched;
}

void limit_field(SolutionField& field, const LimiterConfig& cfg, Real gamma,
                 LimiterStats* stats) {
    if (!cfg.enabled) return;
    for (int e = 0; e < field.mesh->n_elements(); ++e)
        limit_element(field.elem[e], *field.ops, cfg, gamma, e, stats);
}

} // namespace afr
