#include "afr/residual.hpp"

#include <cmath>

namespace afr {

namespace {

EulerPrim projected_state(const Real* w, int dim, Real gamma, int elem) {
    if (!(w[dim + 1] < 0))
        throw PositivityError("residual: entropy projection left admissible set", elem);
    EulerPrim q = entropy_to_prim(w, dim, gamma);
    if (!admissible(q) || !std::isfinite(q.rho) || !std::isfinite(q.p))
        throw PositivityError("residual: entropy-projected state inadmissible", elem);
    return q;
}

} // namespace

void compute_residual(const SolutionField& field, const CParameterField& c_field,
                      const FluxConfig& cfg, SolutionField& dudt, ResidualWorkspace& ws) {
    const CartesianMesh& mesh = *field.mesh;
    const ReferenceOperators& ops = *field.ops;
    const int dim = field.dim;
    const int ns = field.nstate;
    const int ne = mesh.n_elements();
    const int nqv = ops.n_quad();
    const int nq = ops.nq;
    const int nfp = ops.n_face_points();
    const int nsides = ops.n_faces();
    const Real gamma = cfg.gamma;

    if (static_cast<int>(c_field.size()) != ne)
        throw std::invalid_argument("compute_residual: c field size mismatch");

    ws.vol_states.resize(static_cast<size_t>(ne) * nqv);
    ws.face_states.resize(static_cast<size_t>(ne) * nsides * nfp);
    ws.face_flux.assign(mesh.faces.size() * nfp * ns, 0.0);
    ws.uq.resize(nqv, ns);
    ws.vq.resize(nqv, ns);
    ws.vhat.resize(ops.n_nodes(), ns);
    ws.vtilde.resize(nqv, ns);
    ws.rq.resize(nqv, ns);
    ws.rnodal.resize(ops.n_nodes(), ns);
    ws.rf.assign(nsides, Matrix(nfp, ns));

    // interpolate, convert to entropy variables, project, and evaluate the
    // projected states at the volume and facet quadrature points
    for (int e = 0; e < ne; ++e) {
        ws.uq.noalias() = ops.vol_interp * field.elem[e];
        for (int q = 0; q < nqv; ++q) {
            StateVec u = ws.uq.row(q).transpose();
            EulerPrim prim = cons_to_prim(u, dim, gamma);
            if (!admissible(prim))
                throw PositivityError("residual: inadmissible quadrature state", e);
            Real w[4];
            entropy_variables(prim, dim, gamma, w);
            for (int s = 0; s < ns; ++s) ws.vq(q, s) = w[s];
        }
        ws.vhat.noalias() = ops.vol_proj * ws.vq;
        ws.vtilde.noalias() = ops.vol_interp * ws.vhat;
        for (int q = 0; q < nqv; ++q) {
            Real w[4];
            for (int s = 0; s < ns; ++s) w[s] = ws.vtilde(q, s);
            ws.vol_states[static_cast<size_t>(e) * nqv + q] = projected_state(w, dim, gamma, e);
        }
        for (int f = 0; f < nsides; ++f) {
            Matrix vf = ops.face_interp[f] * ws.vhat;
            for (int k = 0; k < nfp; ++k) {
                Real w[4];
                for (int s = 0; s < ns; ++s) w[s] = vf(k, s);
                ws.face_states[(static_cast<size_t>(e) * nsides + f) * nfp + k] =
                    projected_state(w, dim, gamma, e);
            }
        }
    }

    // single-valued numerical flux per face, stored against +e_dir of elem_l
    for (size_t fid = 0; fid < mesh.faces.size(); ++fid) {
        const Face& fc = mesh.faces[fid];
        Real* out = ws.face_flux.data() + fid * nfp * ns;
        for (int k = 0; k < nfp; ++k) {
            const EulerPrim& L =
                ws.face_states[(static_cast<size_t>(fc.elem_l) * nsides + fc.side_l) * nfp + k];
            if (!fc.boundary()) {
                const EulerPrim& R =
                    ws.face_states[(static_cast<size_t>(fc.elem_r) * nsides + fc.side_r) * nfp + k];
                interface_flux(L, R, dim, fc.dir, +1, cfg, out + k * ns);
            } else {
                const int sign = (fc.side_l % 2 == 0) ? -1 : +1;
                const StateVec ghost = ghost_state(prim_to_cons(L, dim, gamma),
                                                   mesh.bcs[fc.bc], dim, fc.dir, sign, field.time);
                EulerPrim R = cons_to_prim(ghost, dim, gamma);
                if (!admissible(R))
                    throw PositivityError("residual: inadmissible ghost state", fc.elem_l);
                interface_flux(L, R, dim, fc.dir, sign, cfg, out + k * ns);
            }
        }
    }

    // assemble: per-direction line sweeps of the stacked skew operator,
    // facet penalties, modified mass inverse
    const Matrix& S1 = ops.skew_1d;
    for (int e = 0; e < ne; ++e) {
        const MeshElement& el = mesh.elems[e];
        ws.rq.setZero();
        for (int f = 0; f < nsides; ++f) ws.rf[f].setZero();

        ws.line_acc.resize(static_cast<size_t>(nq + 2) * ns);
        ws.line_states.resize(nq + 2);
        Real* acc = ws.line_acc.data();
        const EulerPrim** line = ws.line_states.data();
        const EulerPrim* vol = ws.vol_states.data() + static_cast<size_t>(e) * nqv;
        const EulerPrim* fst = ws.face_states.data() + static_cast<size_t>(e) * nsides * nfp;

        for (int dir = 0; dir < dim; ++dir) {
            const Real smet = dim == 2 ? (dir == 0 ? el.hy / 2 : el.hx / 2) : 1.0;
            const int nlines = dim == 2 ? nq : 1;
            const EulerPrim* fneg = fst + (2 * dir) * nfp;
            const EulerPrim* fpos = fst + (2 * dir + 1) * nfp;
            for (int l = 0; l < nlines; ++l) {
                const Real wt = (dim == 2 ? ops.basis.quad_weights[l] : 1.0) * smet;
                for (int a = 0; a < nq; ++a)
                    line[a] = dir == 0 ? &vol[l * nq + a] : &vol[a * nq + l];
                line[nq] = &fneg[l];
                line[nq + 1] = &fpos[l];
                const int nst = nq + 2;
                for (int i = 0; i < nst * ns; ++i) acc[i] = 0.0;
                Real fbuf[4];
                for (int i = 0; i < nst; ++i) {
                    const int jend = (i < nq) ? nst : 0; // corner block is zero
                    for (int j = i + 1; j < jend; ++j) {
                        const Real sij = S1(i, j);
                        if (sij == 0.0) continue;
                        two_point_flux(*line[i], *line[j], dim, dir, gamma, fbuf);
                        const Real cij = sij * wt;
                        for (int s = 0; s < ns; ++s) {
                            acc[i * ns + s] += cij * fbuf[s];
                            acc[j * ns + s] -= cij * fbuf[s];
                        }
                    }
                }
                for (int a = 0; a < nq; ++a) {
                    const int q = dir == 0 ? l * nq + a : a * nq + l;
                    for (int s = 0; s < ns; ++s) ws.rq(q, s) += acc[a * ns + s];
                }
                for (int s = 0; s < ns; ++s) {
                    ws.rf[2 * dir](l, s) += acc[nq * ns + s];
                    ws.rf[2 * dir + 1](l, s) += acc[(nq + 1) * ns + s];
                }
            }
        }

        for (int fs = 0; fs < nsides; ++fs) {
            const int fid = el.face[fs];
            const Face& fc = mesh.faces[fid];
            const bool own = (fc.elem_l == e && fc.side_l == fs);
            const Real sign = own ? 1.0 : -1.0;
            const int dir = fs / 2;
            const Real smet = dim == 2 ? (dir == 0 ? el.hy / 2 : el.hx / 2) : 1.0;
            const Real* flux = ws.face_flux.data() + static_cast<size_t>(fid) * nfp * ns;
            for (int k = 0; k < nfp; ++k) {
                const Real wk = ops.face_weights[k] * smet * sign;
                for (int s = 0; s < ns; ++s) ws.rf[fs](k, s) += wk * flux[k * ns + s];
            }
        }

        ws.rnodal.noalias() = ops.vol_interp.transpose() * ws.rq;
        for (int fs = 0; fs < nsides; ++fs)
            ws.rnodal.noalias() += ops.face_interp[fs].transpose() * ws.rf[fs];

        const Real scale = -1.0 / mesh.jacobian(e);
        dudt.elem[e] = scale * ops.mass_solver(c_field[e]).solve(ws.rnodal);
    }
    dudt.time = field.time;
}

} // namespace afr
