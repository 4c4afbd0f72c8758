#include "afr/cases.hpp"

#include <cmath>

namespace afr {

CaseId case_from_string(const std::string& s) {
    if (s == "gaussian-pulse") return CaseId::gaussian_pulse;
    if (s == "leblanc") return CaseId::leblanc;
    if (s == "shock-diffraction") return CaseId::shock_diffraction;
    if (s == "dmr") return CaseId::dmr;
    throw std::invalid_argument("unknown case '" + s +
                                "' (gaussian-pulse|leblanc|shock-diffraction|dmr)");
}

std::string to_string(CaseId id) {
    switch (id) {
        case CaseId::gaussian_pulse: return "gaussian-pulse";
        case CaseId::leblanc: return "leblanc";
        case CaseId::shock_diffraction: return "shock-diffraction";
        default: return "dmr";
    }
}

namespace {

// shock-diffraction post-shock state (Mach 5.09 incident shock)
const EulerPrim kDiffractionLeft = {7.041132906907898, {4.07794695481336, 0.0}, 30.05945};
const EulerPrim kQuiescent = {1.4, {0.0, 0.0}, 1.0};
// DMR post-shock state behind the Mach 10 oblique shock
const EulerPrim kDmrPostShock = {8.0, {33.0 * std::sqrt(3.0) / 8.0, -33.0 / 8.0}, 116.5};

} // namespace

EulerPrim initial_prim(CaseId id, Real x, Real y, Real sigma) {
    switch (id) {
        case CaseId::gaussian_pulse: {
            EulerPrim q;
            q.rho = 0.01 + std::exp(-sigma * (x * x + y * y));
            q.v[0] = 1.0;
            q.v[1] = 1.0;
            q.p = 1.0;
            return q;
        }
        case CaseId::leblanc: {
            EulerPrim q;
            if (x < 0) {
                q.rho = 2.0;
                q.p = 1e9;
            } else {
                q.rho = 0.001;
                q.p = 1.0;
            }
            return q;
        }
        case CaseId::shock_diffraction:
            return x < 0.5 ? kDiffractionLeft : kQuiescent;
        case CaseId::dmr:
            return y > std::sqrt(3.0) * (x - 1.0 / 6.0) ? kDmrPostShock : kQuiescent;
    }
    throw std::logic_error("initial_prim: unknown case");
}

SolverSetup CaseInstance::solver() const {
    SolverSetup s;
    s.scheme = cfg.scheme;
    s.sensor = sensor;
    s.flux.dissipation = cfg.dissipation;
    s.flux.gamma = cfg.gamma;
    s.limiter.enabled = cfg.limiter_enabled;
    s.limiter.eps_pos = cfg.eps_pos;
    return s;
}

TimeConfig CaseInstance::time() const {
    TimeConfig t;
    t.cfl = cfg.cfl;
    t.t_final = cfg.t_final;
    t.cfl_mode = cfg.cfl_mode;
    t.sensor_update = cfg.sensor_update;
    t.max_steps = cfg.max_steps;
    t.log_every = cfg.log_every;
    return t;
}

SolutionField CaseInstance::initial_field() const {
    SolutionField f = SolutionField::zeros(mesh, ops);
    for (int e = 0; e < mesh.n_elements(); ++e) {
        const Matrix coords = f.node_coords(e);
        for (Eigen::Index i = 0; i < coords.rows(); ++i) {
            const Real x = coords(i, 0);
            const Real y = f.dim == 2 ? coords(i, 1) : 0.0;
            f.elem[e].row(i) =
                prim_to_cons(initial_prim(cfg.id, x, y, cfg.sigma), f.dim, cfg.gamma).transpose();
        }
    }
    return f;
}

EulerPrim CaseInstance::exact_prim(Real x, Real y, Real t) const {
    if (cfg.id == CaseId::gaussian_pulse) {
        // initial condition advected by (1,1) with periodic wrap
        auto wrap = [](Real v) {
            Real w = std::fmod(v + 0.5, 1.0);
            if (w < 0) w += 1.0;
            return w - 0.5;
        };
        return initial_prim(cfg.id, wrap(x - t), wrap(y - t), cfg.sigma);
    }
    if (cfg.id == CaseId::leblanc) {
        const EulerPrim L = initial_prim(cfg.id, -1.0, 0.0);
        const EulerPrim R = initial_prim(cfg.id, 1.0, 0.0);
        if (t <= 0) return x < 0 ? L : R;
        return sample_riemann(riemann, L, R, cfg.gamma, x / t);
    }
    throw std::invalid_argument("exact_prim: no exact solution for " + to_string(cfg.id));
}

StateVec CaseInstance::exact_state(Real x, Real y, Real t) const {
    return prim_to_cons(exact_prim(x, y, t), mesh.dim, cfg.gamma);
}

std::unique_ptr<CaseInstance> make_case(const CaseConfig& cfg_in) {
    auto inst = std::make_unique<CaseInstance>();
    CaseConfig cfg = cfg_in;

    switch (cfg.id) {
        case CaseId::gaussian_pulse: {
            if (cfg.nx == 0) cfg.nx = 32;
            if (cfg.ny == 0) cfg.ny = cfg.nx;
            if (cfg.nx != cfg.ny)
                throw std::invalid_argument("gaussian-pulse: square grid required");
            if (cfg.t_final < 0) cfg.t_final = 1.0;
            inst->mesh = build_mesh_2d(-0.5, 0.5, -0.5, 0.5, cfg.nx, cfg.ny, true, true);
            break;
        }
        case CaseId::leblanc: {
            if (cfg.nx == 0) cfg.nx = 900;
            if (cfg.t_final < 0) cfg.t_final = 1e-4;
            BoundaryCondition out{BoundaryTag::outflow, {}};
            inst->mesh = build_mesh_1d(-10.0, 10.0, cfg.nx, false, out, out);
            break;
        }
        case CaseId::shock_diffraction: {
            if (cfg.nx == 0) cfg.nx = 52;
            if (cfg.ny == 0) cfg.ny = cfg.nx * 11 / 13;
            if (cfg.nx % 13 != 0 || cfg.ny % 11 != 0 || cfg.nx / 13 != cfg.ny / 11)
                throw std::invalid_argument(
                    "shock-diffraction: grid must be 13k x 11k for uniform conforming blocks");
            if (cfg.t_final < 0) cfg.t_final = 2.3;
            const Real gamma = cfg.gamma;
            DomainMask mask = [](Real x, Real y) { return x > 1.0 || y > 6.0; };
            StateVec inflow = prim_to_cons(kDiffractionLeft, 2, gamma);
            BoundaryAssigner assign = [inflow](Real x, Real y, int side) -> BoundaryCondition {
                switch (side) {
                    case 0: // x=0 inflow above the corner; x=1 wall below it
                        return x < 0.5 ? BoundaryCondition{BoundaryTag::inflow, inflow}
                                       : BoundaryCondition{BoundaryTag::slip_wall, {}};
                    case 1:
                        return {BoundaryTag::outflow, {}};
                    case 2: // y=0 outflow; y=6 corner wall
                        return y < 3.0 ? BoundaryCondition{BoundaryTag::outflow, {}}
                                       : BoundaryCondition{BoundaryTag::slip_wall, {}};
                    default:
                        return {BoundaryTag::slip_wall, {}};
                }
            };
            inst->mesh =
                build_mesh_2d(0.0, 13.0, 0.0, 11.0, cfg.nx, cfg.ny, false, false, mask, assign);
            break;
        }
        case CaseId::dmr: {
            if (cfg.nx == 0) cfg.nx = 96;
            if (cfg.ny == 0) cfg.ny = cfg.nx * 3 / 4;
            if (cfg.nx % 4 != 0 || cfg.ny % 3 != 0 || cfg.nx / 4 != cfg.ny / 3)
                throw std::invalid_argument("dmr: grid must be 4k x 3k for square elements");
            if (cfg.t_final < 0) cfg.t_final = 0.2;
            StateVec post = prim_to_cons(kDmrPostShock, 2, cfg.gamma);
            BoundaryAssigner assign = [post](Real x, Real, int side) -> BoundaryCondition {
                switch (side) {
                    case 0:
                        return {BoundaryTag::inflow, post};
                    case 1:
                        return {BoundaryTag::outflow, {}};
                    case 2:
                        return x < 1.0 / 6.0 ? BoundaryCondition{BoundaryTag::post_shock, post}
                                             : BoundaryCondition{BoundaryTag::slip_wall, {}};
                    default:
                        return {BoundaryTag::slip_wall, {}};
                }
            };
            inst->mesh =
                build_mesh_2d(0.0, 4.0, 0.0, 3.0, cfg.nx, cfg.ny, false, false, nullptr, assign);
            break;
        }
    }

    inst->ops = build_reference_ops(cfg.p, inst->mesh.dim, cfg.nq, cfg.c_plus);
    inst->sensor = make_sensor_config(cfg.p, inst->ops.c_plus, cfg.kappa);
    inst->cfg = cfg;
    if (cfg.id == CaseId::leblanc)
        inst->riemann = solve_riemann(initial_prim(cfg.id, -1.0, 0.0),
                                      initial_prim(cfg.id, 1.0, 0.0), cfg.gamma);
    return inst;
}

ErrorReport error_norms(const SolutionField& field,
                        const std::function<StateVec(Real, Real)>& exact) {
    const ReferenceOperators& ops = *field.ops;
    const int ns = field.nstate;
    const int nq = ops.nq;
    ErrorReport rep;
    rep.l1 = Vector::Zero(ns);
    rep.l2 = Vector::Zero(ns);
    rep.linf = Vector::Zero(ns);

    for (int e = 0; e < field.mesh->n_elements(); ++e) {
        const Matrix uq = ops.vol_interp * field.elem[e];
        const MeshElement& el = field.mesh->elems[e];
        const Real J = field.mesh->jacobian(e);
        for (int q = 0; q < ops.n_quad(); ++q) {
            const Real xi = ops.basis.quad_nodes[q % nq];
            const Real x = el.x0 + 0.5 * (xi + 1.0) * el.hx;
            Real y = 0;
            Real w = ops.basis.quad_weights[q % nq];
            if (field.dim == 2) {
                const Real eta = ops.basis.quad_nodes[q / nq];
                y = el.y0 + 0.5 * (eta + 1.0) * el.hy;
                w *= ops.basis.quad_weights[q / nq];
            }
            const StateVec ex = exact(x, y);
            for (int s = 0; s < ns; ++s) {
                const Real err = uq(q, s) - ex[s];
                rep.l1[s] += J * w * std::abs(err);
                rep.l2[s] += J * w * err * err;
            }
        }
        // oversampled max-error estimate
        const int m = field.p + 4;
        for (int j = 0; j < (field.dim == 2 ? m : 1); ++j)
            for (int i = 0; i < m; ++i) {
                const Real x = el.x0 + el.hx * i / (m - 1.0);
                const Real y = field.dim == 2 ? el.y0 + el.hy * j / (m - 1.0) : 0.0;
                const StateVec uh = field.evaluate(e, x, y);
                const StateVec ex = exact(x, y);
                for (int s = 0; s < ns; ++s)
                    rep.linf[s] = std::max(rep.linf[s], std::abs(uh[s] - ex[s]));
            }
    }
    rep.l2 = rep.l2.cwiseSqrt();
    return rep;
}

} // namespace afr
