#include "afr/time_march.hpp"

#include <cmath>
#include <sstream>

namespace afr {

Real compute_dt(const SolutionField& field, const TimeConfig& cfg, Real lambda_max,
                Real t_remaining) {
    if (!(lambda_max > 0)) throw std::invalid_argument("compute_dt: lambda_max must be > 0");
    const long dof = static_cast<long>(field.mesh->n_elements()) *
                     ReferenceOperators::ipow(field.p + 1, field.dim);
    const Real extent = field.mesh->x_max - field.mesh->x_min;
    const Real dx = extent / std::pow(Real(dof), 1.0 / field.dim);
    const Real dt = cfg.cfl * dx / lambda_max;
    return std::min(dt, t_remaining);
}

namespace {

void axpy_stage(SolutionField& out, const SolutionField& base, Real coef,
                const SolutionField& incr_state, const SolutionField& k, Real dt) {
    // out = base + coef * ((incr_state - base) + dt * k)
    for (size_t e = 0; e < out.elem.size(); ++e)
        out.elem[e] = base.elem[e] +
                      coef * ((incr_state.elem[e] - base.elem[e]) + dt * k.elem[e]);
}

} // namespace

RunResult run_to_time(SolutionField& field, const SolverSetup& setup, const TimeConfig& cfg) {
    RunResult result;
    ResidualWorkspace ws;
    SolutionField k = SolutionField::zeros(*field.mesh, *field.ops);
    SolutionField u1 = k, u2 = k;
    const Real gamma = setup.flux.gamma;

    long step = 0;
    int stage = 0;
    try {
        limit_field(field, setup.limiter, gamma);
        result.initial_wavespeed = max_wavespeed(field, gamma);
        Real lambda = result.initial_wavespeed;
        CParameterField c_field = update_c_field(field, setup.scheme, setup.sensor, gamma);

        while (field.time < cfg.t_final - 1e-14 * cfg.t_final) {
            if (step >= cfg.max_steps) {
                result.abort_reason = "step guard exceeded";
                result.steps = step;
                result.final_time = field.time;
                return result;
            }
            if (cfg.cfl_mode == CflMode::adaptive) lambda = max_wavespeed(field, gamma);
            const Real dt = compute_dt(field, cfg, lambda, cfg.t_final - field.time);

            if (cfg.sensor_update == SensorUpdate::step)
                c_field = update_c_field(field, setup.scheme, setup.sensor, gamma);

            LimiterStats lstats;
            auto stage_rhs = [&](const SolutionField& u) -> const SolutionField& {
                if (cfg.sensor_update == SensorUpdate::stage)
                    c_field = update_c_field(u, setup.scheme, setup.sensor, gamma);
                compute_residual(u, c_field, setup.flux, k, ws);
                return k;
            };

            stage = 1;
            axpy_stage(u1, field, 1.0, field, stage_rhs(field), dt);
            limit_field(u1, setup.limiter, gamma, &lstats);
            u1.time = field.time + dt;

            stage = 2;
            axpy_stage(u2, field, 0.25, u1, stage_rhs(u1), dt);
            limit_field(u2, setup.limiter, gamma, &lstats);
            u2.time = field.time + 0.5 * dt;

            stage = 3;
            axpy_stage(field, field, 2.0 / 3.0, u2, stage_rhs(u2), dt);
            limit_field(field, setup.limiter, gamma, &lstats);
            field.time += dt;
            ++step;

            if (cfg.log_every > 0 && (step % cfg.log_every == 0)) {
                StepRecord rec;
                rec.step = step;
                rec.t = field.time;
                rec.dt = dt;
                rec.totals = conserved_totals(field);
                rec.entropy = total_entropy(field, gamma);
                rec.limiter_hits = lstats.total();
                rec.max_c = 0;
                for (Real c : c_field) rec.max_c = std::max(rec.max_c, c);
                result.log.push_back(rec);
            }
            for (const auto& block : field.elem)
                if (!block.allFinite()) throw PositivityError("non-finite state", -1, step, stage);
        }
        result.final_c = update_c_field(field, setup.scheme, setup.sensor, gamma);
        result.completed = true;
        result.steps = step;
        result.final_time = field.time;
    } catch (const PositivityError& err) {
        std::ostringstream os;
        os << "positivity abort: " << err.what() << " (element " << err.element << ", step "
           << step << ", stage " << stage << ", t " << field.time << ")";
        result.abort_reason = os.str();
        result.steps = step;
        result.final_time = field.time;
    }
    return result;
}

} // namespace afr
