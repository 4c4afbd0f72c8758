#include "afr/drivers.hpp"

#include <cmath>

namespace afr {

CaseRun run_case(const CaseConfig& cfg) {
    CaseRun out;
    out.inst = make_case(cfg);
    out.field = out.inst->initial_field();
    out.result = run_to_time(out.field, out.inst->solver(), out.inst->time());
    return out;
}

std::vector<ConvergenceRow> run_convergence(CaseConfig base, const std::vector<int>& grids) {
    std::vector<ConvergenceRow> rows;
    for (int g : grids) {
        base.nx = g;
        base.ny = 0;
        CaseRun run = run_case(base);
        if (!run.result.completed)
            throw std::runtime_error("convergence run failed at grid " + std::to_string(g) +
                                     ": " + run.result.abort_reason);
        if (!run.inst->has_exact())
            throw std::invalid_argument("convergence: case has no exact solution");
        const CaseInstance& inst = *run.inst;
        const Real t = run.field.time;
        ConvergenceRow row;
        row.grid = g;
        row.h = (inst.mesh.x_max - inst.mesh.x_min) / g;
        row.err = error_norms(run.field,
                              [&](Real x, Real y) { return inst.exact_state(x, y, t); });
        if (!rows.empty())
            row.order_l2 = std::log2(rows.back().err.density_l2() / row.err.density_l2()) /
                           std::log2(Real(g) / rows.back().grid);
        rows.push_back(std::move(row));
    }
    return rows;
}

BisectResult max_cfl_bisect(const CaseConfig& base, Real lo, Real hi, Real tol) {
    if (!(hi > lo)) throw std::invalid_argument("max_cfl_bisect: bad bracket");
    BisectResult res;
    auto attempt = [&](Real cfl) {
        CaseConfig cfg = base;
        cfg.cfl = cfl;
        cfg.log_every = 0;
        CaseRun run = run_case(cfg);
        ++res.runs;
        res.history.emplace_back(cfl, run.result.completed);
        return run.result.completed;
    };
    if (lo > 0 && !attempt(lo))
        throw std::invalid_argument("max_cfl_bisect: lower bracket fails");
    if (attempt(hi))
        throw std::invalid_argument("max_cfl_bisect: upper bracket passes; widen bracket");
    while (hi - lo > tol) {
        const Real mid = 0.5 * (lo + hi);
        if (attempt(mid))
            lo = mid;
        else
            hi = mid;
    }
    res.max_cfl = lo;
    return res;
}

std::optional<Real> probe_shock_front(const SolutionField& field, Real y_probe, Real gamma,
                                      Real p_threshold, int n) {
    const CartesianMesh& mesh = *field.mesh;
    const Real x0 = mesh.x_min, x1 = mesh.x_max;
    for (int i = n - 1; i >= 0; --i) {
        const Real x = x0 + (x1 - x0) * (i + 0.5) / n;
        const int e = mesh.locate(x, y_probe);
        if (e < 0) continue;
        StateVec u = field.evaluate(e, x, y_probe);
        if (pressure(u, field.dim, gamma) > p_threshold) return x;
    }
    return std::nullopt;
}

} // namespace afr
