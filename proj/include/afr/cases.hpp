#ifndef AFR_CASES_HPP
#define AFR_CASES_HPP

#include "afr/field.hpp"
#include "afr/riemann_exact.hpp"
#include "afr/time_march.hpp"

#include <functional>
#include <memory>

namespace afr {

enum class CaseId { gaussian_pulse, leblanc, shock_diffraction, dmr };

CaseId case_from_string(const std::string& s);
std::string to_string(CaseId id);

/// Complete run description for one benchmark configuration; zeros and
/// negative values select the per-case defaults.
struct CaseConfig {
    CaseId id = CaseId::gaussian_pulse;
    int p = 3;
    int nx = 0, ny = 0;
    int nq = 0;
    Scheme scheme = Scheme::afr;
    Real cfl = 0.4;
    Real t_final = -1;
    Real gamma = 1.4;
    Dissipation dissipation = Dissipation::roe;
    bool limiter_enabled = true;
    Real eps_pos = 1e-13;
    Real kappa = 1.0;
    Real c_plus = 0;
    SensorUpdate sensor_update = SensorUpdate::step;
    CflMode cfl_mode = CflMode::adaptive;
    long max_steps = 100000000;
    int log_every = 1;
    Real sigma = 500.0; // pulse strength
};

/// Pointwise initial condition in primitive form.
EulerPrim initial_prim(CaseId id, Real x, Real y, Real sigma = 500.0);

/// A constructed case: mesh, operators and configuration bound together.
/// Addresses are stable (fields reference mesh and operators).
struct CaseInstance {
    CaseConfig cfg;
    CartesianMesh mesh;
    ReferenceOperators ops;
    SensorConfig sensor;
    RiemannSolution riemann; // Leblanc exact solution star state

    SolverSetup solver() const;
    TimeConfig time() const;
    SolutionField initial_field() const;

    bool has_exact() const {
        return cfg.id == CaseId::gaussian_pulse || cfg.id == CaseId::leblanc;
    }
    EulerPrim exact_prim(Real x, Real y, Real t) const;
    StateVec exact_state(Real x, Real y, Real t) const;
};

std::unique_ptr<CaseInstance> make_case(const CaseConfig& cfg);

struct ErrorReport {
    Vector l1, l2, linf; // one entry per conservative component
    Real density_l1() const { return l1[0]; }
    Real density_l2() const { return l2[0]; }
    Real density_linf() const { return linf[0]; }
};

/// Quadrature-weighted L1/L2 error integrals plus an L-infinity estimate
/// over an oversampled per-element node set, against a pointwise exact
/// solution.
ErrorReport error_norms(const SolutionField& field,
                        const std::function<StateVec(Real, Real)>& exact);

} // namespace afr

#endif
