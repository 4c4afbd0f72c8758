#ifndef AFR_TIME_MARCH_HPP
#define AFR_TIME_MARCH_HPP

#include "afr/limiter.hpp"
#include "afr/residual.hpp"
#include "afr/sensor.hpp"

#include <string>
#include <vector>

namespace afr {

enum class CflMode { initial, adaptive };
enum class SensorUpdate { step, stage };

struct TimeConfig {
    Real cfl = 0.4;
    Real t_final = 1.0;
    CflMode cfl_mode = CflMode::adaptive;
    SensorUpdate sensor_update = SensorUpdate::step;
    long max_steps = 100000000;
    int log_every = 1;
};

/// Convective step size dt = CFL * dx_tilde / lambda_max with the
/// approximate grid spacing dx_tilde = extent_x / DOF^(1/dim); the last
/// step is clipped to land exactly on the final time.
Real compute_dt(const SolutionField& field, const TimeConfig& cfg, Real lambda_max,
                Real t_remaining);

/// One Shu-Osher SSPRK3 step of an ODE state. Written in increment form
/// so a zero right-hand side leaves the state bitwise unchanged.
template <class T, class Rhs>
T ssprk3_step(const T& u, Real dt, Rhs&& rhs) {
    T u1 = u + dt * rhs(u);
    T u2 = u + 0.25 * ((u1 - u) + dt * rhs(u1));
    return u + (2.0 / 3.0) * ((u2 - u) + dt * rhs(u2));
}

struct StepRecord {
    long step = 0;
    Real t = 0, dt = 0;
    StateVec totals;     // conserved integrals
    Real entropy = 0;
    long limiter_hits = 0;
    Real max_c = 0;
};

struct RunResult {
    bool completed = false;
    std::string abort_reason;
    long steps = 0;
    Real final_time = 0;
    Real initial_wavespeed = 0;
    CParameterField final_c;
    std::vector<StepRecord> log;
};

struct SolverSetup {
    Scheme scheme = Scheme::afr;
    SensorConfig sensor;
    FluxConfig flux;
    LimiterConfig limiter;
};

/// Advance the field to the configured final time with SSPRK3, limiting
/// after every stage and refreshing the sensor per the update policy.
/// A positivity failure aborts the run (completed = false) with the
/// failing element, step and stage recorded in abort_reason.
RunResult run_to_time(SolutionField& field, const SolverSetup& setup, const TimeConfig& cfg);

} // namespace afr

#endif
