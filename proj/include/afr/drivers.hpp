#ifndef AFR_DRIVERS_HPP
#define AFR_DRIVERS_HPP

#include "afr/cases.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace afr {

/// One completed benchmark run; the instance keeps the mesh and
/// operators the final field refers to alive.
struct CaseRun {
    std::unique_ptr<CaseInstance> inst;
    SolutionField field;
    RunResult result;
};

CaseRun run_case(const CaseConfig& cfg);

struct ConvergenceRow {
    int grid = 0;
    Real h = 0;
    ErrorReport err;
    Real order_l2 = 0; // observed density order vs previous grid
};

/// Run the grid ladder for one case/scheme; observed orders are
/// log2(e_coarse / e_fine) for grid-doubling sequences.
std::vector<ConvergenceRow> run_convergence(CaseConfig base, const std::vector<int>& grids);

struct BisectResult {
    Real max_cfl = 0;
    int runs = 0;
    std::vector<std::pair<Real, bool>> history; // (cfl, completed)
};

/// Bisect on run-to-completion between a passing lower and failing upper
/// CFL bracket; reports the largest passing value within tol.
/// Throws if the upper bracket completes (widen the bracket).
BisectResult max_cfl_bisect(const CaseConfig& base, Real lo, Real hi, Real tol);

/// Rightmost position along the horizontal line y = y_probe where the
/// pressure first exceeds threshold (scanning from the right); used to
/// locate the incident shock front. Sampled at n points.
std::optional<Real> probe_shock_front(const SolutionField& field, Real y_probe,
                                      Real gamma, Real p_threshold, int n = 2048);

} // namespace afr

#endif
