#ifndef AFR_IO_HPP
#define AFR_IO_HPP

#include "afr/drivers.hpp"

#include <string>

namespace afr {

/// 1D profile at the solution nodes: columns x, rho, P, c.
void write_profile_csv(const std::string& path, const SolutionField& field,
                       const CParameterField& c_field, Real gamma);

/// Solution sampled along a straight line by element-local basis
/// evaluation: columns s, x, y, rho, P, c (s = arc parameter in [0,1]).
void write_line_csv(const std::string& path, const SolutionField& field,
                    const CParameterField& c_field, Real gamma, Real x0, Real y0, Real x1,
                    Real y1, int n);

/// Legacy-format structured-grid dump over the underlying lattice with
/// per-cell density average, FR parameter and domain mask.
void write_structured_vtk(const std::string& path, const SolutionField& field,
                          const CParameterField& c_field);

void write_convergence_csv(const std::string& path, const std::string& scheme,
                           const std::vector<ConvergenceRow>& rows);

/// Run log as newline-delimited JSON records.
void write_run_log(const std::string& path, const RunResult& result);

/// Dump the dense reference operators as CSV files for inspection.
void dump_operators_csv(const std::string& dir, const ReferenceOperators& ops);

} // namespace afr

#endif
