#ifndef AFR_SENSOR_HPP
#define AFR_SENSOR_HPP

#include "afr/reference_ops.hpp"
#include "afr/types.hpp"

#include <vector>

namespace afr {

enum class Scheme { dg, fr, afr };

Scheme scheme_from_string(const std::string& s);
std::string to_string(Scheme s);

/// Per-element FR correction parameter, c in [0, c_plus]; all zeros for
/// dg, all c_plus for fr, sensor-scaled for afr.
using CParameterField = std::vector<Real>;

struct SensorConfig {
    Real kappa = 1.0;   // smoothing half-width of the blend
    Real c_plus = 0;    // maximum FR parameter for the active degree
    Real s0 = 0;        // threshold center, -4 log10(p)
};

SensorConfig make_sensor_config(int p, Real c_plus, Real kappa = 1.0);

/// Modal decay indicator: fraction of modal energy carried by the modes
/// of maximal per-direction degree p (the outer shell of the
/// tensor-product modal table). Returns a value in [0, 1]; 0 for an
/// identically-zero element.
Real modal_sensor(const Vector& nodal_values, const ReferenceOperators& ops);

/// Map the sensor output through the smoothed threshold function:
/// 0 below s0-kappa, 1 above s0+kappa, sine blend between, evaluated on
/// s_e = log10(S_e). Continuous and monotone, range exactly [0, 1].
Real smooth_scale(Real Se, const SensorConfig& cfg);

struct SolutionField;

/// Per-element c values for the requested scheme. For afr this runs the
/// modal sensor on density. Throws PositivityError if a nodal state is
/// inadmissible.
CParameterField update_c_field(const SolutionField& field, Scheme scheme,
                               const SensorConfig& cfg, Real gamma);

} // namespace afr

#endif
