#ifndef AFR_LIMITER_HPP
#define AFR_LIMITER_HPP

#include "afr/field.hpp"
#include "afr/types.hpp"

namespace afr {

struct LimiterConfig {
    bool enabled = true;
    Real eps_pos = 1e-13; // absolute positivity floor for density and pressure
};

struct LimiterStats {
    long density_activations = 0;
    long pressure_activations = 0;
    long total() const { return density_activations + pressure_activations; }
};

/// Zhang-Shu squeeze toward the cell average enforcing positive density
/// and pressure at the volume and facet quadrature points. The pressure
/// stage uses the linear secant bound (Wang variant), which is safe by
/// concavity of pressure along the squeeze path. Cell averages are
/// preserved. Returns true if the element was modified. Throws
/// PositivityError when the cell average itself is inadmissible.
bool limit_element(Matrix& u, const ReferenceOperators& ops, const LimiterConfig& cfg,
                   Real gamma, int elem_id, LimiterStats* stats = nullptr);

/// Apply the limiter to every element of the field.
void limit_field(SolutionField& field, const LimiterConfig& cfg, Real gamma,
                 LimiterStats* stats = nullptr);

} // namespace afr

#endif
