#ifndef AFR_RESIDUAL_HPP
#define AFR_RESIDUAL_HPP

#include "afr/field.hpp"
#include "afr/sensor.hpp"

#include <vector>

namespace afr {

/// Scratch buffers reused across residual evaluations. The entropy-
/// projected point states and the single-valued face fluxes of the last
/// evaluation remain readable (used by conservation diagnostics).
struct ResidualWorkspace {
    std::vector<EulerPrim> vol_states;  // element-major, n_quad per element
    std::vector<EulerPrim> face_states; // element-major, 2*dim*nfp per element
    std::vector<Real> face_flux;        // face-major, nfp*nstate; normal +e_dir of elem_l
    Matrix uq, vq, vhat, vtilde, rq, rnodal;
    std::vector<Matrix> rf;
    std::vector<Real> line_acc;
    std::vector<const EulerPrim*> line_states;
};

/// Full semi-discrete right-hand side du/dt: two-point-flux volume term
/// contracted through the hybridized skew operator, facet numerical
/// fluxes, and the c-dependent modified mass inverse. Point states are
/// entropy-projected so the discrete entropy identity holds with the
/// entropy-conserving two-point flux. Deterministic arithmetic order.
/// Throws PositivityError (with element id) on inadmissible states.
void compute_residual(const SolutionField& field, const CParameterField& c_field,
                      const FluxConfig& cfg, SolutionField& dudt, ResidualWorkspace& ws);

} // namespace afr

#endif
