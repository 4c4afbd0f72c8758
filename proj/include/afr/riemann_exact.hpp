#ifndef AFR_RIEMANN_EXACT_HPP
#define AFR_RIEMANN_EXACT_HPP

#include "afr/euler.hpp"

namespace afr {

/// Star-region state of the 1D Riemann problem, found by Newton
/// iteration on the pressure function (Toro's formulation) with a
/// two-rarefaction initial guess and vacuum guards.
struct RiemannSolution {
    Real p_star = 0;
    Real u_star = 0;
    Real rho_star_l = 0;
    Real rho_star_r = 0;
    int iterations = 0;
    Real residual = 0; // |f(p*)| at convergence
};

RiemannSolution solve_riemann(const EulerPrim& left, const EulerPrim& right, Real gamma);

/// Sample the self-similar solution at xi = x/t (1D states).
EulerPrim sample_riemann(const RiemannSolution& sol, const EulerPrim& left,
                         const EulerPrim& right, Real gamma, Real xi);

} // namespace afr

#endif
