#ifndef AFR_EULER_HPP
#define AFR_EULER_HPP

#include "afr/types.hpp"

#include <cmath>
#include <string>

namespace afr {

enum class Dissipation { roe, llf, none };
enum class TwoPointFlux { entropy_conserving_ra };

Dissipation dissipation_from_string(const std::string& s);
std::string to_string(Dissipation d);

/// Interface flux configuration: a symmetric entropy-conserving two-point
/// baseline plus a selectable dissipation operator.
struct FluxConfig {
    TwoPointFlux two_point = TwoPointFlux::entropy_conserving_ra;
    Dissipation dissipation = Dissipation::roe;
    Real gamma = 1.4;
    Real roe_entropy_fix = 0.05; // floor on acoustic |lambda|, fraction of |u_n|+a
};

/// Point values in primitive form. Components beyond dim are unused.
struct EulerPrim {
    Real rho = 0;
    Real v[2] = {0, 0};
    Real p = 0;
};

inline bool admissible(const EulerPrim& q) { return q.rho > 0 && q.p > 0; }

inline Real pressure(const StateVec& u, int dim, Real gamma) {
    Real ke = 0;
    for (int i = 0; i < dim; ++i) ke += u[1 + i] * u[1 + i];
    return (gamma - 1.0) * (u[dim + 1] - 0.5 * ke / u[0]);
}

inline EulerPrim cons_to_prim(const StateVec& u, int dim, Real gamma) {
    EulerPrim q;
    q.rho = u[0];
    Real ke = 0;
    for (int i = 0; i < dim; ++i) {
        q.v[i] = u[1 + i] / u[0];
        ke += u[1 + i] * q.v[i];
    }
    q.p = (gamma - 1.0) * (u[dim + 1] - 0.5 * ke);
    return q;
}

inline StateVec prim_to_cons(const EulerPrim& q, int dim, Real gamma) {
    StateVec u(dim + 2);
    u[0] = q.rho;
    Real v2 = 0;
    for (int i = 0; i < dim; ++i) {
        u[1 + i] = q.rho * q.v[i];
        v2 += q.v[i] * q.v[i];
    }
    u[dim + 1] = q.p / (gamma - 1.0) + 0.5 * q.rho * v2;
    return u;
}

inline Real sound_speed(const EulerPrim& q, Real gamma) {
    return std::sqrt(gamma * q.p / q.rho);
}

/// max(|v| + a) ingredient for the CFL estimate.
inline Real wavespeed(const EulerPrim& q, int dim, Real gamma) {
    Real v2 = 0;
    for (int i = 0; i < dim; ++i) v2 += q.v[i] * q.v[i];
    return std::sqrt(v2) + sound_speed(q, gamma);
}

/// Specific entropy s = ln(p rho^-gamma).
inline Real specific_entropy(const EulerPrim& q, Real gamma) {
    return std::log(q.p) - gamma * std::log(q.rho);
}

/// Mathematical entropy S = -rho s / (gamma - 1).
inline Real entropy_density(const EulerPrim& q, Real gamma) {
    return -q.rho * specific_entropy(q, gamma) / (gamma - 1.0);
}

/// Logarithmic mean (b - a)/(ln b - ln a) with the series branch of
/// Ismail and Roe engaged near a = b to avoid cancellation.
inline Real log_mean(Real a, Real b) {
    const Real zeta = a / b;
    const Real f = (zeta - 1.0) / (zeta + 1.0);
    const Real u = f * f;
    Real F;
    if (u < 1e-8)
        F = 1.0 + u / 3.0 + u * u / 5.0 + u * u * u / 7.0;
    else
        F = std::log(zeta) / (2.0 * f);
    return (a + b) / (2.0 * F);
}

/// Entropy-conserving, kinetic-energy- and pressure-equilibrium-
/// preserving two-point flux of Ranocha, Cartesian direction dir.
/// Symmetric and consistent; satisfies the Tadmor shuffle condition.
inline void two_point_flux(const EulerPrim& L, const EulerPrim& R, int dim, int dir,
                           Real gamma, Real* f) {
    const Real rho_log = log_mean(L.rho, R.rho);
    const Real rho_p_log = log_mean(L.rho / L.p, R.rho / R.p);
    const Real p_avg = 0.5 * (L.p + R.p);
    Real v_avg[2] = {0, 0};
    Real v_prod = 0; // 0.5 * (vL . vR)
    for (int i = 0; i < dim; ++i) {
        v_avg[i] = 0.5 * (L.v[i] + R.v[i]);
        v_prod += 0.5 * L.v[i] * R.v[i];
    }
    const Real f_rho = rho_log * v_avg[dir];
    f[0] = f_rho;
    for (int i = 0; i < dim; ++i) f[1 + i] = f_rho * v_avg[i];
    f[1 + dir] += p_avg;
    f[dim + 1] = f_rho * (v_prod + 1.0 / ((gamma - 1.0) * rho_p_log)) +
                 0.5 * (L.p * R.v[dir] + R.p * L.v[dir]);
}

/// Analytic flux f(u) . e_dir.
inline void analytic_flux(const EulerPrim& q, int dim, int dir, Real gamma, Real* f) {
    Real v2 = 0;
    for (int i = 0; i < dim; ++i) v2 += q.v[i] * q.v[i];
    const Real E = q.p / (gamma - 1.0) + 0.5 * q.rho * v2;
    f[0] = q.rho * q.v[dir];
    for (int i = 0; i < dim; ++i) f[1 + i] = q.rho * q.v[dir] * q.v[i];
    f[1 + dir] += q.p;
    f[dim + 1] = (E + q.p) * q.v[dir];
}

/// Entropy variables w = dS/du for S = -rho s/(gamma-1).
inline void entropy_variables(const EulerPrim& q, int dim, Real gamma, Real* w) {
    const Real s = specific_entropy(q, gamma);
    Real v2 = 0;
    for (int i = 0; i < dim; ++i) v2 += q.v[i] * q.v[i];
    w[0] = (gamma - s) / (gamma - 1.0) - 0.5 * q.rho * v2 / q.p;
    for (int i = 0; i < dim; ++i) w[1 + i] = q.rho * q.v[i] / q.p;
    w[dim + 1] = -q.rho / q.p;
}

/// Entropy flux potential psi = rho v_dir.
inline Real entropy_potential(const EulerPrim& q, int dir) { return q.rho * q.v[dir]; }

/// Invert the entropy-variable map. Requires w[dim+1] < 0.
inline EulerPrim entropy_to_prim(const Real* w, int dim, Real gamma) {
    EulerPrim q;
    const Real k = -w[dim + 1]; // rho / p
    Real v2 = 0;
    for (int i = 0; i < dim; ++i) {
        q.v[i] = w[1 + i] / k;
        v2 += q.v[i] * q.v[i];
    }
    const Real s = gamma - (gamma - 1.0) * (w[0] + 0.5 * k * v2);
    q.rho = std::pow(k * std::exp(s), 1.0 / (1.0 - gamma));
    q.p = q.rho / k;
    return q;
}

/// Numerical interface flux dotted with the outward normal sign*e_dir:
/// the entropy-conserving two-point baseline minus dissipation.
/// L is the interior state. Both states must be admissible.
void interface_flux(const EulerPrim& L, const EulerPrim& R, int dim, int dir, int sign,
                    const FluxConfig& cfg, Real* f);

/// Roe dissipation 0.5 |A(u_roe)| (uR - uL) with an entropy-fix floor on
/// the acoustic eigenvalues. Throws PositivityError on a failed average.
void roe_dissipation(const EulerPrim& L, const EulerPrim& R, int dim, int dir, int sign,
                     const FluxConfig& cfg, Real* diss);

} // namespace afr

#endif
