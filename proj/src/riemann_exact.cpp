#include "afr/riemann_exact.hpp"

#include <cmath>

namespace afr {

namespace {

// pressure function for one side and its derivative (Toro ch. 4)
void side_function(Real p, const EulerPrim& q, Real gamma, Real& f, Real& df) {
    const Real a = std::sqrt(gamma * q.p / q.rho);
    if (p > q.p) { // shock
        const Real A = 2.0 / ((gamma + 1.0) * q.rho);
        const Real B = (gamma - 1.0) / (gamma + 1.0) * q.p;
        const Real root = std::sqrt(A / (p + B));
        f = (p - q.p) * root;
        df = root * (1.0 - 0.5 * (p - q.p) / (p + B));
    } else { // rarefaction
        const Real pr = p / q.p;
        f = 2.0 * a / (gamma - 1.0) * (std::pow(pr, (gamma - 1.0) / (2.0 * gamma)) - 1.0);
        df = std::pow(pr, -(gamma + 1.0) / (2.0 * gamma)) / (q.rho * a);
    }
}

} // namespace

RiemannSolution solve_riemann(const EulerPrim& L, const EulerPrim& R, Real gamma) {
    if (!admissible(L) || !admissible(R))
        throw std::invalid_argument("solve_riemann: inadmissible input state");
    const Real aL = std::sqrt(gamma * L.p / L.rho);
    const Real aR = std::sqrt(gamma * R.p / R.rho);
    const Real du = R.v[0] - L.v[0];
    if (2.0 * aL / (gamma - 1.0) + 2.0 * aR / (gamma - 1.0) <= du)
        throw std::domain_error("solve_riemann: vacuum generated");

    // two-rarefaction initial guess, robust across extreme ratios
    const Real z = (gamma - 1.0) / (2.0 * gamma);
    Real p = std::pow((aL + aR - 0.5 * (gamma - 1.0) * du) /
                          (aL / std::pow(L.p, z) + aR / std::pow(R.p, z)),
                      1.0 / z);
    p = std::max(p, 1e-14 * std::min(L.p, R.p));

    RiemannSolution sol;
    Real f = 0, df = 0;
    for (int it = 0; it < 200; ++it) {
        Real fL, dfL, fR, dfR;
        side_function(p, L, gamma, fL, dfL);
        side_function(p, R, gamma, fR, dfR);
        f = fL + fR + du;
        df = dfL + dfR;
        Real dp = -f / df;
        // keep the iterate positive
        if (p + dp <= 0) dp = -0.9 * p;
        p += dp;
        sol.iterations = it + 1;
        if (std::abs(dp) <= 1e-14 * p) break;
    }
    {
        Real fL, dfL, fR, dfR;
        side_function(p, L, gamma, fL, dfL);
        side_function(p, R, gamma, fR, dfR);
        sol.residual = std::abs(fL + fR + du);
        sol.p_star = p;
        sol.u_star = 0.5 * (L.v[0] + R.v[0]) + 0.5 * (fR - fL);
    }
    const Real gm = (gamma - 1.0) / (gamma + 1.0);
    sol.rho_star_l = (sol.p_star > L.p)
                         ? L.rho * (sol.p_star / L.p + gm) / (gm * sol.p_star / L.p + 1.0)
                         : L.rho * std::pow(sol.p_star / L.p, 1.0 / gamma);
    sol.rho_star_r = (sol.p_star > R.p)
                         ? R.rho * (sol.p_star / R.p + gm) / (gm * sol.p_star / R.p + 1.0)
                         : R.rho * std::pow(sol.p_star / R.p, 1.0 / gamma);
    return sol;
}

EulerPrim sample_riemann(const RiemannSolution& sol, const EulerPrim& L, const EulerPrim& R,
                         Real gamma, Real xi) {
    const Real aL = std::sqrt(gamma * L.p / L.rho);
    const Real aR = std::sqrt(gamma * R.p / R.rho);
    EulerPrim q;
    if (xi <= sol.u_star) { // left of contact
        if (sol.p_star > L.p) { // left shock
            const Real sL = L.v[0] - aL * std::sqrt((gamma + 1.0) / (2.0 * gamma) * sol.p_star / L.p +
                                                    (gamma - 1.0) / (2.0 * gamma));
            if (xi <= sL) return L;
            q.rho = sol.rho_star_l;
            q.v[0] = sol.u_star;
            q.p = sol.p_star;
            return q;
        }
        const Real a_star = aL * std::pow(sol.p_star / L.p, (gamma - 1.0) / (2.0 * gamma));
        const Real head = L.v[0] - aL;
        const Real tail = sol.u_star - a_star;
        if (xi <= head) return L;
        if (xi >= tail) {
            q.rho = sol.rho_star_l;
            q.v[0] = sol.u_star;
            q.p = sol.p_star;
            return q;
        }
        const Real a = (2.0 * aL + (gamma - 1.0) * (L.v[0] - xi)) / (gamma + 1.0);
        q.v[0] = xi + a;
        q.rho = L.rho * std::pow(a / aL, 2.0 / (gamma - 1.0));
        q.p = L.p * std::pow(a / aL, 2.0 * gamma / (gamma - 1.0));
        return q;
    }
    // right of contact (mirror)
    if (sol.p_star > R.p) { // right shock
        const Real sR = R.v[0] + aR * std::sqrt((gamma + 1.0) / (2.0 * gamma) * sol.p_star / R.p +
                                                (gamma - 1.0) / (2.0 * gamma));
        if (xi >= sR) return R;
        q.rho = sol.rho_star_r;
        q.v[0] = sol.u_star;
        q.p = sol.p_star;
        return q;
    }
    const Real a_star = aR * std::pow(sol.p_star / R.p, (gamma - 1.0) / (2.0 * gamma));
    const Real head = R.v[0] + aR;
    const Real tail = sol.u_star + a_star;
    if (xi >= head) return R;
    if (xi <= tail) {
        q.rho = sol.rho_star_r;
        q.v[0] = sol.u_star;
        q.p = sol.p_star;
        return q;
    }
    const Real a = (2.0 * aR - (gamma - 1.0) * (R.v[0] - xi)) / (gamma + 1.0);
    q.v[0] = xi - a;
    q.rho = R.rho * std::pow(a / aR, 2.0 / (gamma - 1.0));
    q.p = R.p * std::pow(a / aR, 2.0 * gamma / (gamma - 1.0));
    return q;
}

} // namespace afr
