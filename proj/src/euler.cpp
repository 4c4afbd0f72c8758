#include "afr/euler.hpp"

namespace afr {

Dissipation dissipation_from_string(const std::string& s) {
    if (s == "roe") return Dissipation::roe;
    if (s == "llf") return Dissipation::llf;
    if (s == "none") return Dissipation::none;
    throw std::invalid_argument("unknown dissipation '" + s + "' (roe|llf|none)");
}

std::string to_string(Dissipation d) {
    switch (d) {
        case Dissipation::roe: return "roe";
        case Dissipation::llf: return "llf";
        default: return "none";
    }
}

void roe_dissipation(const EulerPrim& L, const EulerPrim& R, int dim, int dir, int sign,
                     const FluxConfig& cfg, Real* diss) {
    const Real gamma = cfg.gamma;
    const int nstate = dim + 2;

    const Real sqL = std::sqrt(L.rho), sqR = std::sqrt(R.rho);
    const Real wsum = sqL + sqR;
    Real vbar[2] = {0, 0};
    Real v2L = 0, v2R = 0;
    for (int i = 0; i < dim; ++i) {
        vbar[i] = (sqL * L.v[i] + sqR * R.v[i]) / wsum;
        v2L += L.v[i] * L.v[i];
        v2R += R.v[i] * R.v[i];
    }
    const Real HL = (L.p * gamma / (gamma - 1.0)) / L.rho + 0.5 * v2L;
    const Real HR = (R.p * gamma / (gamma - 1.0)) / R.rho + 0.5 * v2R;
    const Real Hbar = (sqL * HL + sqR * HR) / wsum;
    Real v2bar = 0;
    for (int i = 0; i < dim; ++i) v2bar += vbar[i] * vbar[i];
    const Real a2 = (gamma - 1.0) * (Hbar - 0.5 * v2bar);
    if (!(a2 > 0))
        throw PositivityError("roe_dissipation: negative averaged enthalpy", -1);
    const Real a = std::sqrt(a2);
    const Real rho_bar = sqL * sqR;

    // work in the frame of the outward normal sign*e_dir
    const int tdir = dim == 2 ? 1 - dir : -1;
    const Real un = sign * vbar[dir];
    const Real ut = dim == 2 ? vbar[tdir] : 0.0;
    const Real dp = R.p - L.p;
    const Real drho = R.rho - L.rho;
    const Real dun = sign * (R.v[dir] - L.v[dir]);
    const Real dut = dim == 2 ? (R.v[tdir] - L.v[tdir]) : 0.0;

    Real lam1 = std::abs(un - a), lam2 = std::abs(un), lam3 = std::abs(un + a);
    const Real floor_ac = cfg.roe_entropy_fix * (std::abs(un) + a);
    lam1 = std::max(lam1, floor_ac);
    lam3 = std::max(lam3, floor_ac);

    const Real alpha1 = (dp - rho_bar * a * dun) / (2.0 * a2);
    const Real alpha2 = drho - dp / a2;
    const Real alpha3 = (dp + rho_bar * a * dun) / (2.0 * a2);
    const Real alpha4 = rho_bar * dut;

    // eigenvectors in the rotated frame (rho, m_n, m_t, E)
    Real out[4] = {0, 0, 0, 0};
    auto add = [&](Real lam_alpha, Real k0, Real kn, Real kt, Real kE) {
        out[0] += lam_alpha * k0;
        out[1] += lam_alpha * kn;
        out[2] += lam_alpha * kt;
        out[3] += lam_alpha * kE;
    };
    add(lam1 * alpha1, 1.0, un - a, ut, Hbar - un * a);
    add(lam2 * alpha2, 1.0, un, ut, 0.5 * v2bar);
    add(lam3 * alpha3, 1.0, un + a, ut, Hbar + un * a);
    if (dim == 2) add(lam2 * alpha4, 0.0, 0.0, 1.0, ut);

    diss[0] = 0.5 * out[0];
    diss[1 + dir] = 0.5 * sign * out[1];
    if (dim == 2) diss[1 + tdir] = 0.5 * out[2];
    diss[nstate - 1] = 0.5 * out[3];
}

void interface_flux(const EulerPrim& L, const EulerPrim& R, int dim, int dir, int sign,
                    const FluxConfig& cfg, Real* f) {
    if (!admissible(L) || !admissible(R))
        throw PositivityError("interface_flux: inadmissible state", -1);
    const int nstate = dim + 2;
    two_point_flux(L, R, dim, dir, cfg.gamma, f);
    if (sign < 0)
        for (int s = 0; s < nstate; ++s) f[s] = -f[s];

    if (cfg.dissipation == Dissipation::none) return;

    if (cfg.dissipation == Dissipation::llf) {
        const Real lam = std::max(std::abs(L.v[dir]) + sound_speed(L, cfg.gamma),
                                  std::abs(R.v[dir]) + sound_speed(R, cfg.gamma));
        const StateVec uL = prim_to_cons(L, dim, cfg.gamma);
        const StateVec uR = prim_to_cons(R, dim, cfg.gamma);
        for (int s = 0; s < nstate; ++s) f[s] -= 0.5 * lam * (uR[s] - uL[s]);
        return;
    }

    Real diss[4] = {0, 0, 0, 0};
    roe_dissipation(L, R, dim, dir, sign, cfg, diss);
    for (int s = 0; s < nstate; ++s) f[s] -= diss[s];
}

} // namespace afr
