#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afr/euler.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

using namespace afr;

namespace {

std::mt19937 rng(20240811);

EulerPrim random_state(int dim) {
    std::uniform_real_distribution<Real> logu(-1.0, 1.0), vel(-3.0, 3.0);
    EulerPrim q;
    q.rho = std::pow(10.0, logu(rng));
    q.p = std::pow(10.0, logu(rng));
    for (int i = 0; i < dim; ++i) q.v[i] = vel(rng);
    return q;
}

} // namespace

TEST_CASE("state conversions") {
    SUBCASE("primitive-conservative round trip") {
        for (int dim : {1, 2})
            for (int i = 0; i < 200; ++i) {
                EulerPrim q = random_state(dim);
                EulerPrim r = cons_to_prim(prim_to_cons(q, dim, 1.4), dim, 1.4);
                CHECK(r.rho == doctest::Approx(q.rho).epsilon(1e-14));
                CHECK(r.p == doctest::Approx(q.p).epsilon(1e-14));
                for (int k = 0; k < dim; ++k)
                    CHECK(r.v[k] == doctest::Approx(q.v[k]).epsilon(1e-14));
            }
    }
    SUBCASE("unit state has zero specific entropy") {
        EulerPrim q{1.0, {0, 0}, 1.0};
        CHECK(specific_entropy(q, 1.4) == doctest::Approx(0.0));
    }
    SUBCASE("wavespeeds of the reference states") {
        EulerPrim quiescent{1.4, {0, 0}, 1.0};
        CHECK(wavespeed(quiescent, 2, 1.4) == doctest::Approx(1.0).epsilon(1e-14));
        EulerPrim dmr{8.0, {33.0 * std::sqrt(3.0) / 8.0, -33.0 / 8.0}, 116.5};
        CHECK(wavespeed(dmr, 2, 1.4) ==
              doctest::Approx(8.25 + std::sqrt(1.4 * 116.5 / 8.0)).epsilon(1e-14));
        CHECK(wavespeed(dmr, 2, 1.4) == doctest::Approx(12.765).epsilon(1e-4));
        EulerPrim leblanc_left{2.0, {0, 0}, 1e9};
        CHECK(wavespeed(leblanc_left, 1, 1.4) == doctest::Approx(std::sqrt(7e8)).epsilon(1e-14));
        CHECK(wavespeed(leblanc_left, 1, 1.4) == doctest::Approx(26457.513).epsilon(1e-6));
    }
}

TEST_CASE("logarithmic mean") {
    CHECK(log_mean(3.7, 3.7) == doctest::Approx(3.7).epsilon(1e-15));
    CHECK(log_mean(1.0, std::exp(1.0)) ==
          doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    SUBCASE("stable near coincident arguments") {
        for (Real a : {1e-3, 1.0, 1e6})
            for (Real d = 1e-15; d < 3e-10; d *= 10) {
                const Real lm = log_mean(a, a * (1.0 + d));
                CHECK(std::isfinite(lm));
                CHECK(std::abs(lm - a) <= 1e-10 * a);
            }
        // series branch agrees with the exact formula at the crossover
        for (Real d : {1e-5, 1e-4, 1e-3}) {
            const Real lm = log_mean(2.0, 2.0 * (1.0 + d));
            const Real exact = (2.0 * d) / std::log1p(d);
            CHECK(lm == doctest::Approx(exact).epsilon(1e-12));
        }
    }
}

TEST_CASE("two-point flux") {
    SUBCASE("consistency at the rest state") {
        EulerPrim q{1.4, {0, 0}, 1.0};
        Real f[4];
        two_point_flux(q, q, 2, 0, 1.4, f);
        CHECK(f[0] == doctest::Approx(0.0));
        CHECK(f[1] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(f[2] == doctest::Approx(0.0));
        CHECK(f[3] == doctest::Approx(0.0));
    }
    SUBCASE("symmetry and consistency on random pairs") {
        for (int dim : {1, 2})
            for (int dir = 0; dir < dim; ++dir)
                for (int i = 0; i < 1000; ++i) {
                    EulerPrim a = random_state(dim), b = random_state(dim);
                    Real fab[4], fba[4], faa[4], exact[4];
                    two_point_flux(a, b, dim, dir, 1.4, fab);
                    two_point_flux(b, a, dim, dir, 1.4, fba);
                    two_point_flux(a, a, dim, dir, 1.4, faa);
                    analytic_flux(a, dim, dir, 1.4, exact);
                    for (int s = 0; s < dim + 2; ++s) {
                        CHECK(fab[s] == doctest::Approx(fba[s]).epsilon(1e-12));
                        CHECK(faa[s] == doctest::Approx(exact[s]).epsilon(1e-12));
                    }
                }
    }
    SUBCASE("Tadmor shuffle condition") {
        for (int dim : {1, 2})
            for (int dir = 0; dir < dim; ++dir)
                for (int i = 0; i < 1000; ++i) {
                    EulerPrim a = random_state(dim), b = random_state(dim);
                    Real f[4], wa[4], wb[4];
                    two_point_flux(a, b, dim, dir, 1.4, f);
                    entropy_variables(a, dim, 1.4, wa);
                    entropy_variables(b, dim, 1.4, wb);
                    Real lhs = 0;
                    for (int s = 0; s < dim + 2; ++s) lhs += (wb[s] - wa[s]) * f[s];
                    const Real rhs = entropy_potential(b, dir) - entropy_potential(a, dir);
                    const Real scale = 1.0 + std::abs(rhs);
                    CHECK(std::abs(lhs - rhs) <= 1e-11 * scale);
                }
    }
}

TEST_CASE("entropy variables") {
    SUBCASE("inverse map round trip") {
        for (int dim : {1, 2})
            for (int i = 0; i < 200; ++i) {
                EulerPrim q = random_state(dim);
                Real w[4];
                entropy_variables(q, dim, 1.4, w);
                EulerPrim r = entropy_to_prim(w, dim, 1.4);
                CHECK(r.rho == doctest::Approx(q.rho).epsilon(1e-12));
                CHECK(r.p == doctest::Approx(q.p).epsilon(1e-12));
                for (int k = 0; k < dim; ++k)
                    CHECK(r.v[k] == doctest::Approx(q.v[k]).epsilon(1e-12));
            }
    }
}

TEST_CASE("interface flux") {
    FluxConfig cfg;
    SUBCASE("zero jump gives the analytic flux for every dissipation") {
        for (Dissipation d : {Dissipation::roe, Dissipation::llf, Dissipation::none}) {
            cfg.dissipation = d;
            for (int dim : {1, 2}) {
                EulerPrim q = random_state(dim);
                Real f[4], exact[4];
                interface_flux(q, q, dim, 0, +1, cfg, f);
                analytic_flux(q, dim, 0, 1.4, exact);
                for (int s = 0; s < dim + 2; ++s)
                    CHECK(f[s] == doctest::Approx(exact[s]).epsilon(1e-12));
            }
        }
    }
    SUBCASE("LLF coefficient on the Sod states") {
        EulerPrim L{1.0, {0, 0}, 1.0}, R{0.125, {0, 0}, 0.1};
        cfg.dissipation = Dissipation::llf;
        Real fllf[3];
        interface_flux(L, R, 1, 0, +1, cfg, fllf);
        cfg.dissipation = Dissipation::none;
        Real fec[3];
        interface_flux(L, R, 1, 0, +1, cfg, fec);
        const StateVec uL = prim_to_cons(L, 1, 1.4), uR = prim_to_cons(R, 1, 1.4);
        // f_llf = f_ec - lam/2 (uR - uL): recover lam from the density component
        const Real lam = 2.0 * (fec[0] - fllf[0]) / (uR[0] - uL[0]);
        CHECK(lam == doctest::Approx(std::sqrt(1.4)).epsilon(1e-12));
        CHECK(lam == doctest::Approx(1.1832).epsilon(1e-4));
    }
    SUBCASE("inadmissible input rejected") {
        EulerPrim ok{1.0, {0, 0}, 1.0}, bad{-1.0, {0, 0}, 1.0};
        Real f[4];
        CHECK_THROWS_AS(interface_flux(ok, bad, 1, 0, +1, cfg, f), PositivityError);
    }
}

TEST_CASE("roe dissipation") {
    FluxConfig cfg;
    SUBCASE("zero jump contributes nothing") {
        for (int dim : {1, 2}) {
            EulerPrim q = random_state(dim);
            Real d[4] = {0, 0, 0, 0};
            roe_dissipation(q, q, dim, 0, +1, cfg, d);
            for (int s = 0; s < dim + 2; ++s) CHECK(std::abs(d[s]) < 1e-13);
        }
    }
    SUBCASE("matches |A| from the flux jacobian on small jumps") {
        // |A| assembled by eigendecomposition of a finite-difference
        // jacobian is an independent route to the same operator
        cfg.roe_entropy_fix = 0.0;
        const int dim = 2, ns = 4;
        EulerPrim base{1.2, {0.4, -0.3}, 2.1}; // subsonic: |A| != A
        const StateVec u0 = prim_to_cons(base, dim, 1.4);
        const Real fd_eps = 1e-6;
        Matrix A(ns, ns);
        for (int j = 0; j < ns; ++j) {
            StateVec up = u0, um = u0;
            up[j] += fd_eps;
            um[j] -= fd_eps;
            Real fp[4], fm[4];
            analytic_flux(cons_to_prim(up, dim, 1.4), dim, 0, 1.4, fp);
            analytic_flux(cons_to_prim(um, dim, 1.4), dim, 0, 1.4, fm);
            for (int i = 0; i < ns; ++i) A(i, j) = (fp[i] - fm[i]) / (2 * fd_eps);
        }
        Eigen::EigenSolver<Matrix> es(A);
        Matrix R = es.eigenvectors().real();
        Vector lam = es.eigenvalues().real();
        Matrix absA = R * lam.cwiseAbs().asDiagonal() * R.inverse();

        // extract the implementation's D(u0) by differencing tiny jumps
        const Real jump_eps = 1e-7;
        for (int j = 0; j < ns; ++j) {
            StateVec uR = u0;
            uR[j] += jump_eps;
            Real d[4] = {0, 0, 0, 0};
            roe_dissipation(cons_to_prim(u0, dim, 1.4), cons_to_prim(uR, dim, 1.4), dim, 0, +1,
                            cfg, d);
            for (int i = 0; i < ns; ++i) {
                const Real got = 2.0 * d[i] / jump_eps;
                CHECK(std::abs(got - absA(i, j)) < 5e-4 * (1.0 + std::abs(absA(i, j))));
            }
        }
    }
    SUBCASE("entropy fix floors the acoustic eigenvalues") {
        // near-sonic state: |u - a| ~ 0, the fix must add dissipation
        cfg.roe_entropy_fix = 0.05;
        EulerPrim L{1.0, {1.1832, 0}, 1.0}, R = L;
        R.rho *= 1.02;
        Real with_fix[4] = {0, 0, 0, 0};
        roe_dissipation(L, R, 2, 0, +1, cfg, with_fix);
        cfg.roe_entropy_fix = 0.0;
        Real no_fix[4] = {0, 0, 0, 0};
        roe_dissipation(L, R, 2, 0, +1, cfg, no_fix);
        CHECK(std::abs(with_fix[0]) >= std::abs(no_fix[0]));
    }
    SUBCASE("wall-mirrored states produce zero mass flux") {
        for (Dissipation d : {Dissipation::roe, Dissipation::llf, Dissipation::none}) {
            cfg.dissipation = d;
            cfg.roe_entropy_fix = 0.05;
            for (int i = 0; i < 50; ++i) {
                EulerPrim q = random_state(2);
                EulerPrim mirror = q;
                mirror.v[0] = -q.v[0];
                Real f[4];
                interface_flux(q, mirror, 2, 0, +1, cfg, f);
                CHECK(std::abs(f[0]) < 1e-12 * (1.0 + q.rho * std::abs(q.v[0])));
            }
        }
    }
}
