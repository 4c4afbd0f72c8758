#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "afr/cases.hpp"
#include "afr/residual.hpp"

#include <cmath>
#include <cstring>
#include <random>

using namespace afr;

namespace {

std::mt19937 rng(3103);

void fill_uniform(SolutionField& f, const EulerPrim& q) {
    StateVec u = prim_to_cons(q, f.dim, 1.4);
    for (auto& e : f.elem)
        for (Eigen::Index i = 0; i < e.rows(); ++i) e.row(i) = u.transpose();
}

// smooth admissible field from low modes only
void fill_smooth_random(SolutionField& f, Real wiggle = 0.1) {
    std::uniform_real_distribution<Real> unit(-1.0, 1.0);
    for (int e = 0; e < f.mesh->n_elements(); ++e) {
        Matrix coords = f.node_coords(e);
        for (Eigen::Index i = 0; i < coords.rows(); ++i) {
            const Real x = coords(i, 0);
            const Real y = f.dim == 2 ? coords(i, 1) : 0.0;
            EulerPrim q;
            q.rho = 2.0 + wiggle * std::sin(2 * std::numbers::pi * x) +
                    0.5 * wiggle * std::cos(2 * std::numbers::pi * y);
            q.v[0] = 0.4 + wiggle * std::cos(2 * std::numbers::pi * (x + y));
            q.v[1] = f.dim == 2 ? -0.2 + wiggle * std::sin(2 * std::numbers::pi * y) : 0.0;
            q.p = 1.5 + wiggle * std::sin(2 * std::numbers::pi * (x - y));
            f.elem[e].row(i) = prim_to_cons(q, f.dim, 1.4).transpose();
        }
    }
}

CParameterField random_c_field(const SolutionField& f, Real c_plus) {
    std::uniform_real_distribution<Real> unit(0.0, 1.0);
    CParameterField c(f.mesh->n_elements());
    for (auto& v : c) v = unit(rng) * c_plus;
    return c;
}

} // namespace

TEST_CASE("free-stream preservation") {
    FluxConfig cfg;
    const EulerPrim stream{1.4, {0.3, -0.2}, 1.0};

    SUBCASE("single periodic element, both dimensions") {
        for (int dim : {1, 2}) {
            ReferenceOperators ops = build_reference_ops(3, dim);
            CartesianMesh mesh = dim == 1
                                     ? build_mesh_1d(0.0, 1.0, 1, true)
                                     : build_mesh_2d(0, 1, 0, 1, 1, 1, true, true);
            SolutionField f = SolutionField::zeros(mesh, ops);
            fill_uniform(f, stream);
            SolutionField dudt = SolutionField::zeros(mesh, ops);
            ResidualWorkspace ws;
            CParameterField c(1, ops.c_plus / 3);
            compute_residual(f, c, cfg, dudt, ws);
            CHECK(dudt.elem[0].cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    SUBCASE("all four case geometries") {
        for (CaseId id : {CaseId::gaussian_pulse, CaseId::leblanc, CaseId::shock_diffraction,
                          CaseId::dmr}) {
            CaseConfig cc;
            cc.id = id;
            cc.p = 3;
            if (id == CaseId::gaussian_pulse) cc.nx = 4;
            if (id == CaseId::leblanc) cc.nx = 8;
            if (id == CaseId::shock_diffraction) { cc.nx = 13; cc.ny = 11; }
            if (id == CaseId::dmr) { cc.nx = 8; cc.ny = 6; }
            auto inst = make_case(cc);
            SolutionField f = SolutionField::zeros(inst->mesh, inst->ops);
            // free-stream tangent to the walls so the state is steady
            EulerPrim q = stream;
            if (id == CaseId::shock_diffraction || id == CaseId::dmr) {
                q.v[0] = 0.0;
                q.v[1] = 0.0;
            }
            fill_uniform(f, q);
            // prescribe matching inflow states so boundaries are consistent
            for (auto& bc : inst->mesh.bcs)
                if (bc.tag == BoundaryTag::inflow || bc.tag == BoundaryTag::post_shock)
                    bc.state = prim_to_cons(q, f.dim, 1.4);
            SolutionField dudt = SolutionField::zeros(inst->mesh, inst->ops);
            ResidualWorkspace ws;
            CParameterField c = random_c_field(f, inst->ops.c_plus);
            compute_residual(f, c, cfg, dudt, ws);
            Real worst = 0;
            for (auto& e : dudt.elem) worst = std::max(worst, e.cwiseAbs().maxCoeff());
            INFO("case ", to_string(id));
            CHECK(worst < 1e-12);
        }
    }
}

TEST_CASE("hadamard contraction with a symmetric matrix annihilates the total") {
    // spec identity: 1^T [(Qt - Qt^T) o F] 1 = 0 for any symmetric F
    for (int dim : {1, 2}) {
        ReferenceOperators ops = build_reference_ops(2, dim);
        for (int dir = 0; dir < dim; ++dir) {
            Matrix S = ops.hybridized_skew(dir);
            const int n = static_cast<int>(S.rows());
            Matrix F = Matrix::Random(n, n);
            F = Real(0.5) * (F + F.transpose()).eval();
            Real total = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) total += S(i, j) * F(i, j);
            CHECK(std::abs(total) < 1e-13 * S.cwiseAbs().sum());
        }
    }
}

TEST_CASE("linear-advection reduction reproduces standard DG") {
    // frozen velocity, mass equation only, p=2, one periodic element:
    // the split volume term with arithmetic-mean flux plus the facet
    // penalty must equal the strong-form DG operator assembled directly
    const int p = 2;
    ReferenceOperators ops = build_reference_ops(p, 1);
    const int nq = ops.nq;
    Vector u = Vector::Random(p + 1);

    // route 1: dense stacked hadamard evaluation (independent of the
    // production line kernel)
    Matrix S = ops.skew_1d;
    Vector ust(nq + 2);
    ust.head(nq) = ops.basis.interp_quad * u;
    ust[nq] = ops.basis.interp_left.dot(u);
    ust[nq + 1] = ops.basis.interp_right.dot(u);
    Vector had = Vector::Zero(nq + 2);
    for (int i = 0; i < nq + 2; ++i)
        for (int j = 0; j < nq + 2; ++j) had[i] += S(i, j) * 0.5 * (ust[i] + ust[j]);
    Vector r = ops.basis.interp_quad.transpose() * had.head(nq);
    r += ops.basis.interp_left.transpose() * had[nq];
    r += ops.basis.interp_right.transpose() * had[nq + 1];
    // periodic self-face, central numerical flux (single valued)
    const Real fstar = 0.5 * (ust[nq] + ust[nq + 1]);
    r += ops.basis.interp_right.transpose() * fstar; // n = +1
    r -= ops.basis.interp_left.transpose() * fstar;  // n = -1

    // route 2: standard strong-form DG residual
    // M du/dt = -(Q_N u + E^T B (f* - u_face)) for f(u) = u
    Matrix W = ops.basis.quad_weights.asDiagonal();
    Matrix Qn = ops.basis.interp_quad.transpose() * W * ops.basis.dinterp_quad;
    Vector rdg = Qn * u;
    rdg += ops.basis.interp_right.transpose() * (fstar - ust[nq + 1]);
    rdg -= ops.basis.interp_left.transpose() * (fstar - ust[nq]);

    CHECK((r - rdg).cwiseAbs().maxCoeff() < 1e-12 * (1.0 + rdg.cwiseAbs().maxCoeff()));
}

TEST_CASE("local conservation identity per element") {
    // 1^T M_m (du/dt)^T = -sum_f sum_k W_fk n.f* for every element, any c
    FluxConfig cfg;
    for (int dim : {1, 2}) {
        CaseConfig cc;
        cc.id = dim == 1 ? CaseId::leblanc : CaseId::gaussian_pulse;
        cc.p = 3;
        cc.nx = dim == 1 ? 6 : 4;
        auto inst = make_case(cc);
        const ReferenceOperators& ops = inst->ops;
        SolutionField f = SolutionField::zeros(inst->mesh, ops);
        fill_smooth_random(f);
        SolutionField dudt = SolutionField::zeros(inst->mesh, ops);
        ResidualWorkspace ws;
        CParameterField c = random_c_field(f, ops.c_plus);
        compute_residual(f, c, cfg, dudt, ws);

        const int nfp = ops.n_face_points();
        const int ns = f.nstate;
        Vector ones = Vector::Ones(ops.n_nodes());
        for (int e = 0; e < inst->mesh.n_elements(); ++e) {
            const MeshElement& el = inst->mesh.elems[e];
            const Real J = inst->mesh.jacobian(e);
            Vector lhs = J * (ops.mass * dudt.elem[e]).transpose() * ones;
            Vector rhs = Vector::Zero(ns);
            for (int fs = 0; fs < ops.n_faces(); ++fs) {
                const Face& fc = inst->mesh.faces[el.face[fs]];
                const bool own = (fc.elem_l == e && fc.side_l == fs);
                const Real sign = own ? 1.0 : -1.0;
                const int dir = fs / 2;
                const Real smet = dim == 2 ? (dir == 0 ? el.hy / 2 : el.hx / 2) : 1.0;
                const Real* flux = ws.face_flux.data() +
                                   static_cast<size_t>(el.face[fs]) * nfp * ns;
                for (int k = 0; k < nfp; ++k)
                    for (int s = 0; s < ns; ++s)
                        rhs[s] -= ops.face_weights[k] * smet * sign * flux[k * ns + s];
            }
            for (int s = 0; s < ns; ++s)
                CHECK(std::abs(lhs[s] - rhs[s]) < 1e-12 * (1.0 + std::abs(rhs[s])));
        }
    }
}

TEST_CASE("global conservation on periodic domains") {
    // telescoping: single-valued fluxes cancel across interior faces
    FluxConfig cfg;
    CaseConfig cc;
    cc.id = CaseId::gaussian_pulse;
    cc.p = 2;
    cc.nx = 6;
    auto inst = make_case(cc);
    SolutionField f = SolutionField::zeros(inst->mesh, inst->ops);
    fill_smooth_random(f);
    SolutionField dudt = SolutionField::zeros(inst->mesh, inst->ops);
    ResidualWorkspace ws;
    CParameterField c = random_c_field(f, inst->ops.c_plus);
    compute_residual(f, c, cfg, dudt, ws);

    Vector ones = Vector::Ones(inst->ops.n_nodes());
    Vector total = Vector::Zero(f.nstate);
    for (int e = 0; e < inst->mesh.n_elements(); ++e)
        total += inst->mesh.jacobian(e) * (inst->ops.mass * dudt.elem[e]).transpose() * ones;
    for (int s = 0; s < f.nstate; ++s) CHECK(std::abs(total[s]) < 1e-12);
}

TEST_CASE("discrete entropy identity with the EC flux") {
    // sum_e vhat^T (M+K) J du/dt = 0 on a periodic mesh with dissipation
    // off, for any c field; vhat recomputed here from the operators
    FluxConfig cfg;
    cfg.dissipation = Dissipation::none;
    for (int dim : {1, 2}) {
        CaseConfig cc;
        cc.id = dim == 1 ? CaseId::gaussian_pulse : CaseId::gaussian_pulse;
        cc.p = 3;
        cc.nx = 4;
        auto inst = make_case(cc);
        CartesianMesh mesh1 = build_mesh_1d(0.0, 1.0, 5, true);
        ReferenceOperators ops1 = build_reference_ops(3, 1);
        const CartesianMesh& mesh = dim == 1 ? mesh1 : inst->mesh;
        const ReferenceOperators& ops = dim == 1 ? ops1 : inst->ops;

        SolutionField f = SolutionField::zeros(mesh, ops);
        fill_smooth_random(f, 0.15);
        SolutionField dudt = SolutionField::zeros(mesh, ops);
        ResidualWorkspace ws;
        CParameterField c = random_c_field(f, ops.c_plus);
        compute_residual(f, c, cfg, dudt, ws);

        Real total = 0, scale = 0;
        for (int e = 0; e < mesh.n_elements(); ++e) {
            Matrix uq = ops.vol_interp * f.elem[e];
            Matrix vq(uq.rows(), uq.cols());
            for (Eigen::Index q = 0; q < uq.rows(); ++q) {
                Real w[4];
                StateVec s = uq.row(q).transpose();
                entropy_variables(cons_to_prim(s, dim, cfg.gamma), dim, cfg.gamma, w);
                for (int k = 0; k < f.nstate; ++k) vq(q, k) = w[k];
            }
            Matrix vhat = ops.vol_proj * vq;
            Matrix MK = ops.mass + ops.fr_filter(ops.quantize_c(c[e]));
            const Real J = mesh.jacobian(e);
            for (int s = 0; s < f.nstate; ++s) {
                total += J * vhat.col(s).dot(MK * dudt.elem[e].col(s));
                scale += std::abs(J * vhat.col(s).dot(MK * dudt.elem[e].col(s)));
            }
        }
        INFO("dim ", dim);
        CHECK(std::abs(total) < 1e-11 * (1.0 + scale));
    }
}

TEST_CASE("scheme recovery is bitwise") {
    FluxConfig cfg;
    CaseConfig cc;
    cc.id = CaseId::gaussian_pulse;
    cc.p = 3;
    cc.nx = 4;
    auto inst = make_case(cc);
    SolutionField f = SolutionField::zeros(inst->mesh, inst->ops);
    fill_smooth_random(f);
    SolutionField r1 = SolutionField::zeros(inst->mesh, inst->ops);
    SolutionField r2 = SolutionField::zeros(inst->mesh, inst->ops);
    ResidualWorkspace ws;
    const int ne = inst->mesh.n_elements();

    SUBCASE("afr with a zero c field equals dg") {
        CParameterField dg = update_c_field(f, Scheme::dg, inst->sensor, cfg.gamma);
        CParameterField afr_forced(ne, 0.0);
        compute_residual(f, dg, cfg, r1, ws);
        compute_residual(f, afr_forced, cfg, r2, ws);
        for (int e = 0; e < ne; ++e)
            CHECK(std::memcmp(r1.elem[e].data(), r2.elem[e].data(),
                              sizeof(Real) * r1.elem[e].size()) == 0);
    }
    SUBCASE("afr with c forced to c_plus equals fr") {
        CParameterField fr = update_c_field(f, Scheme::fr, inst->sensor, cfg.gamma);
        CParameterField afr_forced(ne, inst->ops.c_plus);
        compute_residual(f, fr, cfg, r1, ws);
        compute_residual(f, afr_forced, cfg, r2, ws);
        for (int e = 0; e < ne; ++e)
            CHECK(std::memcmp(r1.elem[e].data(), r2.elem[e].data(),
                              sizeof(Real) * r1.elem[e].size()) == 0);
    }
    SUBCASE("repeated evaluation is deterministic") {
        CParameterField c = random_c_field(f, inst->ops.c_plus);
        compute_residual(f, c, cfg, r1, ws);
        ResidualWorkspace ws2;
        compute_residual(f, c, cfg, r2, ws2);
        for (int e = 0; e < ne; ++e)
            CHECK(std::memcmp(r1.elem[e].data(), r2.elem[e].data(),
                              sizeof(Real) * r1.elem[e].size()) == 0);
    }
    SUBCASE("dg and fr residuals differ") {
        CParameterField dg(ne, 0.0), fr(ne, inst->ops.c_plus);
        compute_residual(f, dg, cfg, r1, ws);
        compute_residual(f, fr, cfg, r2, ws);
        Real diff = 0;
        for (int e = 0; e < ne; ++e)
            diff = std::max(diff, (r1.elem[e] - r2.elem[e]).cwiseAbs().maxCoeff());
        CHECK(diff > 1e-12);
    }
}

TEST_CASE("modified mass application") {
    CaseConfig cc;
    cc.id = CaseId::leblanc;
    cc.p = 3;
    cc.nx = 6;
    auto inst = make_case(cc);
    FluxConfig cfg;
    SolutionField f = SolutionField::zeros(inst->mesh, inst->ops);
    fill_smooth_random(f);
    SolutionField r_dg = SolutionField::zeros(inst->mesh, inst->ops);
    ResidualWorkspace ws;
    CParameterField zero(inst->mesh.n_elements(), 0.0);
    compute_residual(f, zero, cfg, r_dg, ws);

    // c = 0 must match the plain mass inverse: reconstruct the raw
    // residual then re-apply M^{-1}
    for (int e = 0; e < inst->mesh.n_elements(); ++e) {
        Matrix raw = inst->ops.mass * r_dg.elem[e];
        Matrix again = inst->ops.mass_llt.solve(raw);
        CHECK((again - r_dg.elem[e]).cwiseAbs().maxCoeff() <
              1e-13 * (1.0 + r_dg.elem[e].cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("positivity errors carry the failing element") {
    CaseConfig cc;
    cc.id = CaseId::leblanc;
    cc.p = 2;
    cc.nx = 5;
    auto inst = make_case(cc);
    FluxConfig cfg;
    SolutionField f = SolutionField::zeros(inst->mesh, inst->ops);
    fill_smooth_random(f);
    f.elem[3].col(0).setConstant(-0.2);
    SolutionField dudt = SolutionField::zeros(inst->mesh, inst->ops);
    ResidualWorkspace ws;
    CParameterField c(inst->mesh.n_elements(), 0.0);
    try {
        compute_residual(f, c, cfg, dudt, ws);
        FAIL("expected PositivityError");
    } catch (const PositivityError& e) {
        CHECK(e.element == 3);
    }
}
