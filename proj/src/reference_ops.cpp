#include "afr/reference_ops.hpp"
#include "afr/legendre.hpp"

#include <cmath>
#include <mutex>

namespace afr {

Real default_c_plus(int p) {
    switch (p) {
        case 1: return 7.5e-1;
        case 2: return 0.186 / 32.0;
        case 3: return 2.87e-5;
        case 4: return 4.79e-5 / 512.0;
        case 5: return 4.24e-7 / 2048.0;
        default:
            throw std::out_of_range("default_c_plus: no tabulated value for p=" +
                                    std::to_string(p) + "; pass c_plus explicitly");
    }
}

namespace {

// p-th derivative of each Lagrange basis polynomial (a constant), via the
// top orthonormal mode: d^p chi_j = (V^-1)_{p,j} * d^p phi_p.
Vector top_derivative(const Basis1D& b) {
    const int p = b.p;
    Real a_p = 1.0; // leading Legendre coefficient (2p)! / (2^p (p!)^2)
    for (int k = 1; k <= p; ++k) a_p *= Real(p + k) / (2.0 * k);
    const Real dp_phi = std::sqrt((2 * p + 1) / 2.0) * a_p * std::tgamma(Real(p + 1));
    return dp_phi * b.nodal_to_modal.row(p).transpose();
}

} // namespace

Matrix ReferenceOperators::fr_filter(Real c) const {
    if (c < 0) throw std::invalid_argument("fr_filter: negative c");
    if (dim == 1) return c * fr_term_1d;
    return c * (kron(mass_1d, fr_term_1d) + kron(fr_term_1d, mass_1d)) +
           c * c * kron(fr_term_1d, fr_term_1d);
}

Matrix ReferenceOperators::hybridized_skew(int direction) const {
    if (direction < 0 || direction >= dim)
        throw std::invalid_argument("hybridized_skew: bad direction");
    const int nv = n_quad();
    const int nfp = n_face_points();
    Matrix S = Matrix::Zero(nv + 2 * nfp, nv + 2 * nfp);
    if (dim == 1) return skew_1d;

    const Matrix W = basis.quad_weights.asDiagonal();
    const Matrix Qskew = stiffness_q - stiffness_q.transpose();
    const Matrix I = Matrix::Identity(nq, nq);
    const Matrix eL = face_trace_q.row(0);
    const Matrix eR = face_trace_q.row(1);

    Matrix vol, Eneg, Epos; // direction 0: x fast; direction 1: y slow
    if (direction == 0) {
        vol = kron(W, Qskew);
        Eneg = kron(I, eL);
        Epos = kron(I, eR);
    } else {
        vol = kron(Qskew, W);
        Eneg = kron(eL, I);
        Epos = kron(eR, I);
    }
    Matrix Bneg = (-basis.quad_weights).asDiagonal();
    Matrix Bpos = basis.quad_weights.asDiagonal();
    S.topLeftCorner(nv, nv) = vol;
    S.block(0, nv, nv, nfp) = Eneg.transpose() * Bneg;
    S.block(0, nv + nfp, nv, nfp) = Epos.transpose() * Bpos;
    S.block(nv, 0, nfp, nv) = -Bneg * Eneg;
    S.block(nv + nfp, 0, nfp, nv) = -Bpos * Epos;
    return S;
}

Matrix ReferenceOperators::facet_scatter() const {
    const int nfp = n_face_points();
    Matrix G(n_nodes(), n_faces() * nfp);
    for (int f = 0; f < n_faces(); ++f)
        for (int k = 0; k < nfp; ++k)
            G.col(f * nfp + k) = face_interp[f].row(k).transpose() * face_weights[k];
    return G;
}

Matrix ReferenceOperators::lifting(Real c) const {
    Matrix A = mass + fr_filter(c);
    Eigen::LLT<Matrix> llt(A);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("lifting: M + K(c) not SPD");
    return llt.solve(facet_scatter());
}

struct ReferenceOperators::SolverCache {
    std::unordered_map<long, std::unique_ptr<Eigen::LLT<Matrix>>> map;
    std::shared_mutex mutex;
};

Real ReferenceOperators::quantize_c(Real c) const {
    if (c < 0) throw std::invalid_argument("quantize_c: negative c");
    const Real step = c_plus / 1024.0;
    return std::round(c / step) * step;
}

const Eigen::LLT<Matrix>& ReferenceOperators::mass_solver(Real c) const {
    const Real step = c_plus / 1024.0;
    const long level = std::lround(c / step);
    SolverCache& cache = *cache_;
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.map.find(level);
        if (it != cache.map.end()) return *it->second;
    }
    auto solver = std::make_unique<Eigen::LLT<Matrix>>(mass + fr_filter(level * step));
    if (solver->info() != Eigen::Success)
        throw std::runtime_error("mass_solver: factorization failed");
    std::unique_lock lock(cache.mutex);
    auto [it, inserted] = cache.map.try_emplace(level, std::move(solver));
    return *it->second;
}

ReferenceOperators build_reference_ops(int p, int dim, int nq, Real c_plus) {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("build_reference_ops: dim must be 1 or 2");
    if (nq == 0) nq = p + 1;

    ReferenceOperators ops;
    ops.cache_ = std::make_shared<ReferenceOperators::SolverCache>();
    ops.p = p;
    ops.dim = dim;
    ops.nq = nq;
    ops.c_plus = (c_plus > 0) ? c_plus : default_c_plus(p);
    ops.basis = build_basis(p, nq);
    const Basis1D& b = ops.basis;

    const Matrix W = b.quad_weights.asDiagonal();
    ops.mass_1d = b.interp_quad.transpose() * W * b.interp_quad;
    ops.proj_1d = ops.mass_1d.llt().solve(b.interp_quad.transpose() * W);

    // unit-c FR term; the 4^p factor puts c in the unit-reference-element
    // normalization so tabulated c_plus values apply unchanged on [-1, 1]
    const Vector d = top_derivative(b);
    ops.fr_term_1d = std::pow(4.0, p) * 2.0 * (d * d.transpose());

    Matrix trace_nodal(2, p + 1);
    trace_nodal.row(0) = b.interp_left;
    trace_nodal.row(1) = b.interp_right;
    ops.face_trace_q = trace_nodal * ops.proj_1d;

    const Matrix Qn = b.interp_quad.transpose() * W * b.dinterp_quad;
    ops.stiffness_q = ops.proj_1d.transpose() * Qn * ops.proj_1d;

    // stacked line operator over (quadrature, left face, right face)
    ops.skew_1d = Matrix::Zero(nq + 2, nq + 2);
    ops.skew_1d.topLeftCorner(nq, nq) = ops.stiffness_q - ops.stiffness_q.transpose();
    ops.skew_1d.block(0, nq, nq, 1) = -ops.face_trace_q.row(0).transpose();
    ops.skew_1d.block(0, nq + 1, nq, 1) = ops.face_trace_q.row(1).transpose();
    ops.skew_1d.block(nq, 0, 1, nq) = ops.face_trace_q.row(0);
    ops.skew_1d.block(nq + 1, 0, 1, nq) = -ops.face_trace_q.row(1);

    if (dim == 1) {
        ops.mass = ops.mass_1d;
        ops.vol_interp = b.interp_quad;
        ops.vol_proj = ops.proj_1d;
        ops.face_interp = {Matrix(b.interp_left), Matrix(b.interp_right)};
        ops.face_weights = Vector::Ones(1);
    } else {
        ops.mass = kron(ops.mass_1d, ops.mass_1d);
        ops.vol_interp = kron(b.interp_quad, b.interp_quad);
        ops.vol_proj = kron(ops.proj_1d, ops.proj_1d);
        ops.face_interp = {kron(b.interp_quad, Matrix(b.interp_left)),
                           kron(b.interp_quad, Matrix(b.interp_right)),
                           kron(Matrix(b.interp_left), b.interp_quad),
                           kron(Matrix(b.interp_right), b.interp_quad)};
        ops.face_weights = b.quad_weights;
    }
    ops.mass_llt.compute(ops.mass);
    return ops;
}

} // namespace afr
