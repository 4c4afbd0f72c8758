#ifndef AFR_REFERENCE_OPS_HPP
#define AFR_REFERENCE_OPS_HPP

#include "afr/basis.hpp"
#include "afr/types.hpp"

#include <Eigen/Cholesky>
#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace afr {

/// Maximum stable FR correction parameter for degree p, in the
/// unit-reference-element normalization used throughout (the value that
/// multiplies the p-th-derivative filter term, see fr_filter_1d).
/// p = 2..5 are the classical tensor-product ESFR stability limits
/// (0.186, 3.67e-3, 4.79e-5, 4.24e-7) converted by 1/2^(2p+1); p = 1 is
/// not tabulated in the literature and was derived from a fully-discrete
/// von Neumann sweep (SSPRK3, upwind flux), which reproduces the p >= 2
/// values and has its CFL-optimal plateau at c ~= 0.75 for p = 1.
Real default_c_plus(int p);

/// All element-local reference-space operators for a tensor-product
/// element of degree p in d dimensions. Node ordering is x-fastest.
/// Immutable after construction; the factorization cache supports
/// concurrent reads with exclusive insert.
struct ReferenceOperators {
    int p = 0;
    int dim = 1;
    int nq = 0;
    Real c_plus = 0;
    Basis1D basis;

    // one-dimensional building blocks
    Matrix mass_1d;       // (p+1)^2 Gauss-Legendre mass
    Matrix fr_term_1d;    // unit-c FR filter: 4^p * int d^p(chi_i) d^p(chi_j)
    Matrix proj_1d;       // (p+1) x n_q: quadrature values -> nodal coefficients
    Matrix stiffness_q;   // n_q^2 quadrature-space stiffness Q
    Matrix face_trace_q;  // 2 x n_q: quadrature values -> traces at -1, +1
    Matrix skew_1d;       // (n_q+2)^2 stacked line operator [[Q-Q^T, E^T B], [-BE, 0]]

    // d-dimensional operators
    Matrix mass;                     // N x N, N = (p+1)^d
    Eigen::LLT<Matrix> mass_llt;
    Matrix vol_interp;               // n_qv x N: nodal -> volume quadrature values
    Matrix vol_proj;                 // N x n_qv: quadrature values -> nodal
    std::vector<Matrix> face_interp; // 2*dim matrices, n_fp x N
    Vector face_weights;             // n_fp facet quadrature weights

    int n_nodes() const { return ipow(p + 1, dim); }
    int n_quad() const { return ipow(nq, dim); }
    int n_faces() const { return 2 * dim; }
    int n_face_points() const { return dim == 1 ? 1 : nq; }

    /// FR filter K(c); c >= 0. In 2D the tensor-product form
    /// c (M1 (x) K1 + K1 (x) M1) + c^2 (K1 (x) K1).
    Matrix fr_filter(Real c) const;

    /// Full stacked hybridized skew operator (Qt - Qt^T) for one
    /// reference direction, over volume quadrature nodes followed by the
    /// direction's two face node sets. Exactly skew by construction.
    Matrix hybridized_skew(int direction) const;

    /// Facet scatter sum_f sum_k chi(xi_fk)^T W_fk, one column per face
    /// node, faces ordered (xi-,xi+,eta-,eta+).
    Matrix facet_scatter() const;

    /// Modified lifting operator L(c) = (M + K(c))^{-1} facet_scatter().
    Matrix lifting(Real c) const;

    /// Snap c onto the 1024-level grid in [0, c_plus] used to key the
    /// factorization cache. Exact at 0 and c_plus.
    Real quantize_c(Real c) const;

    /// Cholesky factorization of M + K(c) for quantized c, cached.
    const Eigen::LLT<Matrix>& mass_solver(Real c) const;

    static int ipow(int b, int e) { int r = 1; while (e-- > 0) r *= b; return r; }

private:
    struct SolverCache;
    std::shared_ptr<SolverCache> cache_;
    friend ReferenceOperators build_reference_ops(int, int, int, Real);
};

/// Build all reference operators for degree p in dim dimensions.
/// nq = 0 selects the default p+1 volume quadrature points.
ReferenceOperators build_reference_ops(int p, int dim, int nq = 0, Real c_plus = 0);

} // namespace afr

#endif
