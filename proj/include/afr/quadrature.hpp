#ifndef AFR_QUADRATURE_HPP
#define AFR_QUADRATURE_HPP

#include "afr/types.hpp"

namespace afr {

struct QuadratureRule {
    Vector nodes;
    Vector weights;
};

/// Gauss-Legendre rule with n points on [-1, 1]; exact for degree 2n-1.
QuadratureRule gauss_legendre(int n);

/// Gauss-Lobatto-Legendre nodes with n points on [-1, 1] (n >= 2),
/// endpoints included; exact for degree 2n-3.
QuadratureRule gauss_lobatto(int n);

} // namespace afr

#endif
