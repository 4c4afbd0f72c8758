#include "afr/legendre.hpp"

#include <cmath>
#include <vector>

namespace afr {

void legendre_eval(int n, Real x, Real& P, Real& dP) {
    // three-term recurrence together with the derivative recurrence
    // dP_{k+1} = dP_{k-1} + (2k+1) P_k, stable on all of [-1, 1]
    Real p0 = 1.0, d0 = 0.0;
    if (n == 0) { P = p0; dP = d0; return; }
    Real p1 = x, d1 = 1.0;
    for (int k = 1; k < n; ++k) {
        Real p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
        Real d2 = d0 + (2 * k + 1) * p1;
        p0 = p1; p1 = p2;
        d0 = d1; d1 = d2;
    }
    P = p1; dP = d1;
}

Real orthonormal_legendre(int n, Real x) {
    Real P, dP;
    legendre_eval(n, x, P, dP);
    return std::sqrt((2 * n + 1) / 2.0) * P;
}

namespace {

// k-th derivative of P_n via the expansion of derivatives in Legendre
// polynomials: P'_n = sum_{m=n-1, n-3, ...} (2m+1) P_m, applied k times
// on the coefficient vector.
Real legendre_deriv_k(int n, Real x, int k) {
    std::vector<Real> coef(n + 1, 0.0);
    coef[n] = 1.0;
    for (int d = 0; d < k; ++d) {
        std::vector<Real> next(n + 1, 0.0);
        for (int j = 0; j <= n; ++j) {
            if (coef[j] == 0.0) continue;
            for (int m = j - 1; m >= 0; m -= 2) next[m] += (2 * m + 1) * coef[j];
        }
        coef.swap(next);
    }
    Real acc = 0.0;
    for (int j = 0; j <= n; ++j) {
        if (coef[j] == 0.0) continue;
        Real P, dP;
        legendre_eval(j, x, P, dP);
        acc += coef[j] * P;
    }
    return acc;
}

} // namespace

Real orthonormal_legendre_deriv(int n, Real x, int k) {
    if (k == 0) return orthonormal_legendre(n, x);
    if (k == 1) {
        Real P, dP;
        legendre_eval(n, x, P, dP);
        return std::sqrt((2 * n + 1) / 2.0) * dP;
    }
    return std::sqrt((2 * n + 1) / 2.0) * legendre_deriv_k(n, x, k);
}

Matrix orthonormal_vandermonde(const Vector& x, int p, int der) {
    Matrix V(x.size(), p + 1);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        for (int j = 0; j <= p; ++j)
            V(i, j) = orthonormal_legendre_deriv(j, x[i], der);
    return V;
}

} // namespace afr
