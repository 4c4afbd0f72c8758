#include "afr/quadrature.hpp"
#include "afr/legendre.hpp"

#include <cmath>
#include <numbers>

namespace afr {

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        // Chebyshev initial guess, Newton on P_n
        Real x = -std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        Real P = 0, dP = 0;
        for (int it = 0; it < 100; ++it) {
            legendre_eval(n, x, P, dP);
            Real dx = -P / dP;
            x += dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_eval(n, x, P, dP);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dP * dP);
    }
    return rule;
}

QuadratureRule gauss_lobatto(int n) {
    if (n < 2) throw std::invalid_argument("gauss_lobatto: n must be >= 2");
    const int p = n - 1;
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.nodes[0] = -1.0;
    rule.nodes[n - 1] = 1.0;
    for (int i = 1; i < n - 1; ++i) {
        // interior nodes are roots of P_p'; Newton with d/dx P' from the
        // Legendre ODE: (1-x^2) P'' = 2x P' - p(p+1) P
        Real x = -std::cos(std::numbers::pi * i / p);
        for (int it = 0; it < 100; ++it) {
            Real P, dP;
            legendre_eval(p, x, P, dP);
            Real ddP = (2.0 * x * dP - p * (p + 1) * P) / (1.0 - x * x);
            Real dx = -dP / ddP;
            x += dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = x;
    }
    for (int i = 0; i < n; ++i) {
        Real P, dP;
        legendre_eval(p, rule.nodes[i], P, dP);
        rule.weights[i] = 2.0 / (p * (p + 1) * P * P);
    }
    return rule;
}

} // namespace afr
