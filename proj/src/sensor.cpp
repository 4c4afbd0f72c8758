#include "afr/sensor.hpp"
#include "afr/field.hpp"

#include <cmath>
#include <numbers>

namespace afr {

Scheme scheme_from_string(const std::string& s) {
    if (s == "dg") return Scheme::dg;
    if (s == "fr") return Scheme::fr;
    if (s == "afr") return Scheme::afr;
    throw std::invalid_argument("unknown scheme '" + s + "' (dg|fr|afr)");
}

std::string to_string(Scheme s) {
    switch (s) {
        case Scheme::dg: return "dg";
        case Scheme::fr: return "fr";
        default: return "afr";
    }
}

SensorConfig make_sensor_config(int p, Real c_plus, Real kappa) {
    if (kappa <= 0) throw std::invalid_argument("sensor: kappa must be positive");
    if (c_plus <= 0) throw std::invalid_argument("sensor: c_plus must be positive");
    SensorConfig cfg;
    cfg.kappa = kappa;
    cfg.c_plus = c_plus;
    cfg.s0 = -4.0 * std::log10(Real(p));
    return cfg;
}

Real modal_sensor(const Vector& nodal_values, const ReferenceOperators& ops) {
    const int n1 = ops.p + 1;
    Vector modal;
    if (ops.dim == 1) {
        modal = ops.basis.nodal_to_modal * nodal_values;
    } else {
        // tensor transform, x modes fast
        Eigen::Map<const Matrix> grid(nodal_values.data(), n1, n1);
        Matrix m = ops.basis.nodal_to_modal * grid * ops.basis.nodal_to_modal.transpose();
        modal = Eigen::Map<Vector>(m.data(), n1 * n1);
    }
    Real total = modal.squaredNorm();
    if (total <= 0) return 0.0;
    Real top = 0;
    if (ops.dim == 1) {
        top = modal[ops.p] * modal[ops.p];
    } else {
        for (int j = 0; j < n1; ++j)
            for (int i = 0; i < n1; ++i)
                if (i == ops.p || j == ops.p) top += modal[j * n1 + i] * modal[j * n1 + i];
    }
    return top / total;
}

Real smooth_scale(Real Se, const SensorConfig& cfg) {
    if (Se <= 0) return 0.0;
    const Real se = std::log10(Se);
    if (se < cfg.s0 - cfg.kappa) return 0.0;
    if (se > cfg.s0 + cfg.kappa) return 1.0;
    return 0.5 * (1.0 + std::sin(std::numbers::pi * (se - cfg.s0) / (2.0 * cfg.kappa)));
}

CParameterField update_c_field(const SolutionField& field, Scheme scheme,
                               const SensorConfig& cfg, Real gamma) {
    const int ne = field.mesh->n_elements();
    CParameterField c(ne, 0.0);
    if (scheme == Scheme::dg) return c;
    if (scheme == Scheme::fr) {
        std::fill(c.begin(), c.end(), cfg.c_plus);
        return c;
    }
    for (int e = 0; e < ne; ++e) {
        const Matrix& u = field.elem[e];
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            StateVec s = u.row(i).transpose();
            if (!admissible(cons_to_prim(s, field.dim, gamma)))
                throw PositivityError("update_c_field: inadmissible nodal state", e);
        }
        const Vector density = u.col(0);
        c[e] = smooth_scale(modal_sensor(density, *field.ops), cfg) * cfg.c_plus;
    }
    return c;
}

} // namespace afr
