#ifndef AFR_FIELD_HPP
#define AFR_FIELD_HPP

#include "afr/euler.hpp"
#include "afr/mesh.hpp"
#include "afr/reference_ops.hpp"
#include "afr/types.hpp"

#include <vector>

namespace afr {

/// Nodal solution coefficients over the mesh: one (p+1)^d x (d+2) block
/// per element, plus handles to the mesh and reference operators.
struct SolutionField {
    int dim = 1;
    int p = 1;
    int nstate = 3;
    Real time = 0;
    const CartesianMesh* mesh = nullptr;
    const ReferenceOperators* ops = nullptr;
    std::vector<Matrix> elem;

    static SolutionField zeros(const CartesianMesh& mesh, const ReferenceOperators& ops);

    /// Physical coordinates of the solution nodes of element e, one row
    /// per node (x fastest ordering).
    Matrix node_coords(int e) const;

    /// Evaluate the polynomial solution at a physical point inside
    /// element e (reference coordinates derived from the affine map).
    StateVec evaluate(int e, Real x, Real y) const;
};

/// Maximum over all solution nodes of |v| + a. Throws PositivityError on
/// an inadmissible nodal state.
Real max_wavespeed(const SolutionField& field, Real gamma);

/// Quadrature cell average of element e (all states).
StateVec cell_average(const SolutionField& field, int e);

/// Domain integrals of the conserved variables (mass, momentum, energy).
StateVec conserved_totals(const SolutionField& field);

/// Domain integral of the mathematical entropy S = -rho s/(gamma-1),
/// evaluated by volume quadrature.
Real total_entropy(const SolutionField& field, Real gamma);

} // namespace afr

#endif
