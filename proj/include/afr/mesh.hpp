#ifndef AFR_MESH_HPP
#define AFR_MESH_HPP

#include "afr/euler.hpp"
#include "afr/types.hpp"

#include <array>
#include <functional>
#include <vector>

namespace afr {

enum class BoundaryTag { periodic, inflow, outflow, slip_wall, post_shock };

struct BoundaryCondition {
    BoundaryTag tag = BoundaryTag::outflow;
    StateVec state; // prescribed state for inflow / post_shock
};

/// Local face sides: 0 = x-, 1 = x+, 2 = y-, 3 = y+.
/// Interior faces are oriented along the +axis: elem_l sits on the
/// negative side, so the stored normal is +e_dir out of elem_l.
struct Face {
    int elem_l = -1;
    int elem_r = -1; // -1 on boundary faces
    int side_l = 0;
    int side_r = 0;
    int dir = 0;
    int bc = -1; // index into CartesianMesh::bcs for boundary faces
    bool boundary() const { return elem_r < 0; }
};

struct MeshElement {
    Real x0 = 0, y0 = 0;
    Real hx = 0, hy = 0;
    std::array<int, 4> face = {-1, -1, -1, -1};
};

/// Axis-aligned affine Cartesian mesh, possibly with lattice cells
/// masked out (L-shaped domains). Uniform spacing per direction.
struct CartesianMesh {
    int dim = 1;
    std::vector<MeshElement> elems;
    std::vector<Face> faces;
    std::vector<BoundaryCondition> bcs;

    // underlying lattice (for point location and structured output)
    Real gx0 = 0, gy0 = 0, ghx = 0, ghy = 0;
    int lattice_nx = 0, lattice_ny = 1;
    std::vector<int> lattice_to_elem; // -1 for masked-out cells

    Real x_min = 0, x_max = 0, y_min = 0, y_max = 0;

    int n_elements() const { return static_cast<int>(elems.size()); }
    Real jacobian(int e) const {
        const MeshElement& el = elems[e];
        return dim == 1 ? el.hx / 2 : el.hx * el.hy / 4;
    }
    /// Element containing the physical point, or -1.
    int locate(Real x, Real y) const;
};

using DomainMask = std::function<bool(Real, Real)>;
/// midpoint (x, y) of a boundary face and its local side -> condition
using BoundaryAssigner = std::function<BoundaryCondition(Real, Real, int)>;

CartesianMesh build_mesh_1d(Real x0, Real x1, int n, bool periodic,
                            const BoundaryCondition& left = {},
                            const BoundaryCondition& right = {});

/// 2D lattice mesh over [x0,x1]x[y0,y1] with nx x ny cells; cells whose
/// center fails the mask are excluded. Periodic directions wrap; other
/// boundary faces are tagged by the assigner.
CartesianMesh build_mesh_2d(Real x0, Real x1, Real y0, Real y1, int nx, int ny,
                            bool periodic_x, bool periodic_y,
                            const DomainMask& mask = nullptr,
                            const BoundaryAssigner& assign = nullptr);

/// Exterior state seen across a boundary face. The interior trace is a
/// conservative state; slip walls mirror the normal momentum, outflow
/// extrapolates, inflow and post-shock prescribe.
StateVec ghost_state(const StateVec& interior, const BoundaryCondition& bc, int dim,
                     int dir, int sign, Real t);

} // namespace afr

#endif
