#include "afr/mesh.hpp"

#include <cmath>

namespace afr {

int CartesianMesh::locate(Real x, Real y) const {
    int ix = static_cast<int>(std::floor((x - gx0) / ghx));
    ix = std::min(std::max(ix, 0), lattice_nx - 1);
    int iy = 0;
    if (dim == 2) {
        iy = static_cast<int>(std::floor((y - gy0) / ghy));
        iy = std::min(std::max(iy, 0), lattice_ny - 1);
    }
    return lattice_to_elem[iy * lattice_nx + ix];
}

CartesianMesh build_mesh_1d(Real x0, Real x1, int n, bool periodic,
                            const BoundaryCondition& left, const BoundaryCondition& right) {
    if (n < 1 || !(x1 > x0)) throw std::invalid_argument("build_mesh_1d: bad extent");
    CartesianMesh m;
    m.dim = 1;
    m.gx0 = x0;
    m.ghx = (x1 - x0) / n;
    m.lattice_nx = n;
    m.x_min = x0;
    m.x_max = x1;
    m.elems.resize(n);
    m.lattice_to_elem.resize(n);
    for (int i = 0; i < n; ++i) {
        m.elems[i].x0 = x0 + i * m.ghx;
        m.elems[i].hx = m.ghx;
        m.lattice_to_elem[i] = i;
    }
    auto add_interior = [&](int el, int er) {
        Face f;
        f.elem_l = el;
        f.elem_r = er;
        f.side_l = 1;
        f.side_r = 0;
        f.dir = 0;
        int id = static_cast<int>(m.faces.size());
        m.faces.push_back(f);
        m.elems[el].face[1] = id;
        m.elems[er].face[0] = id;
    };
    for (int i = 0; i + 1 < n; ++i) add_interior(i, i + 1);
    if (periodic) {
        add_interior(n - 1, 0);
    } else {
        m.bcs.push_back(left);
        m.bcs.push_back(right);
        Face fl;
        fl.elem_l = 0;
        fl.side_l = 0;
        fl.dir = 0;
        fl.bc = 0;
        m.elems[0].face[0] = static_cast<int>(m.faces.size());
        m.faces.push_back(fl);
        Face fr;
        fr.elem_l = n - 1;
        fr.side_l = 1;
        fr.dir = 0;
        fr.bc = 1;
        m.elems[n - 1].face[1] = static_cast<int>(m.faces.size());
        m.faces.push_back(fr);
    }
    return m;
}

CartesianMesh build_mesh_2d(Real x0, Real x1, Real y0, Real y1, int nx, int ny,
                            bool periodic_x, bool periodic_y, const DomainMask& mask,
                            const BoundaryAssigner& assign) {
    if (nx < 1 || ny < 1 || !(x1 > x0) || !(y1 > y0))
        throw std::invalid_argument("build_mesh_2d: bad extent");
    CartesianMesh m;
    m.dim = 2;
    m.gx0 = x0;
    m.gy0 = y0;
    m.ghx = (x1 - x0) / nx;
    m.ghy = (y1 - y0) / ny;
    m.lattice_nx = nx;
    m.lattice_ny = ny;
    m.x_min = x0;
    m.x_max = x1;
    m.y_min = y0;
    m.y_max = y1;
    m.lattice_to_elem.assign(static_cast<size_t>(nx) * ny, -1);

    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            const Real cx = x0 + (ix + 0.5) * m.ghx;
            const Real cy = y0 + (iy + 0.5) * m.ghy;
            if (mask && !mask(cx, cy)) continue;
            MeshElement el;
            el.x0 = x0 + ix * m.ghx;
            el.y0 = y0 + iy * m.ghy;
            el.hx = m.ghx;
            el.hy = m.ghy;
            m.lattice_to_elem[iy * nx + ix] = static_cast<int>(m.elems.size());
            m.elems.push_back(el);
        }

    auto cell = [&](int ix, int iy) { return m.lattice_to_elem[iy * nx + ix]; };
    auto add_interior = [&](int el, int er, int dir) {
        Face f;
        f.elem_l = el;
        f.elem_r = er;
        f.dir = dir;
        f.side_l = 2 * dir + 1;
        f.side_r = 2 * dir;
        int id = static_cast<int>(m.faces.size());
        m.faces.push_back(f);
        m.elems[el].face[f.side_l] = id;
        m.elems[er].face[f.side_r] = id;
    };
    auto add_boundary = [&](int e, int side, int dir) {
        const MeshElement& el = m.elems[e];
        Real mx = el.x0 + 0.5 * el.hx, my = el.y0 + 0.5 * el.hy;
        if (side == 0) mx = el.x0;
        if (side == 1) mx = el.x0 + el.hx;
        if (side == 2) my = el.y0;
        if (side == 3) my = el.y0 + el.hy;
        if (!assign)
            throw std::invalid_argument("build_mesh_2d: boundary face without assigner");
        Face f;
        f.elem_l = e;
        f.side_l = side;
        f.dir = dir;
        f.bc = static_cast<int>(m.bcs.size());
        m.bcs.push_back(assign(mx, my, side));
        m.elems[e].face[side] = static_cast<int>(m.faces.size());
        m.faces.push_back(f);
    };

    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            const int e = cell(ix, iy);
            if (e < 0) continue;
            // +x neighbor
            int jx = ix + 1;
            if (jx == nx && periodic_x) jx = 0;
            int er = (jx < nx) ? cell(jx, iy) : -1;
            if (er >= 0)
                add_interior(e, er, 0);
            else
                add_boundary(e, 1, 0);
            // -x boundary (interior -x faces were added by the neighbor)
            int kx = ix - 1;
            if (kx < 0 && periodic_x) kx = nx - 1;
            if (kx < 0 || cell(kx, iy) < 0) add_boundary(e, 0, 0);
            // +y neighbor
            int jy = iy + 1;
            if (jy == ny && periodic_y) jy = 0;
            er = (jy < ny) ? cell(ix, jy) : -1;
            if (er >= 0)
                add_interior(e, er, 1);
            else
                add_boundary(e, 3, 1);
            int ky = iy - 1;
            if (ky < 0 && periodic_y) ky = ny - 1;
            if (ky < 0 || cell(ix, ky) < 0) add_boundary(e, 2, 1);
        }
    return m;
}

StateVec ghost_state(const StateVec& interior, const BoundaryCondition& bc, int dim,
                     int dir, int /*sign*/, Real /*t*/) {
    switch (bc.tag) {
        case BoundaryTag::inflow:
        case BoundaryTag::post_shock:
            return bc.state;
        case BoundaryTag::outflow:
            return interior;
        case BoundaryTag::slip_wall: {
            StateVec g = interior;
            g[1 + dir] = -g[1 + dir];
            return g;
        }
        case BoundaryTag::periodic:
            throw std::logic_error("ghost_state: periodic faces are wired, not ghosted");
    }
    throw std::logic_error("ghost_state: unknown tag");
}

} // namespace afr
