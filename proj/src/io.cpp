#include "afr/io.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>

namespace afr {

namespace {

std::ofstream open_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << std::setprecision(17);
    return os;
}

void write_matrix_csv(const std::string& path, const Matrix& m) {
    std::ofstream os = open_out(path);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            os << m(i, j) << (j + 1 < m.cols() ? "," : "");
        os << "\n";
    }
}

} // namespace

void write_profile_csv(const std::string& path, const SolutionField& field,
                       const CParameterField& c_field, Real gamma) {
    std::ofstream os = open_out(path);
    os << "x,rho,P,c\n";
    for (int e = 0; e < field.mesh->n_elements(); ++e) {
        const Matrix coords = field.node_coords(e);
        for (Eigen::Index i = 0; i < coords.rows(); ++i) {
            StateVec u = field.elem[e].row(i).transpose();
            os << coords(i, 0) << "," << u[0] << "," << pressure(u, field.dim, gamma) << ","
               << c_field[e] << "\n";
        }
    }
}

void write_line_csv(const std::string& path, const SolutionField& field,
                    const CParameterField& c_field, Real gamma, Real x0, Real y0, Real x1,
                    Real y1, int n) {
    std::ofstream os = open_out(path);
    os << "s,x,y,rho,P,c\n";
    for (int i = 0; i < n; ++i) {
        const Real s = (i + 0.5) / n;
        const Real x = x0 + s * (x1 - x0);
        const Real y = y0 + s * (y1 - y0);
        const int e = field.mesh->locate(x, y);
        if (e < 0) continue;
        StateVec u = field.evaluate(e, x, y);
        os << s << "," << x << "," << y << "," << u[0] << ","
           << pressure(u, field.dim, gamma) << "," << c_field[e] << "\n";
    }
}

void write_structured_vtk(const std::string& path, const SolutionField& field,
                          const CParameterField& c_field) {
    const CartesianMesh& m = *field.mesh;
    std::ofstream os = open_out(path);
    const int nx = m.lattice_nx;
    const int ny = m.dim == 2 ? m.lattice_ny : 1;
    os << "# vtk DataFile Version 3.0\n"
       << "afr structured dump\nASCII\nDATASET RECTILINEAR_GRID\n"
       << "DIMENSIONS " << nx + 1 << " " << ny + 1 << " 1\n";
    os << "X_COORDINATES " << nx + 1 << " double\n";
    for (int i = 0; i <= nx; ++i) os << m.gx0 + i * m.ghx << (i < nx ? " " : "\n");
    os << "Y_COORDINATES " << ny + 1 << " double\n";
    if (m.dim == 2)
        for (int j = 0; j <= ny; ++j) os << m.gy0 + j * m.ghy << (j < ny ? " " : "\n");
    else
        os << "0 1\n";
    os << "Z_COORDINATES 1 double\n0\n";
    os << "CELL_DATA " << nx * ny << "\n";

    auto emit = [&](const std::string& name, auto&& value) {
        os << "SCALARS " << name << " double\nLOOKUP_TABLE default\n";
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i) {
                const int e = m.lattice_to_elem[j * nx + i];
                os << (e >= 0 ? value(e) : 0.0) << "\n";
            }
    };
    emit("density", [&](int e) { return cell_average(field, e)[0]; });
    emit("fr_parameter", [&](int e) { return c_field[e]; });
    emit("mask", [&](int) { return 1.0; });
}

void write_convergence_csv(const std::string& path, const std::string& scheme,
                           const std::vector<ConvergenceRow>& rows) {
    std::ofstream os = open_out(path);
    os << "scheme,grid,h,l1,l2,linf,order_l2\n";
    for (const auto& r : rows)
        os << scheme << "," << r.grid << "," << r.h << "," << r.err.density_l1() << ","
           << r.err.density_l2() << "," << r.err.density_linf() << "," << r.order_l2 << "\n";
}

void write_run_log(const std::string& path, const RunResult& result) {
    std::ofstream os = open_out(path);
    for (const auto& rec : result.log) {
        nlohmann::json j;
        j["step"] = rec.step;
        j["t"] = rec.t;
        j["dt"] = rec.dt;
        std::vector<Real> totals(rec.totals.data(), rec.totals.data() + rec.totals.size());
        j["totals"] = totals;
        j["entropy"] = rec.entropy;
        j["limiter_hits"] = rec.limiter_hits;
        j["max_c"] = rec.max_c;
        os << j.dump() << "\n";
    }
    nlohmann::json tail;
    tail["completed"] = result.completed;
    tail["steps"] = result.steps;
    tail["final_time"] = result.final_time;
    tail["initial_wavespeed"] = result.initial_wavespeed;
    if (!result.completed) tail["abort_reason"] = result.abort_reason;
    os << tail.dump() << "\n";
}

void dump_operators_csv(const std::string& dir, const ReferenceOperators& ops) {
    std::filesystem::create_directories(dir);
    write_matrix_csv(dir + "/mass.csv", ops.mass);
    write_matrix_csv(dir + "/mass_1d.csv", ops.mass_1d);
    write_matrix_csv(dir + "/fr_term_1d.csv", ops.fr_term_1d);
    write_matrix_csv(dir + "/fr_filter_cplus.csv", ops.fr_filter(ops.c_plus));
    write_matrix_csv(dir + "/vol_interp.csv", ops.vol_interp);
    write_matrix_csv(dir + "/vol_proj.csv", ops.vol_proj);
    write_matrix_csv(dir + "/skew_1d.csv", ops.skew_1d);
    write_matrix_csv(dir + "/lifting_dg.csv", ops.lifting(0.0));
    write_matrix_csv(dir + "/lifting_cplus.csv", ops.lifting(ops.c_plus));
    for (int d = 0; d < ops.dim; ++d)
        write_matrix_csv(dir + "/hybridized_skew_" + std::to_string(d) + ".csv",
                         ops.hybridized_skew(d));
    for (int f = 0; f < ops.n_faces(); ++f)
        write_matrix_csv(dir + "/face_interp_" + std::to_string(f) + ".csv",
                         ops.face_interp[f]);
}

} // namespace afr
