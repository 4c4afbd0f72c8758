#include "afr/drivers.hpp"
#include "afr/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace {

struct Options {
    std::string case_name = "gaussian-pulse";
    std::string scheme = "afr";
    std::string dissipation = "roe";
    std::string grid;
    std::string cfl_mode = "adaptive";
    std::string sensor_update = "step";
    std::string limiter = "on";
    std::string out_dir = "out";
    int p = 3;
    int nq = 0;
    double cfl = 0.4;
    double t_final = -1;
    double gamma = 1.4;
    double kappa = 1.0;
    double c_plus = 0;
    double eps_pos = 1e-13;
    double sigma = 500.0;
    long max_steps = 100000000;
    int log_every = 1;
    bool dump_ops = false;
};

void add_common(CLI::App* app, Options& o) {
    app->add_option("--case", o.case_name, "gaussian-pulse|leblanc|shock-diffraction|dmr");
    app->add_option("--scheme", o.scheme, "dg|fr|afr");
    app->add_option("--p", o.p, "polynomial degree (1..5 with tabulated c_+)");
    app->add_option("--grid", o.grid, "elements: NX or NXxNY");
    app->add_option("--cfl", o.cfl, "CFL number");
    app->add_option("--final-time", o.t_final, "final time (case default if omitted)");
    app->add_option("--flux", [](const std::vector<std::string>& v) {
        if (!v.empty() && v.front() != "ec-ra")
            throw CLI::ValidationError("--flux", "only 'ec-ra' is available");
        return true;
    }, "two-point flux (ec-ra)");
    app->add_option("--dissipation", o.dissipation, "roe|llf|none");
    app->add_option("--limiter", o.limiter, "on|off");
    app->add_option("--kappa", o.kappa, "sensor smoothing half-width");
    app->add_option("--c-plus", o.c_plus, "override max FR parameter");
    app->add_option("--eps-pos", o.eps_pos, "positivity floor");
    app->add_option("--gamma", o.gamma, "ratio of specific heats");
    app->add_option("--nq", o.nq, "volume quadrature points (default p+1)");
    app->add_option("--cfl-mode", o.cfl_mode, "initial|adaptive wavespeed for dt");
    app->add_option("--sensor-update", o.sensor_update, "step|stage");
    app->add_option("--sigma", o.sigma, "pulse strength");
    app->add_option("--max-steps", o.max_steps, "step guard");
    app->add_option("--log-every", o.log_every, "log cadence (0 = off)");
    app->add_option("--out", o.out_dir, "output directory");
    app->set_config("--config", "", "config file (flags take precedence)");
}

afr::CaseConfig to_config(const Options& o) {
    afr::CaseConfig cfg;
    cfg.id = afr::case_from_string(o.case_name);
    cfg.scheme = afr::scheme_from_string(o.scheme);
    cfg.dissipation = afr::dissipation_from_string(o.dissipation);
    cfg.p = o.p;
    cfg.nq = o.nq;
    cfg.cfl = o.cfl;
    cfg.t_final = o.t_final;
    cfg.gamma = o.gamma;
    cfg.kappa = o.kappa;
    cfg.c_plus = o.c_plus;
    cfg.eps_pos = o.eps_pos;
    cfg.sigma = o.sigma;
    cfg.max_steps = o.max_steps;
    cfg.log_every = o.log_every;
    cfg.limiter_enabled = (o.limiter != "off");
    cfg.cfl_mode = o.cfl_mode == "initial" ? afr::CflMode::initial : afr::CflMode::adaptive;
    cfg.sensor_update =
        o.sensor_update == "stage" ? afr::SensorUpdate::stage : afr::SensorUpdate::step;
    if (!o.grid.empty()) {
        auto xpos = o.grid.find('x');
        cfg.nx = std::stoi(o.grid.substr(0, xpos));
        if (xpos != std::string::npos) cfg.ny = std::stoi(o.grid.substr(xpos + 1));
    }
    return cfg;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& s, T (*conv)(const std::string&)) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(conv(tok));
    return out;
}

int cmd_run(const Options& o) {
    afr::CaseConfig cfg = to_config(o);
    if (o.dump_ops) {
        auto inst = afr::make_case(cfg);
        afr::dump_operators_csv(o.out_dir + "/operators", inst->ops);
        std::cout << "operators dumped to " << o.out_dir << "/operators\n";
    }
    afr::CaseRun run = afr::run_case(cfg);
    afr::write_run_log(o.out_dir + "/log.jsonl", run.result);
    const afr::CParameterField& c =
        run.result.completed ? run.result.final_c
                             : afr::CParameterField(run.inst->mesh.n_elements(), 0.0);
    if (run.field.dim == 1) {
        afr::write_profile_csv(o.out_dir + "/profile.csv", run.field, c, cfg.gamma);
    } else {
        afr::write_structured_vtk(o.out_dir + "/solution.vtk", run.field, c);
        if (cfg.id == afr::CaseId::shock_diffraction)
            afr::write_line_csv(o.out_dir + "/diagonal.csv", run.field, c, cfg.gamma, 1.0, 0.0,
                                13.0, 11.0, 2048);
    }
    if (run.result.completed) {
        std::cout << "completed: " << run.result.steps << " steps to t=" << run.result.final_time
                  << "\n";
        return 0;
    }
    std::cout << "aborted: " << run.result.abort_reason << "\n";
    return 2;
}

int cmd_converge(const Options& o, const std::string& grids_str, const std::string& schemes_str) {
    afr::CaseConfig base = to_config(o);
    base.log_every = 0;
    const std::vector<int> grids = parse_int_list(grids_str);
    std::stringstream ss(schemes_str.empty() ? o.scheme : schemes_str);
    std::string scheme;
    while (std::getline(ss, scheme, ',')) {
        base.scheme = afr::scheme_from_string(scheme);
        auto rows = afr::run_convergence(base, grids);
        afr::write_convergence_csv(o.out_dir + "/convergence_" + scheme + ".csv", scheme, rows);
        std::cout << "scheme " << scheme << "\n  grid        h          L2(rho)      order\n";
        for (const auto& r : rows)
            std::cout << "  " << r.grid << "  " << r.h << "  " << r.err.density_l2() << "  "
                      << r.order_l2 << "\n";
    }
    return 0;
}

int cmd_max_cfl(const Options& o, double lo, double hi, double tol) {
    afr::CaseConfig base = to_config(o);
    base.log_every = 0;
    afr::BisectResult res = afr::max_cfl_bisect(base, lo, hi, tol);
    std::cout << "max CFL (" << o.scheme << "): " << res.max_cfl << "  [" << res.runs
              << " runs]\n";
    return 0;
}

int cmd_sweep(const Options& o, const std::string& schemes, const std::string& cfls) {
    afr::CaseConfig base = to_config(o);
    base.log_every = 0;
    std::ofstream os;
    std::filesystem::create_directories(o.out_dir);
    os.open(o.out_dir + "/sweep.csv");
    os << "scheme,cfl,completed,steps,final_time,abort\n";
    std::stringstream ss(schemes);
    std::string scheme;
    while (std::getline(ss, scheme, ',')) {
        std::stringstream cs(cfls);
        std::string cfl;
        while (std::getline(cs, cfl, ',')) {
            afr::CaseConfig cfg = base;
            cfg.scheme = afr::scheme_from_string(scheme);
            cfg.cfl = std::stod(cfl);
            afr::CaseRun run = afr::run_case(cfg);
            os << scheme << "," << cfl << "," << run.result.completed << ","
               << run.result.steps << "," << run.result.final_time << ",\""
               << run.result.abort_reason << "\"\n";
            std::cout << scheme << " cfl=" << cfl
                      << (run.result.completed ? " completed" : " aborted") << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive flux reconstruction Euler solver"};
    app.require_subcommand(1);
    Options o;

    CLI::App* run = app.add_subcommand("run", "run one case");
    add_common(run, o);
    run->add_flag("--dump-operators", o.dump_ops, "dump reference operators as CSV");

    std::string grids = "8,16,32,64", schemes, cfls = "0.1,0.2,0.4";
    CLI::App* conv = app.add_subcommand("converge", "grid refinement study");
    add_common(conv, o);
    conv->add_option("--grids", grids, "comma-separated grid sizes");
    conv->add_option("--schemes", schemes, "comma-separated schemes (default --scheme)");

    double lo = 0.0, hi = 1.0, tol = 0.01;
    CLI::App* mc = app.add_subcommand("max-cfl", "bisect the maximum stable CFL");
    add_common(mc, o);
    mc->add_option("--cfl-lo", lo, "passing lower bracket (0 allowed)");
    mc->add_option("--cfl-hi", hi, "failing upper bracket");
    mc->add_option("--tol", tol, "bisection tolerance");

    CLI::App* sw = app.add_subcommand("sweep", "run a scheme x CFL matrix");
    add_common(sw, o);
    sw->add_option("--schemes", schemes, "comma-separated schemes");
    sw->add_option("--cfls", cfls, "comma-separated CFL values");

    CLI11_PARSE(app, argc, argv);
    try {
        if (run->parsed()) return cmd_run(o);
        if (conv->parsed()) return cmd_converge(o, grids, schemes);
        if (mc->parsed()) return cmd_max_cfl(o, lo, hi, tol);
        if (sw->parsed()) return cmd_sweep(o, schemes, cfls);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
