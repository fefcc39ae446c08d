#include "mwl/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "mwl/checks.hpp"
#include "mwl/report.hpp"

namespace mwl {

namespace fs = std::filesystem;

namespace {

json load_config(const std::string& path) {
    if (path.empty()) throw ConfigError("missing --config");
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    return j;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& ctx) {
    for (const auto& [key, value] : j.items())
        if (!allowed.contains(key))
            throw ConfigError("unknown key '" + key + "' in " + ctx);
}

double num(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) throw ConfigError(std::string(key) + " must be a number");
    return j.at(key).get<double>();
}

int integer(const json& j, const char* key, int fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer())
        throw ConfigError(std::string(key) + " must be an integer");
    return j.at(key).get<int>();
}

std::vector<int> int_list(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ConfigError(std::string(key) + " must be an array");
    std::vector<int> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number_integer()) throw ConfigError(std::string(key) + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

std::vector<double> num_list(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ConfigError(std::string(key) + " must be an array");
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) throw ConfigError(std::string(key) + " entries must be numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

SolverConfig solver_from(const json& j) {
    SolverConfig cfg;
    cfg.n_modes = integer(j, "n_modes", cfg.n_modes);
    cfg.t_end = num(j, "t_end", cfg.t_end);
    cfg.cfl = num(j, "cfl", cfg.cfl);
    cfg.dt_max = num(j, "dt_max", cfg.dt_max);
    cfg.record_every = integer(j, "record_every", cfg.record_every);
    cfg.breakdown_slope = num(j, "breakdown_slope", cfg.breakdown_slope);
    cfg.breakdown_norm_factor = num(j, "breakdown_norm_factor", cfg.breakdown_norm_factor);
    cfg.monitor_s = num(j, "monitor_s", cfg.monitor_s);
    if (j.contains("dt")) {
        const auto& dt = j.at("dt");
        if (dt.is_string()) {
            if (dt.get<std::string>() != "auto")
                throw ConfigError("dt must be a positive number or \"auto\"");
        } else if (dt.is_number()) {
            cfg.dt = dt.get<double>();
            if (!(*cfg.dt > 0.0)) throw ConfigError("dt must be positive");
        } else {
            throw ConfigError("dt must be a positive number or \"auto\"");
        }
    }
    return cfg;
}

SpectralField initial_from(const json& j, GridPtr grid) {
    if (!j.is_object() || !j.contains("type"))
        throw ConfigError("initial must be an object with a type");
    const std::string type = j.at("type").get<std::string>();
    if (type == "zero") {
        reject_unknown(j, {"type"}, "initial");
        return SpectralField(grid);
    }
    if (type == "constant") {
        reject_unknown(j, {"type", "value"}, "initial");
        SpectralField u(grid);
        u.set_coeff(0, num(j, "value", 0.0));
        return u;
    }
    if (type == "approx") {
        reject_unknown(j, {"type", "omega", "n", "s"}, "initial");
        const ApproxParams p(integer(j, "omega", 1), integer(j, "n", 1), num(j, "s", 2.0));
        return approx_solution(p, 0.0, grid);
    }
    if (type == "harmonics") {
        reject_unknown(j, {"type", "terms"}, "initial");
        SpectralField u(grid);
        if (!j.contains("terms") || !j.at("terms").is_array())
            throw ConfigError("harmonics initial requires a terms array");
        for (const auto& term : j.at("terms")) {
            reject_unknown(term, {"k", "cos", "sin"}, "initial.terms");
            const int k = integer(term, "k", 0);
            const double c = num(term, "cos", 0.0);
            const double s = num(term, "sin", 0.0);
            if (k == 0)
                u.set_coeff(0, u.coeff(0) + c);
            else
                u.set_coeff(k, u.coeff(k) + std::complex<double>(c / 2.0, -s / 2.0));
        }
        return u;
    }
    throw ConfigError("unknown initial type: " + type);
}

fs::path prepare_output(const CliOptions& opt) {
    fs::path dir(opt.output_dir);
    fs::create_directories(dir);
    return dir;
}

std::string rate_plot_script(const std::string& csv, const std::string& value_column,
                             double theoretical_slope) {
    std::ostringstream os;
    os << "set logscale xy\n"
       << "set datafile separator ','\n"
       << "set xlabel 'n'\n"
       << "set ylabel '" << value_column << "'\n"
       << "fitline(x) = exp(b) * x**m\n"
       << "m = " << format_double(theoretical_slope) << "\n"
       << "fit fitline(x) '" << csv << "' skip 1 using 1:2 via b\n"
       << "plot '" << csv << "' skip 1 using 1:2 with points title 'measured', \\\n"
       << "     fitline(x) title sprintf('slope %g reference', m)\n";
    return os.str();
}

std::string gap_plot_script(const std::string& csv) {
    std::ostringstream os;
    os << "set datafile separator ','\n"
       << "set xlabel 't'\n"
       << "set ylabel 'H^s gap'\n"
       << "plot '" << csv << "' skip 1 using 2:3 with points title 'gap', \\\n"
       << "     '" << csv << "' skip 1 using 2:4 with points title 'lower bound'\n";
    return os.str();
}

int run_guarded(const CliOptions& opt, int (*body)(const CliOptions&)) {
    try {
        return body(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

int cmd_simulate_body(const CliOptions& opt) {
    const json j = load_config(opt.config_path);
    reject_unknown(j,
                   {"n_modes", "dt", "t_end", "cfl", "dt_max", "record_every",
                    "breakdown_slope", "breakdown_norm_factor", "monitor_s", "initial"},
                   "simulate config");
    const SolverConfig cfg = solver_from(j);
    if (!j.contains("initial")) throw ConfigError("simulate config requires initial");
    const auto grid = make_grid(cfg.n_modes);
    const SpectralField u0 = initial_from(j.at("initial"), grid);

    const Trajectory traj = simulate(u0, cfg);
    const fs::path dir = prepare_output(opt);
    write_text_file(dir / "trajectory.csv", trajectory_csv(traj));
    write_text_file(dir / "summary.json",
                    trajectory_summary_json(traj, cfg.monitor_s).dump(2) + "\n");
    return traj.status == RunStatus::completed ? 0 : 3;
}

int cmd_residual_body(const CliOptions& opt) {
    const json j = load_config(opt.config_path);
    reject_unknown(j, {"s", "sigma", "omega", "t", "n_list"}, "residual config");
    const double s = num(j, "s", 2.0);
    const double sigma = num(j, "sigma", 1.0);
    const int omega = integer(j, "omega", 1);
    const double t = num(j, "t", 0.3);
    const std::vector<int> n_list = int_list(j, "n_list");
    if (n_list.size() < 3) throw ConfigError("need >= 3 n values");

    std::vector<std::pair<int, double>> pts;
    for (int n : n_list) {
        const auto grid = make_grid(study_grid_size(n, 0));
        pts.emplace_back(n, sobolev_norm(residual_E(ApproxParams(omega, n, s), t, grid), sigma));
    }
    RateFit fit = fit_rate(pts);
    fit.theoretical_slope = s < 2.0 ? -2.0 * s + 1.0 + sigma : -s - 1.0 + sigma;
    fit.branch = s < 2.0 ? "n^{-2s+1+sigma}, 3/2 < s < 2" : "n^{-s-1+sigma}, s >= 2";

    const fs::path dir = prepare_output(opt);
    write_text_file(dir / "residual.csv", points_csv(pts, "norm"));
    write_text_file(dir / "rate_fit.json", rate_fit_json(fit).dump(2) + "\n");
    write_text_file(dir / "plot.gp",
                    rate_plot_script("residual.csv", "residual norm", fit.theoretical_slope));
    return 0;
}

int cmd_rates_body(const CliOptions& opt) {
    const json j = load_config(opt.config_path);
    reject_unknown(j,
                   {"s", "sigma", "omega", "n_list", "horizon", "t_probe", "mode",
                    "n_modes", "cfl", "dt_max", "dt"},
                   "rates config");
    const double s = num(j, "s", 2.0);
    const double sigma = num(j, "sigma", 1.0);
    const int omega = integer(j, "omega", 1);
    const std::vector<int> n_list = int_list(j, "n_list");
    const double horizon = num(j, "horizon", 0.5);
    const std::string mode =
        j.contains("mode") ? j.at("mode").get<std::string>() : std::string("decay");

    StudyConfig cfg;
    cfg.solver = solver_from(j);
    cfg.solver.t_end = horizon;
    cfg.solver.n_modes = integer(j, "n_modes", 0);
    cfg.threads = opt.threads;

    std::vector<double> t_probe;
    if (j.contains("t_probe")) {
        t_probe = num_list(j, "t_probe");
    } else {
        for (int i = 1; i <= 4; ++i) t_probe.push_back(horizon * i / 4.0);
    }

    RateFit fit;
    if (mode == "decay")
        fit = run_error_decay_study(s, sigma, n_list, t_probe, cfg, omega);
    else if (mode == "hk_growth")
        fit = run_hk_growth_study(s, n_list, cfg, omega);
    else
        throw ConfigError("mode must be 'decay' or 'hk_growth'");

    const fs::path dir = prepare_output(opt);
    write_text_file(dir / "rates.csv", points_csv(fit.points, "error"));
    write_text_file(dir / "rate_fit.json", rate_fit_json(fit).dump(2) + "\n");
    write_text_file(dir / "plot.gp",
                    rate_plot_script("rates.csv", "error", fit.theoretical_slope));
    return 0;
}

int cmd_nonuniform_body(const CliOptions& opt) {
    const json j = load_config(opt.config_path);
    reject_unknown(j, {"s", "n_modes", "n_list", "t_grid", "cfl", "dt_max", "dt"},
                   "nonuniform config");
    const double s = num(j, "s", 2.0);
    const std::vector<int> n_list = int_list(j, "n_list");
    const std::vector<double> t_grid = num_list(j, "t_grid");

    StudyConfig cfg;
    cfg.solver = solver_from(j);
    cfg.solver.n_modes = integer(j, "n_modes", 0);
    cfg.threads = opt.threads;
    if (cfg.solver.n_modes > 0)
        for (int n : n_list)
            if (8 * n > cfg.solver.n_modes)
                throw ConfigError("n=" + std::to_string(n) +
                                  " exceeds N/8 at the configured resolution");

    const NonuniformReport rep = run_nonuniform_study(s, n_list, t_grid, cfg);

    const fs::path dir = prepare_output(opt);
    write_text_file(dir / "gaps.csv", gaps_csv(rep));
    write_text_file(dir / "nonuniform.json", nonuniform_json(rep).dump(2) + "\n");
    write_text_file(dir / "plot.gp", gap_plot_script("gaps.csv"));
    for (RunStatus st : rep.statuses)
        if (st != RunStatus::completed) return 3;
    return 0;
}

int cmd_check_body(const CliOptions& opt) {
    unsigned seed = 1;
    if (!opt.config_path.empty()) {
        const json j = load_config(opt.config_path);
        reject_unknown(j, {"seed"}, "check config");
        seed = static_cast<unsigned>(integer(j, "seed", 1));
    }
    if (opt.seed) seed = static_cast<unsigned>(*opt.seed);

    const auto results = run_self_checks(seed);
    json out = json::array();
    std::string first_fail;
    for (const auto& r : results) {
        out.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        if (!r.pass && first_fail.empty()) first_fail = r.name;
    }
    const fs::path dir = prepare_output(opt);
    write_text_file(dir / "check.json",
                    json{{"seed", seed}, {"results", out}}.dump(2) + "\n");
    if (!first_fail.empty()) {
        std::cerr << "property failure: " << first_fail << '\n';
        return 1;
    }
    return 0;
}

} // namespace

int cmd_simulate(const CliOptions& opt) { return run_guarded(opt, cmd_simulate_body); }
int cmd_residual(const CliOptions& opt) { return run_guarded(opt, cmd_residual_body); }
int cmd_rates(const CliOptions& opt) { return run_guarded(opt, cmd_rates_body); }
int cmd_nonuniform(const CliOptions& opt) { return run_guarded(opt, cmd_nonuniform_body); }
int cmd_check(const CliOptions& opt) { return run_guarded(opt, cmd_check_body); }

int run_cli(int argc, char** argv) {
    CLI::App app{"Periodic pseudo-spectral lab for a moderate-amplitude "
                 "shallow-water wave equation"};
    app.require_subcommand(1);

    CliOptions opt;
    long seed = 0;
    bool seed_set = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opt.config_path, "JSON config file");
        sub->add_option("--output", opt.output_dir, "output directory");
        sub->add_option("--seed", seed, "seed for randomized suites")
            ->each([&](const std::string&) { seed_set = true; });
        sub->add_option("--threads", opt.threads, "worker threads for studies");
    };

    auto* sim = app.add_subcommand("simulate", "evolve one initial condition");
    auto* res = app.add_subcommand("residual", "approximate-solution residual rate sweep");
    auto* rates = app.add_subcommand("rates", "solver-vs-approximation error decay study");
    auto* nonu = app.add_subcommand("nonuniform", "non-uniform dependence study");
    auto* check = app.add_subcommand("check", "one-shot self-audit of the library");
    for (auto* sub : {sim, res, rates, nonu, check}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (seed_set) opt.seed = seed;

    if (sim->parsed()) return cmd_simulate(opt);
    if (res->parsed()) return cmd_residual(opt);
    if (rates->parsed()) return cmd_rates(opt);
    if (nonu->parsed()) return cmd_nonuniform(opt);
    if (check->parsed()) return cmd_check(opt);
    return 2;
}

} // namespace mwl
