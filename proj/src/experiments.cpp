#include "mwl/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace mwl {

RateFit fit_rate(const std::vector<std::pair<int, double>>& points) {
    if (points.size() < 3) throw std::invalid_argument("need >= 3 points");
    for (const auto& [n, v] : points)
        if (!(v > 0.0)) throw std::invalid_argument("rate fit requires positive values");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(points.size());
    for (const auto& [n, v] : points) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(v);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    RateFit fit;
    fit.points = points;
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    fit.intercept = (sy - fit.slope * sx) / m;

    double ss_res = 0.0, ss_tot = 0.0;
    const double ybar = sy / m;
    for (const auto& [n, v] : points) {
        const double x = std::log(static_cast<double>(n));
        const double y = std::log(v);
        const double yhat = fit.intercept + fit.slope * x;
        ss_res += (y - yhat) * (y - yhat);
        ss_tot += (y - ybar) * (y - ybar);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

InterpolationCheck check_interpolation(const SpectralField& u, SobolevIndex r1,
                                       SobolevIndex r, SobolevIndex r2) {
    if (!(r1.value < r.value && r.value < r2.value))
        throw std::invalid_argument("indices must satisfy r1 < r < r2");
    const double lhs = sobolev_norm(u, r);
    const double theta1 = (r2.value - r.value) / (r2.value - r1.value);
    const double theta2 = (r.value - r1.value) / (r2.value - r1.value);
    const double rhs =
        std::pow(sobolev_norm(u, r1), theta1) * std::pow(sobolev_norm(u, r2), theta2);
    if (rhs == 0.0) return InterpolationCheck{true, 0.0};
    const double ratio = lhs / rhs;
    return InterpolationCheck{ratio <= 1.0 + 1e-12, ratio};
}

int study_grid_size(int n, int configured) {
    int need = std::max(8 * n, std::max(configured, 8));
    int p = 8;
    while (p < need) p *= 2;
    return p;
}

double initial_gap(int n, SobolevIndex s) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double closed = std::sqrt(2.0 * std::numbers::pi) / (7.0 * n);
    const auto grid = make_grid(study_grid_size(n, 0));
    const SpectralField a = approx_solution(ApproxParams(1, n, s), 0.0, grid);
    const SpectralField b = approx_solution(ApproxParams(-1, n, s), 0.0, grid);
    const double measured = sobolev_norm(a - b, s);
    if (std::abs(measured - closed) > 1e-12 * closed)
        throw std::logic_error("spectral initial gap disagrees with closed form");
    return closed;
}

double gap_lower_bound(double t, int n) {
    return std::sqrt(std::numbers::pi) / 7.0 * std::abs(std::sin(t)) -
           std::sqrt(2.0 * std::numbers::pi) / (7.0 * n);
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

template <class F>
void for_each_index(int threads, int count, F&& body) {
    if (threads <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(count);
    for (int i = 0; i < count; ++i)
        futs.push_back(std::async(std::launch::async, [&body, i] { body(i); }));
    for (auto& f : futs) f.get();
}

SolverConfig study_solver(const SolverConfig& base, int n_modes, double s,
                          std::vector<double> checkpoints, double horizon) {
    SolverConfig c = base;
    c.n_modes = n_modes;
    c.monitor_s = s;
    c.checkpoints = std::move(checkpoints);
    c.t_end = horizon;
    return c;
}

} // namespace

NonuniformReport run_nonuniform_study(SobolevIndex s, const std::vector<int>& n_list,
                                      const std::vector<double>& t_grid,
                                      const StudyConfig& cfg) {
    if (n_list.empty() || t_grid.empty())
        throw std::invalid_argument("n_list and t_grid must be nonempty");
    const double horizon = *std::max_element(t_grid.begin(), t_grid.end());
    if (!(horizon > 0.0)) throw std::invalid_argument("t_grid must reach a positive time");

    NonuniformReport rep;
    rep.s = s.value;
    rep.n_list = n_list;
    rep.t_grid = t_grid;
    rep.horizon = horizon;
    {
        std::ostringstream os;
        os << "s=" << s.value << ";cfl=" << cfg.solver.cfl << ";dt_max=" << cfg.solver.dt_max
           << ";n_modes=" << cfg.solver.n_modes << ";horizon=" << horizon;
        for (int n : n_list) os << ";n" << n;
        for (double t : t_grid) os << ";t" << t;
        rep.solver_fingerprint = fnv1a(os.str());
    }

    const int count = static_cast<int>(n_list.size());
    std::vector<std::vector<NonuniformCell>> cells(count);
    rep.initial_gaps.resize(count);
    rep.sup_hs.resize(count);
    rep.hs0.resize(count);
    rep.statuses.resize(count);

    for_each_index(cfg.threads, count, [&](int i) {
        const int n = n_list[i];
        const auto grid = make_grid(study_grid_size(n, cfg.solver.n_modes));
        const SolverConfig sc = study_solver(cfg.solver, grid->size(), s.value, t_grid, horizon);
        const SpectralField up0 = approx_solution(ApproxParams(1, n, s), 0.0, grid);
        const SpectralField um0 = approx_solution(ApproxParams(-1, n, s), 0.0, grid);
        rep.initial_gaps[i] = sobolev_norm(up0 - um0, s);

        const Trajectory tp = simulate(up0, sc);
        const Trajectory tm = simulate(um0, sc);
        rep.statuses[i] = tp.status != RunStatus::completed ? tp.status : tm.status;
        rep.hs0[i] = std::max(tp.hs_series.front(), tm.hs_series.front());
        double sup = 0.0;
        for (double v : tp.hs_series) sup = std::max(sup, v);
        for (double v : tm.hs_series) sup = std::max(sup, v);
        rep.sup_hs[i] = sup;

        for (double t : t_grid) {
            if (t > tp.stop_time + 1e-12 || t > tm.stop_time + 1e-12) continue;
            const SpectralField& a = t <= 1e-14 ? up0 : tp.state_at(t);
            const SpectralField& b = t <= 1e-14 ? um0 : tm.state_at(t);
            const double gap = sobolev_norm(a - b, s);
            const double bound = gap_lower_bound(t, n);
            cells[i].push_back(NonuniformCell{n, t, gap, bound, gap - bound});
        }
    });

    for (auto& row : cells)
        rep.cells.insert(rep.cells.end(), row.begin(), row.end());
    return rep;
}

namespace {

RateFit error_study(SobolevIndex s, SobolevIndex norm_index,
                    const std::vector<int>& n_list, const std::vector<double>& t_probe,
                    const StudyConfig& cfg, int omega) {
    if (n_list.size() < 3) throw std::invalid_argument("need >= 3 points");
    if (t_probe.empty()) throw std::invalid_argument("t_probe must be nonempty");
    const double horizon = *std::max_element(t_probe.begin(), t_probe.end());

    const int count = static_cast<int>(n_list.size());
    std::vector<double> errs(count, 0.0);
    for_each_index(cfg.threads, count, [&](int i) {
        const int n = n_list[i];
        const auto grid = make_grid(study_grid_size(n, cfg.solver.n_modes));
        const SolverConfig sc = study_solver(cfg.solver, grid->size(), s.value, t_probe, horizon);
        const ApproxParams p(omega, n, s);
        const Trajectory traj = simulate(approx_solution(p, 0.0, grid), sc);
        if (traj.status != RunStatus::completed)
            throw std::runtime_error("simulation broke down at n=" + std::to_string(n));
        double worst = 0.0;
        for (double t : t_probe) {
            const SpectralField diff = approx_solution(p, t, grid) - traj.state_at(t);
            worst = std::max(worst, sobolev_norm(diff, norm_index));
        }
        errs[i] = worst;
    });

    std::vector<std::pair<int, double>> pts;
    for (int i = 0; i < count; ++i) pts.emplace_back(n_list[i], errs[i]);
    return fit_rate(pts);
}

} // namespace

RateFit run_error_decay_study(SobolevIndex s, SobolevIndex sigma,
                              const std::vector<int>& n_list,
                              const std::vector<double>& t_probe,
                              const StudyConfig& cfg, int omega) {
    if (s.value >= 2.0) {
        if (sigma.value != 1.0)
            throw std::invalid_argument("sigma must be 1 when s >= 2");
    } else if (s.value > 1.5) {
        if (!(sigma.value > 0.5 && sigma.value <= s.value - 1.0))
            throw std::invalid_argument("sigma must be in (1/2, s-1] when 3/2 < s < 2");
    } else {
        throw std::invalid_argument("s must be > 3/2");
    }
    RateFit fit = error_study(s, sigma, n_list, t_probe, cfg, omega);
    fit.theoretical_slope = -s.value;
    fit.branch = s.value >= 2.0 ? "H1 decay, s >= 2" : "H^sigma decay, 3/2 < s < 2";
    return fit;
}

RateFit run_hk_growth_study(SobolevIndex s, const std::vector<int>& n_list,
                            const StudyConfig& cfg, int omega) {
    if (!(s.value > 1.5)) throw std::invalid_argument("s must be > 3/2");
    const double h = cfg.solver.t_end;
    const std::vector<double> t_probe{0.25 * h, 0.5 * h, 0.75 * h, h};
    RateFit fit = error_study(s, s.value + 2.0, n_list, t_probe, cfg, omega);
    fit.theoretical_slope = 2.0;
    fit.branch = "H^{s+2} growth (upper bound)";
    return fit;
}

} // namespace mwl
