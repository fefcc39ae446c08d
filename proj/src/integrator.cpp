#include "mwl/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "mwl/model.hpp"

namespace mwl {

const SpectralField& Trajectory::state_at(double t, double tol) const {
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - t) <= tol) return states[i];
    throw std::invalid_argument("no recorded state at requested time");
}

double Trajectory::h1_drift() const {
    if (h1_series.empty()) return 0.0;
    const double h0 = h1_series.front();
    if (h0 == 0.0) return 0.0;
    double worst = 0.0;
    for (double h : h1_series) worst = std::max(worst, std::abs(h - h0) / h0);
    return worst;
}

SpectralField step_rk4(const SpectralField& u, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    const SpectralField k1 = rhs_nonlocal(u).total;
    const SpectralField k2 = rhs_nonlocal(u + (0.5 * dt) * k1).total;
    const SpectralField k3 = rhs_nonlocal(u + (0.5 * dt) * k2).total;
    const SpectralField k4 = rhs_nonlocal(u + dt * k3).total;
    return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

double cfl_dt(const SpectralField& u, double cfl, double dt_max, double dt_min) {
    const int k_max = u.grid()->max_wavenumber();
    double speed = 0.0;
    for (double v : from_spectral(u)) speed = std::max(speed, std::abs(1.0 + 14.0 * v));
    const double denom = k_max * speed;
    double dt = denom > 0.0 ? cfl / denom : dt_max;
    if (dt < dt_min) {
        std::fprintf(stderr, "warning: CFL step %.3e floored at %.3e\n", dt, dt_min);
        dt = dt_min;
    }
    return std::min(dt, dt_max);
}

namespace {

bool has_nan(const SpectralField& u) {
    for (const auto& c : u.bins())
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return true;
    return false;
}

double min_slope(const SpectralField& u) {
    double m = std::numeric_limits<double>::infinity();
    for (double v : from_spectral(derivative(u, 1))) m = std::min(m, v);
    return m;
}

} // namespace

Trajectory simulate(const SpectralField& u0, const SolverConfig& cfg) {
    if (!(cfg.t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
    if (band_limit(u0, 1e-12 * std::max(1.0, winf_norm(u0, 0))) > u0.size() / 6)
        throw std::invalid_argument("initial data must be band-limited to <= N/6 modes");

    std::vector<double> marks(cfg.checkpoints);
    std::sort(marks.begin(), marks.end());
    std::erase_if(marks, [&](double t) { return t <= 1e-14 || t > cfg.t_end + 1e-12; });

    Trajectory traj;
    const double hs0 = sobolev_norm(u0, cfg.monitor_s);
    auto record = [&](double t, const SpectralField& u) {
        traj.times.push_back(t);
        traj.states.push_back(u);
        traj.h1_series.push_back(h1_energy(u));
        traj.hs_series.push_back(sobolev_norm(u, cfg.monitor_s));
        traj.min_slope_series.push_back(min_slope(u));
    };

    SpectralField u = u0;
    double t = 0.0;
    record(t, u);
    std::size_t next_mark = 0;
    long step = 0;

    while (t < cfg.t_end - 1e-14) {
        double dt = cfg.dt ? *cfg.dt : cfl_dt(u, cfg.cfl, cfg.dt_max, cfg.dt_min);
        double stop = cfg.t_end;
        if (next_mark < marks.size()) stop = std::min(stop, marks[next_mark]);
        dt = std::min(dt, stop - t);

        u = step_rk4(u, dt);
        t += dt;
        ++step;

        if (has_nan(u)) {
            traj.status = RunStatus::nan;
            traj.stop_time = t;
            return traj;
        }

        bool at_mark = false;
        if (next_mark < marks.size() && std::abs(t - marks[next_mark]) <= 1e-12) {
            at_mark = true;
            ++next_mark;
        }
        const bool at_end = t >= cfg.t_end - 1e-14;
        if (at_mark || at_end || step % cfg.record_every == 0) record(t, u);

        const double slope = min_slope(u);
        const double hs = sobolev_norm(u, cfg.monitor_s);
        if (slope <= -cfg.breakdown_slope ||
            (hs0 > 0.0 && hs >= cfg.breakdown_norm_factor * hs0)) {
            if (!(at_mark || at_end || step % cfg.record_every == 0)) record(t, u);
            traj.status = RunStatus::breakdown;
            traj.stop_time = t;
            return traj;
        }
    }
    traj.status = RunStatus::completed;
    traj.stop_time = t;
    return traj;
}

double t0_lower_bound(const SpectralField& u0, SobolevIndex s, double C) {
    if (!(C > 0.0)) throw std::invalid_argument("C must be positive");
    const double h1 = sobolev_norm(u0, 1.0);
    const double hs = sobolev_norm(u0, s);
    if (h1 == 0.0 || hs == 0.0) throw std::invalid_argument("initial data must be nonzero");
    const double h1_5 = std::pow(h1, 5.0);
    return h1_5 / (2.0 * C * (1.0 + h1_5) * std::pow(hs, 3.0));
}

namespace {

SpectralField run_fixed(const SpectralField& u0, double t_end, double dt_req) {
    const long steps = std::max<long>(1, std::lround(t_end / dt_req));
    const double dt = t_end / static_cast<double>(steps);
    SpectralField u = u0;
    for (long i = 0; i < steps; ++i) u = step_rk4(u, dt);
    return u;
}

} // namespace

ConvergenceResult measure_convergence_order(const SpectralField& u0, double t_end,
                                            const std::vector<double>& dt_list) {
    if (dt_list.size() < 3)
        throw std::invalid_argument("need >= 3 dt values");
    for (std::size_t i = 0; i + 1 < dt_list.size(); ++i)
        if (std::abs(dt_list[i + 1] - 0.5 * dt_list[i]) > 1e-9 * dt_list[i])
            throw std::invalid_argument("dt values must halve successively");

    const SpectralField ref = run_fixed(u0, t_end, dt_list.back() / 8.0);
    ConvergenceResult res;
    for (double dt : dt_list) {
        const SpectralField u = run_fixed(u0, t_end, dt);
        res.errors.push_back(sobolev_norm(u - ref, 0.0));
    }
    const double floor = 1e-14 * (1.0 + sobolev_norm(ref, 0.0));
    bool all_tiny = true;
    for (double e : res.errors) all_tiny = all_tiny && e < floor;
    if (all_tiny) {
        res.defined = false;
        res.order = std::numeric_limits<double>::quiet_NaN();
        return res;
    }
    for (std::size_t i = 0; i + 1 < res.errors.size(); ++i)
        if (res.errors[i + 1] >= res.errors[i]) res.monotone = false;

    // least-squares slope of log(error) vs log(dt)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double npts = static_cast<double>(dt_list.size());
    for (std::size_t i = 0; i < dt_list.size(); ++i) {
        const double x = std::log(dt_list[i]);
        const double y = std::log(std::max(res.errors[i], 1e-300));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    res.order = (npts * sxy - sx * sy) / (npts * sxx - sx * sx);
    res.defined = true;
    return res;
}

} // namespace mwl
