#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mwl/field.hpp"

namespace mwl {

struct SolverConfig {
    int n_modes = 256;
    std::optional<double> dt;       // nullopt = auto (CFL-controlled)
    double t_end = 1.0;
    double cfl = 0.5;
    double dt_max = 1e-2;
    double dt_min = 1e-7;
    int record_every = 1;
    double breakdown_slope = 1e3;
    double breakdown_norm_factor = 1e2;
    double monitor_s = 2.0;              // index of the recorded H^s series
    std::vector<double> checkpoints;     // times the stepper must land on
};

enum class RunStatus { completed, breakdown, nan };

struct Trajectory {
    std::vector<double> times;
    std::vector<SpectralField> states;
    std::vector<double> h1_series;
    std::vector<double> hs_series;
    std::vector<double> min_slope_series;
    RunStatus status = RunStatus::completed;
    double stop_time = 0.0; // time of breakdown/nan, or t_end

    /// Recorded state at time t (within tol); throws if absent.
    const SpectralField& state_at(double t, double tol = 1e-9) const;
    /// Max relative H^1 drift against the initial value.
    double h1_drift() const;
};

/// One classical 4-stage Runge-Kutta step of u' = rhs_nonlocal(u).total.
SpectralField step_rk4(const SpectralField& u, double dt);

/// cfl / (k_max * max|1 + 14u|), capped at dt_max and floored (with a
/// warning) at dt_min.
double cfl_dt(const SpectralField& u, double cfl, double dt_max = 1e-2,
              double dt_min = 1e-7);

/// Integrates up to t_end or breakdown; requires real initial data
/// band-limited to <= N/6 modes.
Trajectory simulate(const SpectralField& u0, const SolverConfig& cfg);

/// Structural existence-time lower bound
/// ||u0||_{H1}^5 / (2C (1 + ||u0||_{H1}^5) ||u0||_{Hs}^3); C is structural,
/// not quantitative. Throws on zero initial data.
double t0_lower_bound(const SpectralField& u0, SobolevIndex s, double C);

struct ConvergenceResult {
    double order = 0.0;         // NaN when undefined (zero errors)
    bool defined = false;
    bool monotone = true;       // reported, never asserted
    std::vector<double> errors; // one per dt, against the finest-dt reference
};

/// Observed temporal order from a halving dt sequence (>= 3 values) against
/// a reference computed at dt_list.back()/8.
ConvergenceResult measure_convergence_order(const SpectralField& u0, double t_end,
                                            const std::vector<double>& dt_list);

} // namespace mwl
