#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mwl/approx.hpp"
#include "mwl/integrator.hpp"
#include "mwl/model.hpp"

using namespace mwl;

TEST_CASE("zero and constants are exact fixed points of one step") {
    const auto grid = make_grid(64);
    CHECK(sobolev_norm(step_rk4(SpectralField(grid), 0.01), 0.0) == 0.0);

    SpectralField c(grid);
    c.set_coeff(0, 0.7);
    const auto c1 = step_rk4(c, 0.01);
    CHECK(std::abs(c1.coeff(0).real() - 0.7) <= 1e-15);
    for (int k = 1; k <= 32; ++k) CHECK(std::abs(c1.coeff(k)) <= 1e-16);

    CHECK_THROWS_AS(step_rk4(c, 0.0), std::invalid_argument);
}

TEST_CASE("halving dt shrinks the one-step error by about 2^5") {
    const auto grid = make_grid(128);
    const auto u0 = sample(grid, [](double x) {
        return 0.1 * std::cos(x) + 0.05 * std::sin(2 * x);
    });

    // one-step local error at dt and dt/2, each against a dt/16 reference
    // over its own interval
    auto local_error = [&](double h) {
        SpectralField ref = u0;
        for (int i = 0; i < 16; ++i) ref = step_rk4(ref, h / 16.0);
        return sobolev_norm(step_rk4(u0, h) - ref, 0.0);
    };
    const double dt = 0.02;
    const double ratio = local_error(dt) / local_error(dt / 2.0);
    CHECK(ratio >= 32.0 * 0.8);
    CHECK(ratio <= 32.0 * 1.2);
}

TEST_CASE("cfl_dt reads the transport speed") {
    const auto grid = make_grid(256);

    SpectralField still(grid);
    still.set_coeff(0, -1.0 / 14.0); // 1 + 14u = 0
    CHECK(cfl_dt(still, 0.5) == doctest::Approx(1e-2));

    CHECK(cfl_dt(SpectralField(grid), 0.5) == doctest::Approx(0.5 / 128.0).epsilon(1e-12));

    const auto u = approx_solution(ApproxParams(1, 16, 2.0), 0.0, grid);
    double speed = 0.0;
    for (double v : from_spectral(u)) speed = std::max(speed, std::abs(1.0 + 14.0 * v));
    CHECK(cfl_dt(u, 0.5) == doctest::Approx(std::min(0.5 / (128.0 * speed), 1e-2)));
}

TEST_CASE("simulate keeps trivial data trivial") {
    const auto grid = make_grid(64);
    SolverConfig cfg;
    cfg.n_modes = 64;
    cfg.t_end = 0.5;

    const Trajectory z = simulate(SpectralField(grid), cfg);
    CHECK(z.status == RunStatus::completed);
    for (double h : z.h1_series) CHECK(h == 0.0);

    SpectralField c(grid);
    c.set_coeff(0, 0.3);
    const Trajectory t = simulate(c, cfg);
    CHECK(t.status == RunStatus::completed);
    for (const auto& st : t.states)
        CHECK(std::abs(st.coeff(0).real() - 0.3) <= 1e-14);
}

TEST_CASE("simulate conserves H1 and respects the doubling bound") {
    const auto grid = make_grid(256);
    const auto u0 = approx_solution(ApproxParams(1, 16, 2.0), 0.0, grid);
    SolverConfig cfg;
    cfg.n_modes = 256;
    cfg.t_end = 1.0;
    cfg.monitor_s = 2.0;

    const Trajectory traj = simulate(u0, cfg);
    CHECK(traj.status == RunStatus::completed);
    CHECK(traj.h1_drift() <= 1e-8);
    CHECK(traj.h1_series.front() == doctest::Approx(h1_energy(u0)));
    const double hs0 = traj.hs_series.front();
    for (double hs : traj.hs_series) CHECK(hs <= 2.0 * hs0);
    for (std::size_t i = 1; i < traj.times.size(); ++i)
        CHECK(traj.times[i] > traj.times[i - 1]);
}

TEST_CASE("simulate lands exactly on requested checkpoints") {
    const auto grid = make_grid(128);
    const auto u0 = approx_solution(ApproxParams(1, 8, 2.0), 0.0, grid);
    SolverConfig cfg;
    cfg.n_modes = 128;
    cfg.t_end = 0.5;
    cfg.checkpoints = {0.17, 0.33};

    const Trajectory traj = simulate(u0, cfg);
    CHECK(traj.status == RunStatus::completed);
    CHECK_NOTHROW(traj.state_at(0.17));
    CHECK_NOTHROW(traj.state_at(0.33));
    CHECK_NOTHROW(traj.state_at(0.5));
    CHECK_THROWS_AS(traj.state_at(0.1234), std::invalid_argument);
}

TEST_CASE("simulate flags breakdown instead of running on") {
    const auto grid = make_grid(128);
    const auto u0 = approx_solution(ApproxParams(1, 8, 2.0), 0.0, grid);
    SolverConfig cfg;
    cfg.n_modes = 128;
    cfg.t_end = 1.0;
    cfg.breakdown_slope = 1e-4; // any nonzero slope trips it
    const Trajectory traj = simulate(u0, cfg);
    CHECK(traj.status == RunStatus::breakdown);
    CHECK(traj.stop_time < 1.0);
}

TEST_CASE("simulate rejects under-resolved initial data") {
    const auto grid = make_grid(64);
    const auto u0 = sample(grid, [](double x) { return 0.1 * std::cos(20 * x); });
    SolverConfig cfg;
    cfg.n_modes = 64;
    CHECK_THROWS_AS(simulate(u0, cfg), std::invalid_argument);
}

TEST_CASE("spatial self-convergence under N doubling") {
    SolverConfig cfg;
    cfg.t_end = 0.25;
    cfg.monitor_s = 2.0;
    double prev = 0.0;
    for (int idx = 0; idx < 2; ++idx) {
        const int nn = idx == 0 ? 128 : 256;
        const auto grid = make_grid(nn);
        cfg.n_modes = nn;
        const auto u0 = approx_solution(ApproxParams(1, 8, 2.0), 0.0, grid);
        const Trajectory traj = simulate(u0, cfg);
        const double norm_end = traj.hs_series.back();
        if (idx == 1) CHECK(std::abs(norm_end - prev) <= 1e-9);
        prev = norm_end;
    }
}

TEST_CASE("t0_lower_bound evaluates the displayed formula") {
    const auto grid = make_grid(64);
    // constant field with ||.||_{H1} = ||.||_{Hs} = 1
    SpectralField c(grid);
    c.set_coeff(0, 1.0 / std::sqrt(2.0 * std::numbers::pi));
    CHECK(t0_lower_bound(c, 2.0, 1.0) == doctest::Approx(0.25).epsilon(1e-12));

    // doubling the Hs factor alone divides T0 by 8: verify homogeneity
    const auto u0 = approx_solution(ApproxParams(1, 8, 2.0), 0.0, grid);
    const double h1 = sobolev_norm(u0, 1.0);
    const double hs = sobolev_norm(u0, 2.0);
    const double h1_5 = std::pow(h1, 5.0);
    const double want = h1_5 / (2.0 * (1.0 + h1_5) * std::pow(hs, 3.0));
    CHECK(t0_lower_bound(u0, 2.0, 1.0) == doctest::Approx(want).epsilon(1e-12));
    CHECK(t0_lower_bound(u0, 2.0, 2.0) == doctest::Approx(want / 2.0).epsilon(1e-12));

    CHECK_THROWS_AS(t0_lower_bound(SpectralField(grid), 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("measure_convergence_order sees fourth order on smooth data") {
    const auto grid = make_grid(64);
    const auto u0 = sample(grid, [](double x) {
        return 0.1 * std::cos(x) + 0.05 * std::sin(2 * x);
    });
    const std::vector<double> dts{4e-3, 2e-3, 1e-3};
    const ConvergenceResult res = measure_convergence_order(u0, 0.5, dts);
    CHECK(res.defined);
    CHECK(res.order >= 3.8);
    CHECK(res.order <= 4.2);
}

TEST_CASE("measure_convergence_order preconditions and degenerate cases") {
    const auto grid = make_grid(64);
    const auto u0 = approx_solution(ApproxParams(1, 4, 2.0), 0.0, grid);
    CHECK_THROWS_AS(measure_convergence_order(u0, 0.1, {1e-3, 5e-4}), std::invalid_argument);
    CHECK_THROWS_AS(measure_convergence_order(u0, 0.1, {1e-3, 6e-4, 3e-4}),
                    std::invalid_argument);

    const ConvergenceResult zero =
        measure_convergence_order(SpectralField(grid), 0.1, {4e-3, 2e-3, 1e-3});
    CHECK_FALSE(zero.defined);
    CHECK(std::isnan(zero.order));
}
