#include "mwl/checks.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "mwl/approx.hpp"
#include "mwl/experiments.hpp"
#include "mwl/model.hpp"

namespace mwl {

namespace {

SpectralField random_band_limited(GridPtr grid, int band, double w1inf_cap,
                                  std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SpectralField u(grid);
    u.set_coeff(0, 0.3 * uni(rng));
    for (int k = 1; k <= band; ++k) {
        const double decay = 1.0 / (1.0 + k * k);
        u.set_coeff(k, std::complex<double>(uni(rng), uni(rng)) * decay);
    }
    const double w = winf_norm(u, 1);
    if (w > w1inf_cap) u *= w1inf_cap / w;
    return u;
}

CheckResult check_operator_exactness() {
    const auto grid = make_grid(128);
    double worst = 0.0;
    for (int n : {1, 3, 7, 20, 40}) {
        for (double sigma : {0.0, 1.0, 1.5, 2.0, 3.5}) {
            for (double alpha : {0.0, 0.7}) {
                const auto u = sample(grid, [&](double x) { return std::cos(n * x - alpha); });
                const double want = std::sqrt(std::numbers::pi) *
                                    std::pow(1.0 + n * n, sigma / 2.0);
                worst = std::max(worst, std::abs(sobolev_norm(u, sigma) - want) / want);
            }
        }
        // lambda_pow scales the single mode by exactly (1+k^2)^{r/2}
        SpectralField mode(grid);
        mode.set_coeff(n, {0.4, 0.3});
        for (double r : {-2.0, 0.5, 2.0}) {
            const auto scaled = lambda_pow(mode, r);
            const double want = std::pow(1.0 + n * n, r / 2.0);
            worst = std::max(worst,
                             std::abs(std::abs(scaled.coeff(n) / mode.coeff(n)) - want) / want);
        }
    }
    std::ostringstream os;
    os << "max relative deviation " << worst;
    return CheckResult{"operator_exactness", worst <= 1e-12, os.str()};
}

CheckResult check_local_nonlocal_consistency(unsigned seed) {
    std::mt19937 rng(seed);
    const auto grid = make_grid(128);
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto u = random_band_limited(grid, grid->size() / 6, 1.0, rng);
        const double scale =
            1e-9 * (1.0 + std::pow(winf_norm(u, 1), 3.0)) * sobolev_norm(u, 4.0);
        worst = std::max(worst, local_form_residual(u) / scale);
    }
    std::ostringstream os;
    os << "max scaled residual fraction " << worst;
    return CheckResult{"local_nonlocal_consistency", worst <= 1.0, os.str()};
}

CheckResult check_residual_decomposition() {
    double worst = 0.0;
    for (int omega : {-1, 1}) {
        for (int n : {4, 8, 16}) {
            // 16n keeps E2's fourth harmonic strictly below the Nyquist mode
            const auto grid = make_grid(study_grid_size(n, 16 * n));
            for (double s : {1.6, 2.0, 2.5}) {
                for (double t : {0.0, 0.3, 1.0}) {
                    const ApproxParams p(omega, n, s);
                    const SpectralField e = residual_E(p, t, grid);
                    const SpectralField e1 = analytic_E1(p, t, grid);
                    const SpectralField e2 = analytic_E2(p, t, grid);
                    const double rel = sobolev_norm(e - (e1 - e2), 0.0) /
                                       sobolev_norm(e1, 0.0);
                    worst = std::max(worst, rel);
                }
            }
        }
    }
    std::ostringstream os;
    os << "max ||E - (E1 - E2)|| / ||E1|| = " << worst;
    return CheckResult{"residual_decomposition", worst <= 1e-11, os.str()};
}

CheckResult check_interpolation_suite(unsigned seed) {
    std::mt19937 rng(seed + 1);
    const auto grid = make_grid(64);
    bool ok = true;
    double worst_ratio = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto u = random_band_limited(grid, 16, 10.0, rng);
        const auto c = check_interpolation(u, 1.0, 2.0, 4.0);
        ok = ok && c.holds;
        worst_ratio = std::max(worst_ratio, c.ratio);
    }
    std::ostringstream os;
    os << "max ratio " << worst_ratio;
    return CheckResult{"interpolation", ok, os.str()};
}

} // namespace

std::vector<CheckResult> run_self_checks(unsigned seed) {
    return {
        check_operator_exactness(),
        check_local_nonlocal_consistency(seed),
        check_residual_decomposition(),
        check_interpolation_suite(seed),
    };
}

} // namespace mwl
