#pragma once

#include "mwl/field.hpp"

namespace mwl {

/// Parameters of the explicit two-mode approximate solution
/// u(t,x) = (omega/n - 1 - n^{-s} cos(nx + omega*t)) / 14.
struct ApproxParams {
    int omega;      // -1 or +1
    int n;          // spatial frequency, >= 1
    SobolevIndex s; // > 3/2

    ApproxParams(int omega_, int n_, SobolevIndex s_);
};

/// Exact spectral representation: c_0 = (omega/n - 1)/14,
/// c_{+-n} = -n^{-s} e^{+-i omega t}/28. Requires n <= N/8.
SpectralField approx_solution(const ApproxParams& p, double t, GridPtr grid);

/// Analytic d/dt: (omega n^{-s}/14) sin(nx + omega t).
SpectralField approx_time_derivative(const ApproxParams& p, double t, GridPtr grid);

/// Defect of the approximate solution in the nonlocal equation:
/// u_t - rhs_nonlocal(u).total. Requires n <= N/8.
SpectralField residual_E(const ApproxParams& p, double t, GridPtr grid);

/// Closed form (n^{-2s+1}/28) sin(2(nx + omega t)); requires 2n <= N/2.
SpectralField analytic_E1(const ApproxParams& p, double t, GridPtr grid);

/// Lambda^{-2}(14 u_x u_xx - 12 u^3 u_x + 6 u^2 u_x - 20 u u_x - 2 u_x),
/// evaluated by exact finite-mode convolution (harmonics up to 4n);
/// requires 4n <= N/2. Serves as oracle via E = E1 - E2.
SpectralField analytic_E2(const ApproxParams& p, double t, GridPtr grid);

/// Theoretical residual-decay bound: n^{-2s+1+sigma} when 3/2 < s < 2,
/// n^{-s-1+sigma} when s >= 2. Requires 1/2 < sigma <= 1.
double rate_bound(SobolevIndex s, SobolevIndex sigma, int n);

} // namespace mwl
