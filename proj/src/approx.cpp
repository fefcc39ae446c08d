#include "mwl/approx.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "mwl/model.hpp"

namespace mwl {

using cd = std::complex<double>;

ApproxParams::ApproxParams(int omega_, int n_, SobolevIndex s_)
    : omega(omega_), n(n_), s(s_) {
    if (omega != -1 && omega != 1) throw std::invalid_argument("omega must be -1 or +1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (!(s.value > 1.5)) throw std::invalid_argument("s must be > 3/2");
}

namespace {

void require_resolved(const ApproxParams& p, const GridPtr& grid, int harmonic) {
    if (harmonic * p.n > grid->size() / 2)
        throw std::invalid_argument("grid does not resolve the requested harmonics");
}

} // namespace

SpectralField approx_solution(const ApproxParams& p, double t, GridPtr grid) {
    if (p.n > grid->size() / 8)
        throw std::invalid_argument("approx_solution requires n <= N/8");
    SpectralField u(std::move(grid));
    const double amp = -std::pow(static_cast<double>(p.n), -p.s.value) / 28.0;
    u.set_coeff(0, (p.omega / static_cast<double>(p.n) - 1.0) / 14.0);
    u.set_coeff(p.n, amp * std::polar(1.0, p.omega * t));
    return u;
}

SpectralField approx_time_derivative(const ApproxParams& p, double t, GridPtr grid) {
    if (p.n > grid->size() / 8)
        throw std::invalid_argument("approx_time_derivative requires n <= N/8");
    SpectralField u(std::move(grid));
    // (omega n^{-s}/14) sin(nx + omega t): c_n = -i omega n^{-s} e^{i omega t}/28
    const cd cn = cd{0.0, -p.omega * std::pow(static_cast<double>(p.n), -p.s.value) / 28.0} *
                  std::polar(1.0, p.omega * t);
    u.set_coeff(p.n, cn);
    return u;
}

SpectralField residual_E(const ApproxParams& p, double t, GridPtr grid) {
    const SpectralField u = approx_solution(p, t, grid);
    return approx_time_derivative(p, t, grid) - rhs_nonlocal(u).total;
}

SpectralField analytic_E1(const ApproxParams& p, double t, GridPtr grid) {
    require_resolved(p, grid, 2);
    SpectralField e(std::move(grid));
    const double amp = std::pow(static_cast<double>(p.n), -2.0 * p.s.value + 1.0) / 28.0;
    // amp * sin(2(nx + omega t)): c_{2n} = amp e^{2 i omega t} / (2i)
    e.set_coeff(2 * p.n, amp * std::polar(1.0, 2.0 * p.omega * t) * cd{0.0, -0.5});
    return e;
}

namespace {

// Trigonometric polynomial over harmonics m*n, m in -4..4, as exact
// coefficient algebra; independent of the transform path.
struct Harmonics {
    std::array<cd, 9> c{}; // index m+4

    cd& at(int m) { return c[static_cast<std::size_t>(m + 4)]; }
    cd at(int m) const { return c[static_cast<std::size_t>(m + 4)]; }

    Harmonics mul(const Harmonics& o) const {
        Harmonics r;
        for (int a = -4; a <= 4; ++a) {
            if (c[a + 4] == cd{}) continue;
            for (int b = -4; b <= 4; ++b) {
                const int m = a + b;
                if (m < -4 || m > 4) continue;
                r.at(m) += at(a) * o.at(b);
            }
        }
        return r;
    }

    Harmonics scaled(double f) const {
        Harmonics r = *this;
        for (auto& v : r.c) v *= f;
        return r;
    }

    Harmonics& add(const Harmonics& o, double f) {
        for (int i = 0; i < 9; ++i) c[i] += f * o.c[i];
        return *this;
    }
};

} // namespace

SpectralField analytic_E2(const ApproxParams& p, double t, GridPtr grid) {
    require_resolved(p, grid, 4);
    const double n = static_cast<double>(p.n);

    Harmonics u;
    u.at(0) = (p.omega / n - 1.0) / 14.0;
    u.at(1) = -std::pow(n, -p.s.value) / 28.0 * std::polar(1.0, p.omega * t);
    u.at(-1) = std::conj(u.at(1));

    auto deriv = [&](const Harmonics& f) {
        Harmonics r;
        for (int m = -4; m <= 4; ++m) r.at(m) = cd{0.0, m * n} * f.at(m);
        return r;
    };

    const Harmonics ux = deriv(u);
    const Harmonics uxx = deriv(ux);
    const Harmonics u2 = u.mul(u);
    const Harmonics u3 = u2.mul(u);

    Harmonics g;
    g.add(ux.mul(uxx), 14.0);
    g.add(u3.mul(ux), -12.0);
    g.add(u2.mul(ux), 6.0);
    g.add(u.mul(ux), -20.0);
    g.add(ux, -2.0);

    SpectralField e(std::move(grid));
    for (int m = 0; m <= 4; ++m) {
        const double k = m * n;
        e.set_coeff(m * p.n, g.at(m) / (1.0 + k * k));
    }
    return e;
}

double rate_bound(SobolevIndex s, SobolevIndex sigma, int n) {
    if (!(sigma.value > 0.5 && sigma.value <= 1.0))
        throw std::invalid_argument("sigma must be in (1/2, 1]");
    if (!(s.value > 1.5)) throw std::invalid_argument("s must be > 3/2");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const double nn = static_cast<double>(n);
    const double expo =
        s.value < 2.0 ? -2.0 * s.value + 1.0 + sigma.value : -s.value - 1.0 + sigma.value;
    return std::pow(nn, expo);
}

} // namespace mwl
