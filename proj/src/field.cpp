#include "mwl/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mwl/fft.hpp"

namespace mwl {

using detail::cd;

SpectralField::SpectralField(GridPtr grid)
    : grid_(std::move(grid)), c_(grid_->size(), cd{0.0, 0.0}) {}

void SpectralField::set_coeff(int k, std::complex<double> v) {
    const int n = grid_->size();
    if (k < -n / 2 + 1 || k > n / 2)
        throw std::invalid_argument("wavenumber out of range");
    c_[grid_->bin(k)] = v;
    if (k == 0 || k == n / 2) return;
    c_[grid_->bin(-k)] = std::conj(v);
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    if (!same_grid(*this, o)) throw std::invalid_argument("grid mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    if (!same_grid(*this, o)) throw std::invalid_argument("grid mismatch");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(double a) {
    for (auto& v : c_) v *= a;
    return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double a, SpectralField f) { return f *= a; }

bool same_grid(const SpectralField& a, const SpectralField& b) {
    return a.grid()->size() == b.grid()->size();
}

namespace {

void hermitian_symmetrize(std::vector<cd>& c) {
    const int n = static_cast<int>(c.size());
    c[0] = cd{c[0].real(), 0.0};
    for (int m = 1; m <= n / 2; ++m) {
        const int mm = n - m;
        if (mm == m) {
            c[m] = cd{c[m].real(), 0.0};
        } else {
            const cd h = 0.5 * (c[m] + std::conj(c[mm]));
            c[m] = h;
            c[mm] = std::conj(h);
        }
    }
}

} // namespace

SpectralField to_spectral(const std::vector<double>& values, GridPtr grid) {
    const int n = grid->size();
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("sample count does not match grid size");
    std::vector<cd> a(n);
    for (int j = 0; j < n; ++j) a[j] = cd{values[j], 0.0};
    detail::dft(a, /*inverse=*/false);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& v : a) v *= inv_n;
    hermitian_symmetrize(a);
    SpectralField f(std::move(grid));
    f.bins() = std::move(a);
    return f;
}

std::vector<double> from_spectral(const SpectralField& f) {
    std::vector<cd> a = f.bins();
    detail::dft(a, /*inverse=*/true);
    std::vector<double> out(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) out[j] = a[j].real();
    return out;
}

SpectralField derivative(const SpectralField& f, int order) {
    if (order < 0 || order > 4) throw std::invalid_argument("order must be in 0..4");
    if (order == 0) return f;
    const int n = f.size();
    SpectralField g(f.grid());
    for (int m = 0; m < n; ++m) {
        const int k = f.grid()->wavenumber(m);
        if (k == n / 2 && order % 2 == 1) {
            g.bins()[m] = cd{0.0, 0.0};
            continue;
        }
        cd sym{1.0, 0.0};
        const cd ik{0.0, static_cast<double>(k)};
        for (int p = 0; p < order; ++p) sym *= ik;
        g.bins()[m] = sym * f.bins()[m];
    }
    return g;
}

SpectralField lambda_pow(const SpectralField& f, SobolevIndex r) {
    const int n = f.size();
    SpectralField g(f.grid());
    for (int m = 0; m < n; ++m) {
        const double k = static_cast<double>(f.grid()->wavenumber(m));
        g.bins()[m] = std::pow(1.0 + k * k, 0.5 * r.value) * f.bins()[m];
    }
    return g;
}

double sobolev_norm(const SpectralField& f, SobolevIndex sigma) {
    double acc = 0.0;
    const int n = f.size();
    for (int m = 0; m < n; ++m) {
        const double k = static_cast<double>(f.grid()->wavenumber(m));
        acc += std::pow(1.0 + k * k, sigma.value) * std::norm(f.bins()[m]);
    }
    return std::sqrt(2.0 * std::numbers::pi * acc);
}

double winf_norm(const SpectralField& f, int m) {
    if (m < 0 || m > 2) throw std::invalid_argument("m must be in 0..2");
    double best = 0.0;
    for (int j = 0; j <= m; ++j) {
        const auto vals = from_spectral(derivative(f, j));
        for (double v : vals) best = std::max(best, std::abs(v));
    }
    return best;
}

namespace detail {

int padded_size(int n) {
    return static_cast<int>(next_pow2(static_cast<std::size_t>(3 * n)));
}

std::vector<double> padded_samples(const SpectralField& f, int m_pad) {
    const int n = f.size();
    std::vector<cd> big(m_pad, cd{0.0, 0.0});
    for (int k = -n / 2 + 1; k < n / 2; ++k)
        big[k >= 0 ? k : k + m_pad] = f.coeff(k);
    // split the Nyquist mode so the padded field stays real
    const cd nyq = 0.5 * f.coeff(n / 2);
    big[n / 2] += nyq;
    big[m_pad - n / 2] += nyq;
    dft(big, /*inverse=*/true);
    std::vector<double> out(m_pad);
    for (int j = 0; j < m_pad; ++j) out[j] = big[j].real();
    return out;
}

SpectralField truncate_from_padded(const std::vector<double>& samples, GridPtr grid) {
    const int m_pad = static_cast<int>(samples.size());
    const int n = grid->size();
    std::vector<cd> big(m_pad);
    for (int j = 0; j < m_pad; ++j) big[j] = cd{samples[j], 0.0};
    dft(big, /*inverse=*/false);
    const double inv = 1.0 / static_cast<double>(m_pad);
    SpectralField f(std::move(grid));
    for (int k = -n / 2 + 1; k < n / 2; ++k)
        f.bins()[k >= 0 ? k : k + n] = inv * big[k >= 0 ? k : k + m_pad];
    f.bins()[n / 2] = inv * (big[n / 2] + big[m_pad - n / 2]);
    hermitian_symmetrize(f.bins());
    return f;
}

} // namespace detail

SpectralField multiply(const SpectralField& a, const SpectralField& b) {
    if (!same_grid(a, b)) throw std::invalid_argument("grid mismatch");
    // Split the means off first: ab = a0*b0 + a0*wb + b0*wa + wa*wb. Only the
    // oscillation product needs the padded transform, so transform roundoff
    // scales with the oscillation amplitude rather than the mean.
    const double a0 = a.coeff(0).real();
    const double b0 = b.coeff(0).real();
    SpectralField wa = a;
    SpectralField wb = b;
    wa.bins()[0] = cd{0.0, 0.0};
    wb.bins()[0] = cd{0.0, 0.0};

    const int m_pad = detail::padded_size(a.size());
    auto va = detail::padded_samples(wa, m_pad);
    const auto vb = detail::padded_samples(wb, m_pad);
    for (int j = 0; j < m_pad; ++j) va[j] *= vb[j];
    SpectralField prod = detail::truncate_from_padded(va, a.grid());

    for (std::size_t m = 0; m < prod.bins().size(); ++m)
        prod.bins()[m] += a0 * wb.bins()[m] + b0 * wa.bins()[m];
    prod.bins()[0] += cd{a0 * b0, 0.0};
    return prod;
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
    if (!same_grid(a, b)) throw std::invalid_argument("grid mismatch");
    cd acc{0.0, 0.0};
    for (std::size_t m = 0; m < a.bins().size(); ++m)
        acc += a.bins()[m] * std::conj(b.bins()[m]);
    return 2.0 * std::numbers::pi * acc.real();
}

SpectralField translate(const SpectralField& f, double a) {
    SpectralField g(f.grid());
    const int n = f.size();
    for (int m = 0; m < n; ++m) {
        const double k = static_cast<double>(f.grid()->wavenumber(m));
        g.bins()[m] = f.bins()[m] * std::polar(1.0, -k * a);
    }
    // translating the Nyquist cosine leaves the grid representation real
    // only through symmetrization
    hermitian_symmetrize(g.bins());
    return g;
}

int band_limit(const SpectralField& f, double tol) {
    int best = 0;
    const int n = f.size();
    for (int m = 0; m < n; ++m) {
        if (std::abs(f.bins()[m]) > tol)
            best = std::max(best, std::abs(f.grid()->wavenumber(m)));
    }
    return best;
}

} // namespace mwl
