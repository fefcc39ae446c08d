#pragma once

#include <complex>
#include <vector>

#include "mwl/grid.hpp"

namespace mwl {

/// Sobolev exponent (the s, sigma, r, k of the various norms).
struct SobolevIndex {
    double value;
    SobolevIndex(double v) : value(v) {} // NOLINT: implicit by design
};

/// Real periodic function stored as complex Fourier coefficients,
/// u(x) = sum_k c_k e^{ikx} with c_{-k} = conj(c_k). Coefficients live in
/// DFT bin order; use coeff()/set_coeff() to address them by wavenumber.
class SpectralField {
public:
    explicit SpectralField(GridPtr grid);

    const GridPtr& grid() const { return grid_; }
    int size() const { return grid_->size(); }

    std::complex<double> coeff(int k) const { return c_[grid_->bin(k)]; }
    /// Sets c_k and its conjugate partner c_{-k} (for k != 0, k != N/2).
    void set_coeff(int k, std::complex<double> v);

    const std::vector<std::complex<double>>& bins() const { return c_; }
    std::vector<std::complex<double>>& bins() { return c_; }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(double a);

private:
    GridPtr grid_;
    std::vector<std::complex<double>> c_;
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

/// Discrete Fourier analysis of collocation samples; enforces Hermitian
/// symmetry so the result represents a real field.
SpectralField to_spectral(const std::vector<double>& values, GridPtr grid);
/// Collocation samples of the field.
std::vector<double> from_spectral(const SpectralField& f);

/// Builds a field from a pointwise function of x, sampled on the grid.
template <class F>
SpectralField sample(GridPtr grid, F&& fn) {
    std::vector<double> v(grid->size());
    for (int j = 0; j < grid->size(); ++j) v[j] = fn(grid->points()[j]);
    return to_spectral(v, grid);
}

/// d^order/dx^order via c_k -> (ik)^order c_k; the Nyquist mode is zeroed
/// under odd orders so derivatives of real fields stay real. order <= 4.
SpectralField derivative(const SpectralField& f, int order);

/// Fourier multiplier with symbol (1+k^2)^{r/2}.
SpectralField lambda_pow(const SpectralField& f, SobolevIndex r);

/// sqrt(2*pi * sum_k (1+k^2)^sigma |c_k|^2); normalized so that
/// ||1||_{H^sigma} = sqrt(2*pi) and ||cos(n.)||_{H^sigma} = sqrt(pi)(1+n^2)^{sigma/2}.
double sobolev_norm(const SpectralField& f, SobolevIndex sigma);

/// max_{0<=j<=m} max over collocation points of |d^j u/dx^j|; m <= 2.
/// A grid maximum, not a true supremum (O(N^-2) off for band-limited fields).
double winf_norm(const SpectralField& f, int m);

/// Dealiased pointwise product: evaluated on a zero-padded grid of >= 3N
/// points, truncated back to N modes.
SpectralField multiply(const SpectralField& a, const SpectralField& b);

/// 2*pi * Re sum_k c_k(a) conj(c_k(b)).
double l2_inner(const SpectralField& a, const SpectralField& b);

/// u(x) -> u(x - a).
SpectralField translate(const SpectralField& f, double a);

/// Largest |k| with |c_k| > tol, or 0 for the zero field.
int band_limit(const SpectralField& f, double tol = 1e-13);

bool same_grid(const SpectralField& a, const SpectralField& b);

namespace detail {
/// Zero-pads coefficients of f onto a grid of m_pad bins (Nyquist split in
/// half) and returns collocation samples there.
std::vector<double> padded_samples(const SpectralField& f, int m_pad);
/// Analyzes padded samples and truncates back to the grid of the prototype.
SpectralField truncate_from_padded(const std::vector<double>& samples, GridPtr grid);
int padded_size(int n);
} // namespace detail

} // namespace mwl
