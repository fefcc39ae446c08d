#pragma once

#include <memory>
#include <vector>

namespace mwl {

/// Uniform collocation grid on [0, 2*pi) with N points and retained
/// wavenumbers k in {-N/2+1, ..., N/2}.
class SpectralGrid {
public:
    explicit SpectralGrid(int n_modes);

    int size() const { return n_; }
    double period() const;
    const std::vector<double>& points() const { return points_; }
    int max_wavenumber() const { return n_ / 2; }

    /// Wavenumber of storage bin m (bins follow DFT order; the Nyquist bin
    /// maps to +N/2).
    int wavenumber(int bin) const { return bin <= n_ / 2 ? bin : bin - n_; }
    /// Storage bin of wavenumber k in {-N/2+1, ..., N/2}.
    int bin(int k) const { return k >= 0 ? k : k + n_; }

private:
    int n_;
    std::vector<double> points_;
};

using GridPtr = std::shared_ptr<const SpectralGrid>;

/// Throws std::invalid_argument unless n_modes is even and >= 4.
GridPtr make_grid(int n_modes);

} // namespace mwl
