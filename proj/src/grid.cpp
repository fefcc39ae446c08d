#include "mwl/grid.hpp"

#include <numbers>
#include <stdexcept>

namespace mwl {

SpectralGrid::SpectralGrid(int n_modes) : n_(n_modes) {
    if (n_modes < 4) throw std::invalid_argument("n_modes must be >= 4");
    if (n_modes % 2 != 0) throw std::invalid_argument("n_modes must be even");
    points_.resize(n_);
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n_);
    for (int j = 0; j < n_; ++j) points_[j] = h * j;
}

double SpectralGrid::period() const { return 2.0 * std::numbers::pi; }

GridPtr make_grid(int n_modes) { return std::make_shared<SpectralGrid>(n_modes); }

} // namespace mwl
