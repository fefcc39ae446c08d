#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace mwl::detail {

using cd = std::complex<double>;

bool is_pow2(std::size_t n);
std::size_t next_pow2(std::size_t n);

/// In-place DFT: X_m = sum_j x_j e^{-2*pi*i*j*m/n} (forward), conjugate sign
/// when inverse. No 1/n scaling in either direction. Radix-2 for power-of-two
/// sizes, direct summation otherwise.
void dft(std::vector<cd>& a, bool inverse);

} // namespace mwl::detail
