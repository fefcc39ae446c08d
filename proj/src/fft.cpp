#include "mwl/fft.hpp"

#include <cmath>
#include <numbers>

namespace mwl::detail {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

namespace {

void fft_radix2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j |= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    std::vector<cd> w(n / 2);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang =
            (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
        const std::size_t half = len / 2;
        for (std::size_t j = 0; j < half; ++j)
            w[j] = std::polar(1.0, ang * static_cast<double>(j));
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < half; ++j) {
                const cd u = a[i + j];
                const cd v = a[i + j + half] * w[j];
                a[i + j] = u + v;
                a[i + j + half] = u - v;
            }
        }
    }
}

void dft_direct(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    std::vector<cd> e(n);
    const double ang =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
        e[j] = std::polar(1.0, ang * static_cast<double>(j));
    std::vector<cd> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cd acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) acc += a[j] * e[(j * m) % n];
        out[m] = acc;
    }
    a = std::move(out);
}

} // namespace

void dft(std::vector<cd>& a, bool inverse) {
    if (a.size() <= 1) return;
    if (is_pow2(a.size()))
        fft_radix2(a, inverse);
    else
        dft_direct(a, inverse);
}

} // namespace mwl::detail
