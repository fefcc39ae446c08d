#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "mwl/field.hpp"
#include "oracle.hpp"

using namespace mwl;
using testing::TrigPoly;

namespace {
constexpr double pi = std::numbers::pi;

SpectralField random_field(GridPtr grid, int band, std::mt19937& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    SpectralField u(grid);
    u.set_coeff(0, uni(rng));
    for (int k = 1; k <= band; ++k)
        u.set_coeff(k, std::complex<double>(uni(rng), uni(rng)) / (1.0 + k));
    return u;
}
} // namespace

TEST_CASE("make_grid lays out points and rejects bad sizes") {
    const auto g8 = make_grid(8);
    CHECK(g8->size() == 8);
    CHECK(g8->period() == doctest::Approx(2 * pi));
    for (int j = 0; j < 8; ++j)
        CHECK(g8->points()[j] == doctest::Approx(pi * j / 4.0));
    CHECK(g8->max_wavenumber() == 4);
    CHECK(g8->wavenumber(5) == -3);

    const auto g4 = make_grid(4);
    CHECK(g4->points()[3] == doctest::Approx(3 * pi / 2));

    CHECK_THROWS_AS(make_grid(7), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(2), std::invalid_argument);
}

TEST_CASE("to_spectral resolves pure modes") {
    const auto grid = make_grid(16);
    const auto u = sample(grid, [](double x) { return std::cos(3 * x); });
    CHECK(std::abs(u.coeff(3) - 0.5) <= 1e-14);
    CHECK(std::abs(u.coeff(-3) - 0.5) <= 1e-14);
    for (int k = -7; k <= 8; ++k)
        if (k != 3 && k != -3) CHECK(std::abs(u.coeff(k)) <= 1e-14);

    const auto one = sample(grid, [](double) { return 1.0; });
    CHECK(std::abs(one.coeff(0) - 1.0) <= 1e-15);

    CHECK_THROWS_AS(to_spectral(std::vector<double>(5, 0.0), grid), std::invalid_argument);
}

TEST_CASE("physical-spectral round trip is exact to 10 eps") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    for (int n : {16, 64, 96}) { // includes a non-power-of-two size
        const auto grid = make_grid(n);
        std::vector<double> v(n);
        double linf = 0.0;
        for (auto& x : v) {
            x = uni(rng);
            linf = std::max(linf, std::abs(x));
        }
        const auto back = from_spectral(to_spectral(v, grid));
        const double tol = 10.0 * std::numeric_limits<double>::epsilon() * linf;
        for (int j = 0; j < n; ++j) CHECK(std::abs(back[j] - v[j]) <= tol);
    }
}

TEST_CASE("derivative acts as the exact eigen-multiplier") {
    const auto grid = make_grid(64);
    const auto u = sample(grid, [](double x) { return std::cos(2 * x); });
    const auto du = from_spectral(derivative(u, 1));
    for (int j = 0; j < 64; ++j)
        CHECK(du[j] == doctest::Approx(-2.0 * std::sin(2 * grid->points()[j])).epsilon(1e-13));

    SpectralField c(grid);
    c.set_coeff(0, 3.0);
    for (int order : {1, 2, 3, 4})
        CHECK(sobolev_norm(derivative(c, order), 0.0) == 0.0);

    const auto w = sample(grid, [](double x) { return std::cos(5 * x + 0.3); });
    const auto d2 = derivative(w, 2);
    const auto want = sample(grid, [](double x) { return -25.0 * std::cos(5 * x + 0.3); });
    CHECK(sobolev_norm(d2 - want, 0.0) <= 5e-12);

    CHECK_THROWS_AS(derivative(u, 5), std::invalid_argument);
}

TEST_CASE("odd-order derivatives zero the Nyquist mode") {
    const auto grid = make_grid(16);
    SpectralField u(grid);
    u.set_coeff(8, 1.0);
    CHECK(sobolev_norm(derivative(u, 1), 0.0) == 0.0);
    CHECK(sobolev_norm(derivative(u, 2), 0.0) > 0.0);
}

TEST_CASE("lambda_pow applies the Bessel-potential symbol") {
    const auto grid = make_grid(32);
    SpectralField u(grid);
    u.set_coeff(3, {1.0, 0.5});
    const auto v = lambda_pow(u, 2.0);
    CHECK(std::abs(v.coeff(3) - 10.0 * u.coeff(3)) <= 1e-14);

    std::mt19937 rng(3);
    const auto f = random_field(grid, 10, rng);
    CHECK(sobolev_norm(lambda_pow(f, 0.0) - f, 0.0) == 0.0);

    const auto c1 = sample(grid, [](double x) { return std::cos(x); });
    CHECK(sobolev_norm(lambda_pow(c1, -2.0) - 0.5 * c1, 0.0) <= 1e-14);

    // lambda_pow(., r) o lambda_pow(., -r) = identity
    for (double r : {0.5, 1.0, 3.5}) {
        const auto round = lambda_pow(lambda_pow(f, r), -r);
        CHECK(sobolev_norm(round - f, 0.0) <= 1e-12 * sobolev_norm(f, 0.0));
    }
}

TEST_CASE("sobolev_norm matches the closed-form single-mode values") {
    const auto grid = make_grid(256);
    const auto c4 = sample(grid, [](double x) { return std::cos(4 * x); });
    CHECK(sobolev_norm(c4, 1.0) == doctest::Approx(std::sqrt(17 * pi)).epsilon(1e-13));

    const auto one = sample(grid, [](double) { return 1.0; });
    for (double sigma : {0.0, 1.5, 3.0})
        CHECK(sobolev_norm(one, sigma) == doctest::Approx(std::sqrt(2 * pi)).epsilon(1e-13));

    CHECK(sobolev_norm(SpectralField(grid), 2.0) == 0.0);

    // sqrt(pi) (1+n^2)^{sigma/2} for all n <= N/3, several alignments
    for (int n : {1, 5, 17, 40, 85}) {
        for (double sigma : {0.0, 1.0, 1.5, 2.0, 3.5}) {
            for (double alpha : {0.0, 0.7, 2.1}) {
                const auto u =
                    sample(grid, [&](double x) { return std::cos(n * x - alpha); });
                const double want = std::sqrt(pi) * std::pow(1.0 + n * n, sigma / 2.0);
                CHECK(sobolev_norm(u, sigma) == doctest::Approx(want).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("H^0 norm squared equals the L2 inner product") {
    std::mt19937 rng(11);
    const auto grid = make_grid(64);
    for (int trial = 0; trial < 20; ++trial) {
        const auto u = random_field(grid, 20, rng);
        const double n0 = sobolev_norm(u, 0.0);
        CHECK(n0 * n0 == doctest::Approx(l2_inner(u, u)).epsilon(1e-12));
    }
}

TEST_CASE("winf_norm takes grid maxima of derivatives") {
    const auto grid = make_grid(256);
    const auto c1 = sample(grid, [](double x) { return std::cos(x); });
    CHECK(winf_norm(c1, 0) == doctest::Approx(1.0).epsilon(1e-3));

    const auto c3 = sample(grid, [](double x) { return std::cos(3 * x); });
    CHECK(winf_norm(c3, 1) == doctest::Approx(3.0).epsilon(1e-3));

    SpectralField c(grid);
    c.set_coeff(0, -2.5);
    CHECK(winf_norm(c, 2) == doctest::Approx(2.5));

    CHECK_THROWS_AS(winf_norm(c1, 3), std::invalid_argument);
}

TEST_CASE("multiply matches product identities and is alias-free") {
    const auto grid = make_grid(32);
    const auto c1 = sample(grid, [](double x) { return std::cos(x); });
    const auto want = sample(grid, [](double x) { return 0.5 + 0.5 * std::cos(2 * x); });
    CHECK(sobolev_norm(multiply(c1, c1) - want, 0.0) <= 1e-14);

    std::mt19937 rng(5);
    const auto f = random_field(grid, 10, rng);
    const auto one = sample(grid, [](double) { return 1.0; });
    CHECK(sobolev_norm(multiply(f, one) - f, 0.0) <= 1e-14 * sobolev_norm(f, 0.0));

    const auto c3 = sample(grid, [](double x) { return std::cos(3 * x); });
    const auto c5 = sample(grid, [](double x) { return std::cos(5 * x); });
    const auto prod = multiply(c3, c5);
    const auto exact =
        sample(grid, [](double x) { return 0.5 * (std::cos(2 * x) + std::cos(8 * x)); });
    CHECK(sobolev_norm(prod - exact, 0.0) <= 1e-14);
    // no aliased content anywhere else
    for (int k = 0; k <= 16; ++k)
        if (k != 2 && k != 8) CHECK(std::abs(prod.coeff(k)) <= 1e-14);

    CHECK_THROWS_AS(multiply(c3, sample(make_grid(16), [](double) { return 0.0; })),
                    std::invalid_argument);
}

TEST_CASE("multiply agrees with the exact convolution oracle") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const auto grid = make_grid(64);
    for (int trial = 0; trial < 10; ++trial) {
        TrigPoly pa = TrigPoly::constant(uni(rng));
        TrigPoly pb = TrigPoly::constant(uni(rng));
        for (int k = 1; k <= 10; ++k) {
            pa = pa + TrigPoly::cosine(k, uni(rng)) + TrigPoly::sine(k, uni(rng));
            pb = pb + TrigPoly::cosine(k, uni(rng)) + TrigPoly::sine(k, uni(rng));
        }
        const auto got = multiply(pa.to_field(grid), pb.to_field(grid));
        const auto want = (pa * pb).to_field(grid);
        CHECK(sobolev_norm(got - want, 0.0) <= 1e-13 * sobolev_norm(want, 0.0));
    }
}

TEST_CASE("l2_inner on trigonometric pairs") {
    const auto grid = make_grid(32);
    const auto c = sample(grid, [](double x) { return std::cos(x); });
    const auto s = sample(grid, [](double x) { return std::sin(x); });
    const auto one = sample(grid, [](double) { return 1.0; });
    CHECK(l2_inner(c, c) == doctest::Approx(pi).epsilon(1e-13));
    CHECK(std::abs(l2_inner(c, s)) <= 1e-14);
    CHECK(l2_inner(one, one) == doctest::Approx(2 * pi).epsilon(1e-13));
}

TEST_CASE("multiplier inequality probe stays bounded over 1000 samples") {
    std::mt19937 rng(23);
    const auto grid = make_grid(64);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = random_field(grid, 10, rng);
        const auto g = random_field(grid, 10, rng);
        const double denom = sobolev_norm(f, 1.0) * sobolev_norm(g, 2.0);
        if (denom == 0.0) continue;
        const double ratio = sobolev_norm(multiply(f, g), 1.0) / denom;
        CHECK(std::isfinite(ratio));
        worst = std::max(worst, ratio);
    }
    // empirical max recorded, never asserted against a specific constant
    MESSAGE("empirical multiplier constant (t=1, r=2): ", worst);
    CHECK(worst > 0.0);
}

TEST_CASE("translate shifts fields exactly") {
    const auto grid = make_grid(64);
    const auto u = sample(grid, [](double x) { return std::cos(3 * x) + 0.4 * std::sin(x); });
    const auto shifted = translate(u, 0.9);
    const auto want =
        sample(grid, [](double x) { return std::cos(3 * (x - 0.9)) + 0.4 * std::sin(x - 0.9); });
    CHECK(sobolev_norm(shifted - want, 0.0) <= 1e-13);
}
