#include "fsl/stationary_phase.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

using namespace fsl;

TEST_CASE("phase derivatives match finite differences") {
    std::mt19937 rng(20240912);
    std::uniform_real_distribution<double> un(1.0, 100.0), uu(-1.0, 1.0);
    const double eps = 1e-6;

    for (int trial = 0; trial < 100; ++trial) {
        const int d = 1 + trial % 3;
        const double N = un(rng);
        std::vector<double> x(std::size_t(d), 0.0), xi(std::size_t(d), 0.0);
        for (auto& c : x) c = uu(rng) * N;
        for (auto& c : xi) c = uu(rng);
        auto phase = make_quadratic_phase(N, x);

        auto grad = phase_gradient(phase, xi);
        for (int k = 0; k < d; ++k) {
            auto hi = xi, lo = xi;
            hi[std::size_t(k)] += eps;
            lo[std::size_t(k)] -= eps;
            const double fd = (phase_value(phase, hi) - phase_value(phase, lo)) / (2.0 * eps);
            CHECK(std::abs(grad[std::size_t(k)] - fd) < 1e-6 * (1.0 + std::abs(fd)));

            // Hessian of the phase is -I; difference the gradient once more
            for (int j = 0; j < d; ++j) {
                const double gd = (phase_gradient(phase, hi)[std::size_t(j)] -
                                   phase_gradient(phase, lo)[std::size_t(j)]) / (2.0 * eps);
                const double want = (j == k) ? -1.0 : 0.0;
                CHECK(std::abs(gd - want) < 1e-6);
            }
        }
    }
}

TEST_CASE("critical point zeroes the gradient") {
    std::mt19937 rng(20240913);
    std::uniform_real_distribution<double> un(0.5, 200.0), ux(-50.0, 50.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = 1 + trial % 2;
        std::vector<double> x(std::size_t(d), 0.0);
        for (auto& c : x) c = ux(rng);
        auto phase = make_quadratic_phase(un(rng), x);
        auto star = critical_point(phase);
        auto grad = phase_gradient(phase, star);
        for (double g : grad) CHECK(g == 0.0);
    }
}

TEST_CASE("leading term frozen value and modulus") {
    auto phase = make_quadratic_phase(100.0, {50.0});
    cd lt = leading_term(phase);
    CHECK(lt.real() == doctest::Approx(0.165099889999747479).epsilon(1e-12));
    CHECK(lt.imag() == doctest::Approx(-0.188610390471646960).epsilon(1e-12));

    std::mt19937 rng(20240914);
    std::uniform_real_distribution<double> un(4.0, 400.0), uu(-0.6, 0.6);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 1 + trial % 3;
        const double N = un(rng);
        std::vector<double> x(std::size_t(d), 0.0);
        for (auto& c : x) c = uu(rng) * N / std::sqrt(double(d));
        auto ph = make_quadratic_phase(N, x);
        const double want = std::pow(2.0 * std::numbers::pi / N, 0.5 * d);
        CHECK(std::abs(leading_term(ph)) == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("leading term guards the boundary") {
    CHECK_NOTHROW(leading_term(make_quadratic_phase(10.0, {8.74})));
    CHECK_NOTHROW(leading_term(make_quadratic_phase(10.0, {8.75})));
    try {
        leading_term(make_quadratic_phase(10.0, {9.0}));
        FAIL("expected Error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).rfind("asymptotic invalid here", 0) == 0);
    }
}

TEST_CASE("gaussian window matches brute quadrature") {
    {
        auto phase = make_quadratic_phase(20.0, {10.0});
        const double s = 0.35;
        cd want = gaussian_window_integral(phase, s);

        auto grid = GridSpec::line(-6.0, 6.0, 4096);
        cd acc(0.0);
        for (std::size_t j = 0; j < 4096; ++j) {
            const double xi = grid.node(0, j);
            double pt[1] = {xi};
            acc += std::polar(std::exp(-xi * xi / (2.0 * s * s)),
                              phase.N * phase_value(phase, pt));
        }
        acc *= grid.step(0);
        CHECK(std::abs(acc - want) < 1e-8 * std::abs(want));
    }
    {
        auto phase = make_quadratic_phase(15.0, {6.0, -3.0});
        const double s = 0.3;
        cd want = gaussian_window_integral(phase, s);

        auto grid = GridSpec::make({-4.0, -4.0}, {4.0, 4.0}, {1024, 1024});
        cd acc(0.0);
        for_each_node(grid, [&](std::size_t, std::span<const double> xi) {
            const double r2 = xi[0] * xi[0] + xi[1] * xi[1];
            acc += std::polar(std::exp(-r2 / (2.0 * s * s)),
                              phase.N * phase_value(phase, xi));
        });
        acc *= grid.cell_volume();
        CHECK(std::abs(acc - want) < 1e-8 * std::abs(want));
    }
}

TEST_CASE("window integral approaches the leading term for wide windows") {
    auto phase = make_quadratic_phase(100.0, {50.0});
    cd lt = leading_term(phase);
    double prev = 1e300;
    for (double s : {2.0, 4.0, 8.0}) {
        const double rel = std::abs(gaussian_window_integral(phase, s) - lt) / std::abs(lt);
        CHECK(rel < prev);
        prev = rel;
    }
    CHECK(prev < 1e-2);
}

TEST_CASE("ball quadrature approaches the leading term") {
    for (double N : {16.0, 64.0}) {
        auto phase = make_quadratic_phase(N, {0.5 * N});
        const double err = asymptotic_error(phase, recommended_ball_grid(phase));
        CHECK(err < 0.5);
    }
}

TEST_CASE("quadrature error shrinks as N quadruples") {
    // boundary terms oscillate in N, so the contraction only shows up after
    // averaging over a spread of critical points
    auto mean_error = [](double N) {
        double total = 0.0;
        int count = 0;
        for (int i = 0; i < 15; ++i) {
            const double frac = 0.3 + 0.4 * double(i) / 14.0;
            auto phase = make_quadratic_phase(N, {frac * N});
            total += asymptotic_error(phase, recommended_ball_grid(phase));
            ++count;
        }
        return total / double(count);
    };
    const double e32 = mean_error(32.0);
    const double e128 = mean_error(128.0);
    CHECK(e128 <= 0.55 * e32);
}

TEST_CASE("far queries decay below the stationary amplitude") {
    auto phase = make_quadratic_phase(32.0, {70.0});
    cd far = ball_quadrature(phase, recommended_ball_grid(phase));
    CHECK(std::abs(far) <= 0.2 * std::pow(2.0 * std::numbers::pi / 32.0, 0.5));
}

TEST_CASE("coarse quadrature grids are rejected") {
    auto phase = make_quadratic_phase(200.0, {50.0});
    CHECK_THROWS_AS(ball_quadrature(phase, GridSpec::line(-1.0, 1.0, 64)), UndersampledError);

    auto narrow = GridSpec::line(-0.5, 1.0, 64);
    CHECK_THROWS_AS(ball_quadrature(phase, narrow), InvalidArgumentError);

    auto phase2 = make_quadratic_phase(20.0, {5.0, 5.0});
    CHECK_THROWS_AS(ball_quadrature(phase2, GridSpec::line(-1.0, 1.0, 512)),
                    DimensionMismatchError);
}

TEST_CASE("constructor and window validate their arguments") {
    CHECK_THROWS_AS(make_quadratic_phase(0.0, {1.0}), InvalidArgumentError);
    CHECK_THROWS_AS(make_quadratic_phase(-5.0, {1.0}), InvalidArgumentError);
    CHECK_THROWS_AS(make_quadratic_phase(10.0, {}), InvalidArgumentError);
    CHECK_THROWS_AS(make_quadratic_phase(10.0, {std::nan("")}), InvalidArgumentError);

    auto phase = make_quadratic_phase(10.0, {1.0});
    CHECK_THROWS_AS(gaussian_window_integral(phase, 0.0), InvalidArgumentError);
    CHECK_THROWS_AS(gaussian_window_integral(phase, -1.0), InvalidArgumentError);
}
