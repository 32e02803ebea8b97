#include "fsl/stationary_phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "fsl/transform.hpp"

namespace fsl {

namespace {

double norm_sq(std::span<const double> v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return s;
}

void check_dim(const QuadraticPhase& phase, std::span<const double> xi) {
    if (int(xi.size()) != phase.dim())
        throw DimensionMismatchError("phase has dimension " + std::to_string(phase.dim()) +
                                     ", point has " + std::to_string(xi.size()));
}

}  // namespace

QuadraticPhase make_quadratic_phase(double N, std::vector<double> x) {
    if (!(N > 0.0) || !std::isfinite(N))
        throw InvalidArgumentError("phase parameter N must be positive and finite");
    if (x.empty())
        throw InvalidArgumentError("phase needs at least one coordinate");
    for (double c : x)
        if (!std::isfinite(c))
            throw InvalidArgumentError("phase center must have finite coordinates");
    return {N, std::move(x)};
}

double phase_value(const QuadraticPhase& phase, std::span<const double> xi) {
    check_dim(phase, xi);
    double dot = 0.0;
    for (int k = 0; k < phase.dim(); ++k)
        dot += (phase.x[std::size_t(k)] / phase.N) * xi[std::size_t(k)];
    return dot - 0.5 * norm_sq(xi);
}

std::vector<double> phase_gradient(const QuadraticPhase& phase, std::span<const double> xi) {
    check_dim(phase, xi);
    std::vector<double> g(xi.size(), 0.0);
    for (int k = 0; k < phase.dim(); ++k)
        g[std::size_t(k)] = phase.x[std::size_t(k)] / phase.N - xi[std::size_t(k)];
    return g;
}

std::vector<double> critical_point(const QuadraticPhase& phase) {
    if (!(phase.N > 0.0))
        throw InvalidArgumentError("phase parameter N must be positive");
    std::vector<double> xi(phase.x);
    for (double& c : xi) c /= phase.N;
    return xi;
}

cd leading_term(const QuadraticPhase& phase) {
    const std::vector<double> star = critical_point(phase);
    const double radius = std::sqrt(norm_sq(star));
    if (radius > 0.875 + 1e-12) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.6g", radius);
        throw Error("asymptotic invalid here: critical point at radius " + std::string(buf) +
                    ", need <= 7/8");
    }
    const int d = phase.dim();
    const double amp = std::pow(2.0 * std::numbers::pi / phase.N, 0.5 * d);
    const double ang = 0.5 * norm_sq(phase.x) / phase.N - 0.25 * std::numbers::pi * d;
    return std::polar(amp, ang);
}

cd ball_quadrature(const QuadraticPhase& phase, const GridSpec& quad_grid) {
    const int d = phase.dim();
    if (quad_grid.d != d)
        throw DimensionMismatchError("quadrature grid dimension does not match the phase");
    for (int k = 0; k < d; ++k)
        if (quad_grid.lo[std::size_t(k)] > -1.0 || quad_grid.hi[std::size_t(k)] < 1.0)
            throw InvalidArgumentError("quadrature grid must cover [-1,1]^d");

    // I(x) = integral_{B(1)} e^{i x.xi} e^{-i N |xi|^2/2} dxi, which is the
    // forward transform of the masked chirp evaluated at -x
    const double N = phase.N;
    Region ball = Region::ball(d, 1.0);
    auto field = make_field(quad_grid, [&](std::span<const double> xi) {
        if (!ball.contains(xi)) return cd(0.0);
        return std::polar(1.0, -0.5 * N * norm_sq(xi));
    });
    PointList pts(d);
    std::vector<double> minus_x(phase.x);
    for (double& c : minus_x) c = -c;
    pts.push(minus_x);
    return fourier_direct(field, pts)[0];
}

GridSpec recommended_ball_grid(const QuadraticPhase& phase, double oversample) {
    const int d = phase.dim();
    const double over = std::max(oversample, 8.0);
    std::vector<double> lo(std::size_t(d), -1.0), hi(std::size_t(d), 1.0);
    std::vector<std::size_t> n(std::size_t(d), 0);
    for (int k = 0; k < d; ++k) {
        const double rate = phase.N + std::abs(phase.x[std::size_t(k)]);
        const double nodes = 2.0 * over * rate / (2.0 * std::numbers::pi);
        n[std::size_t(k)] = std::max<std::size_t>(64, std::size_t(std::ceil(nodes)));
    }
    return GridSpec::make(std::move(lo), std::move(hi), std::move(n));
}

double asymptotic_error(const QuadraticPhase& phase, const GridSpec& quad_grid) {
    const cd lead = leading_term(phase);
    const cd quad = ball_quadrature(phase, quad_grid);
    return std::abs(quad - lead) / std::abs(lead);
}

cd gaussian_window_integral(const QuadraticPhase& phase, double s) {
    if (!(s > 0.0) || !std::isfinite(s))
        throw InvalidArgumentError("window width must be positive and finite");
    const int d = phase.dim();
    const cd A(1.0 / (2.0 * s * s), 0.5 * phase.N);
    const cd amp = std::pow(cd(std::numbers::pi) / A, 0.5 * d);
    return amp * std::exp(-cd(norm_sq(phase.x)) / (4.0 * A));
}

}  // namespace fsl
