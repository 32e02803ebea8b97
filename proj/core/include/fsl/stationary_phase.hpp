#ifndef FSL_STATIONARY_PHASE_HPP
#define FSL_STATIONARY_PHASE_HPP

#include <span>
#include <vector>

#include "fsl/grid.hpp"

namespace fsl {

/// The quadratic phase psi_N(xi; x) = (x/N).xi - |xi|^2/2 integrated over the
/// unit ball: I(x) = integral_{B(1)} e^{i N psi_N(xi; x)} dxi. Its unique
/// critical point xi* = x/N has Hessian -I.
struct QuadraticPhase {
    double N = 1.0;
    std::vector<double> x;

    int dim() const { return int(x.size()); }
};

/// Validates N > 0, finite x, d >= 1.
QuadraticPhase make_quadratic_phase(double N, std::vector<double> x);

double phase_value(const QuadraticPhase& phase, std::span<const double> xi);
std::vector<double> phase_gradient(const QuadraticPhase& phase, std::span<const double> xi);

/// xi* = x/N. Throws for N <= 0.
std::vector<double> critical_point(const QuadraticPhase& phase);

/// (2 pi / N)^{d/2} e^{-i pi d / 4} e^{i |x|^2 / (2N)}.
/// Requires the critical point at distance >= 1/8 from the boundary of the
/// unit ball (|xi*| <= 7/8); otherwise throws Error("asymptotic invalid here").
cd leading_term(const QuadraticPhase& phase);

/// Midpoint quadrature of I(x) over B(1) on the given grid (which must cover
/// [-1,1]^d; nodes outside the ball contribute zero). The sampling rule of
/// fourier_direct applies and is enforced.
cd ball_quadrature(const QuadraticPhase& phase, const GridSpec& quad_grid);

/// Grid over [-1,1]^d sized by the sampling rule for this phase
/// (oversample = samples per period, >= 8).
GridSpec recommended_ball_grid(const QuadraticPhase& phase, double oversample = 10.0);

/// |ball_quadrature - leading_term| / |leading_term|.
double asymptotic_error(const QuadraticPhase& phase, const GridSpec& quad_grid);

/// Analytic value of the Gaussian-windowed integral
///   integral_{R^d} e^{i N psi_N(xi; x)} e^{-|xi|^2/(2 s^2)} dxi
///     = (pi/A)^{d/2} e^{-|x|^2/(4A)},  A = 1/(2 s^2) + i N/2.
/// As s -> inf this tends to leading_term; the test suite uses it as an
/// independent oracle for the amplitude and signature factors.
cd gaussian_window_integral(const QuadraticPhase& phase, double s);

}  // namespace fsl

#endif  // FSL_STATIONARY_PHASE_HPP
