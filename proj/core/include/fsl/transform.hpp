#ifndef FSL_TRANSFORM_HPP
#define FSL_TRANSFORM_HPP

#include <span>
#include <vector>

#include "fsl/grid.hpp"

namespace fsl {

/// Convention used throughout:
///   forward   F f(xi) = integral f(x) e^{-i x.xi} dx
///   inverse   f(x)    = (2 pi)^{-d} integral g(xi) e^{+i x.xi} dxi
/// Both integrals are approximated by the midpoint rule on the field's grid.

enum class TransformMethod { ClosedForm, DirectQuadrature, FastTransform };

TransformMethod parse_method(const std::string& text);
std::string format_method(TransformMethod m);

/// Midpoint-rule forward transform evaluated at an arbitrary list of
/// frequencies. Before summing, the sampling rule is checked on every axis:
/// the grid must place at least 8 nodes per period of
/// (estimated max |d phase/dx_k| of the samples) + max |xi_k| over the
/// requested frequencies, otherwise UndersampledError is thrown.
std::vector<cd> fourier_direct(const SampledField& f, const PointList& xi);

/// Per-axis estimate of the largest instantaneous frequency of the samples,
/// max over adjacent node pairs of |arg(v_{j+1}/v_j)| / h (pairs with a zero
/// value are skipped). This is the quantity fourier_direct's check uses.
std::vector<double> estimate_max_frequency(const SampledField& f);

/// Frequency grid canonically paired with a space grid: per axis,
/// dxi = 2 pi / (hi - lo), n unchanged, nodes xi_k = k dxi for integer
/// k = m - n/2 (midpoint layout with lo_xi = -(n/2 + 1/2) dxi).
GridSpec dual_grid(const GridSpec& space);

/// FFT-accelerated forward transform on the canonical dual grid.
/// Agrees with fourier_direct at the dual nodes up to roundoff; no sampling
/// check is applied (the dual grid reaches the Nyquist band by design).
SampledField fourier_fast(const SampledField& f);

/// Midpoint-rule inverse transform of a field sampled on the canonical dual
/// of `space`; exact inverse of fourier_fast on that pairing. Throws if the
/// grids are not canonically paired.
SampledField inverse_fourier(const SampledField& g, const GridSpec& space);

/// Convenience overload: reconstructs on the zero-centered space grid
/// determined by the frequency grid (h = 2 pi / (n dxi)).
SampledField inverse_fourier(const SampledField& g);

/// Closed-form transform of x -> e^{i M (x_1+...+x_d)} on the box [a, b]^d:
///   F(xi) = prod_k (e^{i b (M - xi_k)} - e^{i a (M - xi_k)}) / (i (M - xi_k)),
/// with the removable singularity at xi_k = M filled in by series. Requires
/// a < b; M may be any real.
cd closed_form_box_chirp(double a, double b, double M, std::span<const double> xi);

/// Dilation f_lambda(x) = f(lambda x): keeps the sample array and rescales
/// the grid bounds by 1/lambda, so the node values are exact. Requires
/// lambda > 0.
SampledField dilate(const SampledField& f, double lambda);

}  // namespace fsl

#endif  // FSL_TRANSFORM_HPP
