#ifndef FSL_NORMS_HPP
#define FSL_NORMS_HPP

#include "fsl/exponents.hpp"
#include "fsl/grid.hpp"
#include "fsl/region.hpp"

namespace fsl {

/// Midpoint-rule L^p norm of f restricted to `region`:
///   finite p: (h^d sum_{x_j in region} |f(x_j)|^p)^{1/p}
///   p = inf:  max over nodes in region.
/// The sum is evaluated with the largest modulus factored out, so the result
/// is exactly 1-homogeneous under power-of-two scalings and immune to
/// overflow for large p. Throws EmptyRestrictionError when no node lies in
/// the region, DimensionMismatchError on dimension disagreement.
double lp_norm(const SampledField& f, LebesgueExponent p, const Region& region);

/// Both sides of the finite-measure embedding
///   ||g||_{L^{q_tilde}(omega)} <= |omega|^{1/q_tilde - 1/q} ||g||_{L^q(omega)}
/// for q_tilde <= q, with |omega| taken as the grid-covered measure
/// (cell volume x node count), which makes the discrete inequality exact.
struct EmbeddingBound {
    double lhs;
    double rhs;
};
EmbeddingBound hoelder_embedding_bound(const SampledField& g, LebesgueExponent q,
                                       LebesgueExponent q_tilde, const Region& omega);

/// Ff_norm_q / f_norm_p. Throws on a zero (or negative) denominator.
double ratio(double f_norm_p, double Ff_norm_q);

}  // namespace fsl

#endif  // FSL_NORMS_HPP
