#include "fsl/norms.hpp"

#include <algorithm>
#include <cmath>

namespace fsl {

double lp_norm(const SampledField& f, LebesgueExponent p, const Region& region) {
    const GridSpec& g = f.grid;
    if (f.values.size() != g.total())
        throw InvalidArgumentError("field size does not match its grid");
    if (region.dim() != g.d)
        throw DimensionMismatchError("region dimension " + std::to_string(region.dim()) +
                                     " does not match grid dimension " + std::to_string(g.d));

    double max_abs = 0.0;
    std::size_t count = 0;
    for_each_node(g, [&](std::size_t flat, std::span<const double> x) {
        if (!region.contains(x)) return;
        ++count;
        max_abs = std::max(max_abs, std::abs(f.values[flat]));
    });
    if (count == 0)
        throw EmptyRestrictionError("no grid node lies in the restriction region");
    if (p.is_infinite() || max_abs == 0.0) return max_abs;

    // factor out the peak so |f|/max stays in [0,1]; the p-th powers then
    // cannot overflow even for very large p, and scaling f by a power of two
    // scales the result exactly
    const double pw = p.p();
    double sum = 0.0;
    for_each_node(g, [&](std::size_t flat, std::span<const double> x) {
        if (!region.contains(x)) return;
        sum += std::pow(std::abs(f.values[flat]) / max_abs, pw);
    });
    return max_abs * std::pow(g.cell_volume() * sum, p.reciprocal());
}

EmbeddingBound hoelder_embedding_bound(const SampledField& g, LebesgueExponent q,
                                       LebesgueExponent q_tilde, const Region& omega) {
    if (q_tilde.reciprocal() < q.reciprocal())
        throw InvalidArgumentError("embedding requires q_tilde <= q");
    if (!omega.bounded())
        throw UnboundedRegionError("embedding bound needs a region of finite measure");
    const double measure = covered_measure(g.grid, omega);
    EmbeddingBound out;
    out.lhs = lp_norm(g, q_tilde, omega);
    out.rhs = std::pow(measure, q_tilde.reciprocal() - q.reciprocal()) * lp_norm(g, q, omega);
    return out;
}

double ratio(double f_norm_p, double Ff_norm_q) {
    if (!(f_norm_p > 0.0) || !std::isfinite(f_norm_p))
        throw InvalidArgumentError("norm ratio needs a positive finite denominator, got " +
                                   std::to_string(f_norm_p));
    return Ff_norm_q / f_norm_p;
}

}  // namespace fsl
