#ifndef FSL_GRID_HPP
#define FSL_GRID_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "fsl/errors.hpp"
#include "fsl/region.hpp"

namespace fsl {

using cd = std::complex<double>;

/// Global node budget: FSL_BUDGET_NODES from the environment if set,
/// otherwise 10^7. Read once per process.
std::size_t grid_node_budget();

/// A uniform tensor grid over the box [lo_0,hi_0) x ... x [lo_{d-1},hi_{d-1})
/// with midpoint nodes x_{k,j} = lo_k + (j + 1/2) h_k, h_k = (hi_k - lo_k)/n_k.
/// Storage convention for attached values is row-major with the last axis
/// varying fastest.
struct GridSpec {
    int d = 0;
    std::vector<double> lo, hi;
    std::vector<std::size_t> n;

    /// Validates shapes and bounds and enforces the node budget
    /// (`budget` = 0 means the global default). Throws on violation.
    static GridSpec make(std::vector<double> lo, std::vector<double> hi,
                         std::vector<std::size_t> n, std::size_t budget = 0);

    /// 1d convenience.
    static GridSpec line(double lo, double hi, std::size_t n, std::size_t budget = 0);

    std::size_t total() const;
    double step(int axis) const { return (hi[axis] - lo[axis]) / double(n[axis]); }
    double node(int axis, std::size_t j) const {
        return lo[axis] + (double(j) + 0.5) * step(axis);
    }
    double cell_volume() const;
};

/// Applies f(flat_index, x) to every node of the grid in storage order.
/// x is a view of a scratch buffer overwritten between calls.
void for_each_node(const GridSpec& grid,
                   const std::function<void(std::size_t, std::span<const double>)>& f);

/// A flat list of points in R^d (row-major, one row per point).
struct PointList {
    int d = 0;
    std::vector<double> coords;

    explicit PointList(int dim = 0) : d(dim) {}

    std::size_t size() const { return d > 0 ? coords.size() / std::size_t(d) : 0; }
    std::span<const double> operator[](std::size_t i) const {
        return {coords.data() + i * std::size_t(d), std::size_t(d)};
    }
    void push(std::span<const double> x) {
        if (int(x.size()) != d) throw DimensionMismatchError("point pushed into PointList");
        coords.insert(coords.end(), x.begin(), x.end());
    }
};

/// Complex samples attached to the nodes of a grid.
struct SampledField {
    GridSpec grid;
    std::vector<cd> values;

    /// Throws if values.size() != grid.total() or any entry is non-finite.
    void validate() const;
};

/// Samples fn at every node. The result is validated.
SampledField make_field(const GridSpec& grid,
                        const std::function<cd(std::span<const double>)>& fn);

/// Nodes of `grid` lying in `region`, together with their flat indices.
struct MaskedNodes {
    PointList points;
    std::vector<std::size_t> indices;
};
MaskedNodes nodes_in_region(const GridSpec& grid, const Region& region);

/// Grid measure of the region as seen by the midpoint rule:
/// cell_volume * #(nodes inside region).
double covered_measure(const GridSpec& grid, const Region& region);

}  // namespace fsl

#endif  // FSL_GRID_HPP
