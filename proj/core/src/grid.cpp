#include "fsl/grid.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace fsl {

std::size_t grid_node_budget() {
    static const std::size_t budget = [] {
        if (const char* env = std::getenv("FSL_BUDGET_NODES")) {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && v > 0) return std::size_t(v);
        }
        return std::size_t(10'000'000);
    }();
    return budget;
}

GridSpec GridSpec::make(std::vector<double> lo, std::vector<double> hi,
                        std::vector<std::size_t> n, std::size_t budget) {
    if (lo.empty() || lo.size() != hi.size() || lo.size() != n.size())
        throw DimensionMismatchError("grid bounds/counts have inconsistent sizes");
    for (std::size_t k = 0; k < lo.size(); ++k) {
        if (!std::isfinite(lo[k]) || !std::isfinite(hi[k]) || !(lo[k] < hi[k]))
            throw InvalidArgumentError("grid needs finite lo < hi on every axis");
        if (n[k] == 0) throw InvalidArgumentError("grid needs n >= 1 on every axis");
    }
    if (budget == 0) budget = grid_node_budget();
    std::size_t total = 1;
    for (std::size_t nk : n) {
        if (nk > budget / total)
            throw BudgetExceededError("grid would have more than " + std::to_string(budget) +
                                      " nodes");
        total *= nk;
    }
    GridSpec g;
    g.d = int(lo.size());
    g.lo = std::move(lo);
    g.hi = std::move(hi);
    g.n = std::move(n);
    return g;
}

GridSpec GridSpec::line(double lo, double hi, std::size_t n, std::size_t budget) {
    return make({lo}, {hi}, {n}, budget);
}

std::size_t GridSpec::total() const {
    std::size_t t = 1;
    for (std::size_t nk : n) t *= nk;
    return t;
}

double GridSpec::cell_volume() const {
    double v = 1.0;
    for (int k = 0; k < d; ++k) v *= step(k);
    return v;
}

void for_each_node(const GridSpec& grid,
                   const std::function<void(std::size_t, std::span<const double>)>& f) {
    const int d = grid.d;
    std::vector<std::size_t> idx(std::size_t(d), 0);
    std::vector<double> x(std::size_t(d), 0.0);
    std::vector<double> h(std::size_t(d), 0.0);
    for (int k = 0; k < d; ++k) {
        h[std::size_t(k)] = grid.step(k);
        x[std::size_t(k)] = grid.node(k, 0);
    }
    const std::size_t total = grid.total();
    for (std::size_t flat = 0; flat < total; ++flat) {
        f(flat, std::span<const double>(x));
        // odometer increment, last axis fastest
        for (int k = d - 1; k >= 0; --k) {
            auto uk = std::size_t(k);
            if (++idx[uk] < grid.n[uk]) {
                x[uk] = grid.node(k, idx[uk]);
                break;
            }
            idx[uk] = 0;
            x[uk] = grid.node(k, 0);
        }
    }
}

void SampledField::validate() const {
    if (values.size() != grid.total())
        throw InvalidArgumentError("field has " + std::to_string(values.size()) +
                                   " values for " + std::to_string(grid.total()) + " nodes");
    for (const cd& v : values)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw InvalidArgumentError("field contains a non-finite value");
}

SampledField make_field(const GridSpec& grid,
                        const std::function<cd(std::span<const double>)>& fn) {
    SampledField f;
    f.grid = grid;
    f.values.resize(grid.total());
    for_each_node(grid, [&](std::size_t flat, std::span<const double> x) {
        f.values[flat] = fn(x);
    });
    f.validate();
    return f;
}

MaskedNodes nodes_in_region(const GridSpec& grid, const Region& region) {
    if (region.dim() != grid.d)
        throw DimensionMismatchError("region dimension " + std::to_string(region.dim()) +
                                     " vs grid dimension " + std::to_string(grid.d));
    MaskedNodes m;
    m.points = PointList(grid.d);
    for_each_node(grid, [&](std::size_t flat, std::span<const double> x) {
        if (region.contains(x)) {
            m.points.push(x);
            m.indices.push_back(flat);
        }
    });
    return m;
}

double covered_measure(const GridSpec& grid, const Region& region) {
    if (region.dim() != grid.d)
        throw DimensionMismatchError("region dimension " + std::to_string(region.dim()) +
                                     " vs grid dimension " + std::to_string(grid.d));
    std::size_t count = 0;
    for_each_node(grid, [&](std::size_t, std::span<const double> x) {
        if (region.contains(x)) ++count;
    });
    return grid.cell_volume() * double(count);
}

}  // namespace fsl
