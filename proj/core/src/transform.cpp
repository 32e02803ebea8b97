#include "fsl/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

namespace fsl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// sampling rule: at least 8 nodes per period of the total phase rate
constexpr double kMaxPhasePerStep = kTwoPi / 8.0;
// the inner rotor e^{-i h xi} is re-anchored to a fresh std::polar this often
constexpr std::size_t kRotorResync = 8192;

struct SupportRun {
    std::size_t begin, end;  // [begin, end) within one row
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void run_chunked(std::size_t count,
                 const std::function<void(std::size_t, std::size_t)>& work) {
    const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t n_threads = std::min<std::size_t>(hw, std::max<std::size_t>(count, 1));
    if (n_threads <= 1) {
        work(0, count);
        return;
    }
    const std::size_t chunk = (count + n_threads - 1) / n_threads;
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < n_threads; ++t) {
        const std::size_t begin = t * chunk;
        const std::size_t end = std::min(count, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(work, begin, end);
    }
    for (auto& th : pool) th.join();
}

}  // namespace

TransformMethod parse_method(const std::string& text) {
    if (text == "closed") return TransformMethod::ClosedForm;
    if (text == "quad") return TransformMethod::DirectQuadrature;
    if (text == "fast") return TransformMethod::FastTransform;
    throw InvalidArgumentError("unknown method '" + text + "' (expected closed|quad|fast)");
}

std::string format_method(TransformMethod m) {
    switch (m) {
        case TransformMethod::ClosedForm: return "closed";
        case TransformMethod::DirectQuadrature: return "quad";
        case TransformMethod::FastTransform: return "fast";
    }
    return "?";
}

std::vector<double> estimate_max_frequency(const SampledField& f) {
    const GridSpec& g = f.grid;
    const int d = g.d;
    std::vector<double> est(std::size_t(d), 0.0);

    std::vector<std::size_t> stride(std::size_t(d), 1);
    for (int k = d - 2; k >= 0; --k)
        stride[std::size_t(k)] = stride[std::size_t(k) + 1] * g.n[std::size_t(k) + 1];

    for (int k = 0; k < d; ++k) {
        const auto uk = std::size_t(k);
        if (g.n[uk] < 2) continue;
        const std::size_t s = stride[uk];
        const std::size_t block = s * g.n[uk];
        const std::size_t n_blocks = g.total() / block;
        double max_dphase = 0.0;
        for (std::size_t b = 0; b < n_blocks; ++b) {
            for (std::size_t inner = 0; inner < s; ++inner) {
                const std::size_t base = b * block + inner;
                for (std::size_t j = 0; j + 1 < g.n[uk]; ++j) {
                    const cd v1 = f.values[base + j * s];
                    const cd v2 = f.values[base + (j + 1) * s];
                    if (v1 == cd(0.0) || v2 == cd(0.0)) continue;
                    max_dphase = std::max(max_dphase, std::abs(std::arg(v2 * std::conj(v1))));
                }
            }
        }
        est[uk] = max_dphase / g.step(k);
    }
    return est;
}

std::vector<cd> fourier_direct(const SampledField& f, const PointList& xi) {
    const GridSpec& g = f.grid;
    if (f.values.size() != g.total())
        throw InvalidArgumentError("field size does not match its grid");
    if (xi.d != g.d)
        throw DimensionMismatchError("frequency points have dimension " +
                                     std::to_string(xi.d) + ", field has " +
                                     std::to_string(g.d));
    const std::size_t n_xi = xi.size();
    if (n_xi == 0) return {};

    const int d = g.d;
    std::vector<double> max_xi(std::size_t(d), 0.0);
    for (std::size_t i = 0; i < n_xi; ++i) {
        auto pt = xi[i];
        for (int k = 0; k < d; ++k)
            max_xi[std::size_t(k)] = std::max(max_xi[std::size_t(k)], std::abs(pt[std::size_t(k)]));
    }

    // sampling rule: the estimate is taken from the data itself, so callers
    // that know the analytic phase should size grids from it as well (an
    // aliased chirp can evade a purely sample-based check)
    const std::vector<double> est = estimate_max_frequency(f);
    for (int k = 0; k < d; ++k) {
        const double rate = est[std::size_t(k)] + max_xi[std::size_t(k)];
        const double h = g.step(k);
        if (rate * h > kMaxPhasePerStep * (1.0 + 1e-9))
            throw UndersampledError("axis " + std::to_string(k) + " has " +
                                    fmt(kTwoPi / (rate * h)) +
                                    " samples per period of rate " + fmt(rate) +
                                    ", rule requires 8");
    }

    const std::size_t n_last = g.n[std::size_t(d - 1)];
    const std::size_t n_rows = g.total() / n_last;
    const double h_last = g.step(d - 1);
    const double x0_last = g.node(d - 1, 0);

    std::vector<std::vector<SupportRun>> runs(n_rows);
    for (std::size_t r = 0; r < n_rows; ++r) {
        const cd* row = f.values.data() + r * n_last;
        std::size_t j = 0;
        while (j < n_last) {
            while (j < n_last && row[j] == cd(0.0)) ++j;
            if (j == n_last) break;
            std::size_t b = j;
            while (j < n_last && row[j] != cd(0.0)) ++j;
            runs[r].push_back({b, j});
        }
    }

    // node coordinates of the leading axes, one tuple per row
    std::vector<double> row_x(n_rows * std::size_t(d - 1));
    for (std::size_t r = 0; r < n_rows; ++r) {
        std::size_t rest = r;
        for (int k = d - 2; k >= 0; --k) {
            const auto uk = std::size_t(k);
            row_x[r * std::size_t(d - 1) + uk] = g.node(k, rest % g.n[uk]);
            rest /= g.n[uk];
        }
    }

    const double cell = g.cell_volume();
    std::vector<cd> out(n_xi);

    run_chunked(n_xi, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const auto pt = xi[i];
            const double xi_last = pt[std::size_t(d - 1)];
            const cd rot = std::polar(1.0, -h_last * xi_last);
            cd acc(0.0);
            for (std::size_t r = 0; r < n_rows; ++r) {
                if (runs[r].empty()) continue;
                double theta_base = 0.0;
                for (int k = 0; k < d - 1; ++k)
                    theta_base += row_x[r * std::size_t(d - 1) + std::size_t(k)] * pt[std::size_t(k)];
                const cd* row = f.values.data() + r * n_last;
                for (const SupportRun& run : runs[r]) {
                    std::size_t j = run.begin;
                    while (j < run.end) {
                        const std::size_t stop = std::min(run.end, j + kRotorResync);
                        cd ph = std::polar(1.0, -(theta_base + (x0_last + double(j) * h_last) * xi_last));
                        for (; j < stop; ++j) {
                            acc += row[j] * ph;
                            ph *= rot;
                        }
                    }
                }
            }
            out[i] = acc * cell;
        }
    });
    return out;
}

GridSpec dual_grid(const GridSpec& space) {
    std::vector<double> lo(std::size_t(space.d)), hi(std::size_t(space.d));
    for (int k = 0; k < space.d; ++k) {
        const auto uk = std::size_t(k);
        const double dxi = kTwoPi / (space.hi[uk] - space.lo[uk]);
        const double shift = double(space.n[uk] / 2);
        lo[uk] = -(shift + 0.5) * dxi;
        hi[uk] = lo[uk] + double(space.n[uk]) * dxi;
    }
    return GridSpec::make(std::move(lo), std::move(hi), space.n, space.total());
}

cd closed_form_box_chirp(double a, double b, double M, std::span<const double> xi) {
    if (!(a < b)) throw InvalidArgumentError("box chirp needs a < b");
    if (xi.empty()) throw DimensionMismatchError("box chirp needs at least one frequency component");
    const double len = b - a;
    cd prod(1.0);
    for (double xik : xi) {
        const double theta = M - xik;
        const double w = len * theta;
        cd phi;
        if (std::abs(w) < 1e-6) {
            // e^{ia theta} (b-a) (1 + iw/2 + (iw)^2/6), truncation < 1e-19
            phi = std::polar(len, a * theta) * cd(1.0 - w * w / 6.0, 0.5 * w);
        } else {
            phi = (std::polar(1.0, b * theta) - std::polar(1.0, a * theta)) * cd(0.0, -1.0 / theta);
        }
        prod *= phi;
    }
    return prod;
}

SampledField dilate(const SampledField& f, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw InvalidArgumentError("dilation factor must be positive, got " +
                                   std::to_string(lambda));
    const GridSpec& g = f.grid;
    std::vector<double> lo(g.lo), hi(g.hi);
    for (int k = 0; k < g.d; ++k) {
        lo[std::size_t(k)] /= lambda;
        hi[std::size_t(k)] /= lambda;
    }
    SampledField out;
    out.grid = GridSpec::make(std::move(lo), std::move(hi), g.n, g.total());
    out.values = f.values;
    return out;
}

}  // namespace fsl
