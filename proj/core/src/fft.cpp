#include "fsl/transform.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace fsl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<int> int_dims(const GridSpec& g) {
    std::vector<int> dims;
    dims.resize(std::size_t(g.d));
    for (int k = 0; k < g.d; ++k) {
        if (g.n[std::size_t(k)] > std::size_t(std::numeric_limits<int>::max()))
            throw BudgetExceededError("axis " + std::to_string(k) + " is too large for the fast transform");
        dims[std::size_t(k)] = int(g.n[std::size_t(k)]);
    }
    return dims;
}

void execute_dft(const GridSpec& g, std::vector<cd>& buf, int sign) {
    auto dims = int_dims(g);
    fftw_plan plan = fftw_plan_dft(g.d, dims.data(),
                                   reinterpret_cast<fftw_complex*>(buf.data()),
                                   reinterpret_cast<fftw_complex*>(buf.data()),
                                   sign, FFTW_ESTIMATE);
    if (!plan) throw Error("fast transform planning failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

// Walks all output multi-indices m (last axis fastest) and hands the visitor
// the flat output index, the matching flat DFT index, and the accumulated
// per-axis factor product.
template <class Visit>
void for_each_paired_index(const GridSpec& g,
                           const std::vector<std::vector<cd>>& fac,
                           const std::vector<std::vector<std::size_t>>& dft_ofs,
                           Visit visit) {
    const int d = g.d;
    const auto ud = std::size_t(d);
    std::vector<std::size_t> m(ud, 0);
    std::vector<cd> pf(ud);
    std::vector<std::size_t> po(ud);
    auto refresh = [&](int from) {
        for (int k = from; k < d; ++k) {
            const auto uk = std::size_t(k);
            pf[uk] = (k ? pf[uk - 1] : cd(1.0)) * fac[uk][m[uk]];
            po[uk] = (k ? po[uk - 1] : 0) + dft_ofs[uk][m[uk]];
        }
    };
    refresh(0);
    const std::size_t total = g.total();
    for (std::size_t flat = 0; flat < total; ++flat) {
        visit(flat, po[ud - 1], pf[ud - 1]);
        int k = d - 1;
        for (; k >= 0; --k) {
            auto& mk = m[std::size_t(k)];
            if (++mk < g.n[std::size_t(k)]) break;
            mk = 0;
        }
        if (k < 0) break;
        refresh(k);
    }
}

std::vector<std::size_t> dft_strides(const GridSpec& g) {
    std::vector<std::size_t> stride(std::size_t(g.d), 1);
    for (int k = g.d - 2; k >= 0; --k)
        stride[std::size_t(k)] = stride[std::size_t(k) + 1] * g.n[std::size_t(k) + 1];
    return stride;
}

}  // namespace

SampledField fourier_fast(const SampledField& f) {
    const GridSpec& g = f.grid;
    if (f.values.size() != g.total())
        throw InvalidArgumentError("field size does not match its grid");
    const int d = g.d;
    GridSpec freq = dual_grid(g);

    std::vector<cd> work(f.values);
    execute_dft(g, work, FFTW_FORWARD);

    // G(xi_m) = prod_k h_k e^{-i(lo_k + h_k/2) xi_{m_k}} * D[(m - n/2) mod n]
    const auto stride = dft_strides(g);
    std::vector<std::vector<cd>> fac(std::size_t(d), std::vector<cd>{});
    std::vector<std::vector<std::size_t>> ofs(std::size_t(d), std::vector<std::size_t>{});
    for (int k = 0; k < d; ++k) {
        const auto uk = std::size_t(k);
        const auto nk = std::ptrdiff_t(g.n[uk]);
        const std::ptrdiff_t shift = nk / 2;
        const double dxi = freq.step(k);
        const double h = g.step(k);
        const double xoff = g.lo[uk] + 0.5 * h;
        fac[uk].resize(std::size_t(nk));
        ofs[uk].resize(std::size_t(nk));
        for (std::ptrdiff_t m = 0; m < nk; ++m) {
            const double xik = double(m - shift) * dxi;
            fac[uk][std::size_t(m)] = std::polar(h, -xoff * xik);
            ofs[uk][std::size_t(m)] = std::size_t((m - shift + nk) % nk) * stride[uk];
        }
    }

    SampledField out;
    out.grid = std::move(freq);
    out.values.resize(g.total());
    for_each_paired_index(g, fac, ofs, [&](std::size_t flat, std::size_t dft_flat, cd factor) {
        out.values[flat] = factor * work[dft_flat];
    });
    return out;
}

SampledField inverse_fourier(const SampledField& g_hat, const GridSpec& space) {
    const GridSpec& fg = g_hat.grid;
    if (g_hat.values.size() != fg.total())
        throw InvalidArgumentError("field size does not match its grid");
    if (fg.d != space.d)
        throw DimensionMismatchError("frequency grid has dimension " + std::to_string(fg.d) +
                                     ", space grid has " + std::to_string(space.d));
    const int d = space.d;
    for (int k = 0; k < d; ++k) {
        const auto uk = std::size_t(k);
        if (fg.n[uk] != space.n[uk])
            throw InvalidArgumentError("frequency grid is not the canonical dual of the space grid (node counts differ on axis " +
                                       std::to_string(k) + ")");
        const double dxi = fg.step(k);
        const double h = space.step(k);
        if (std::abs(dxi * double(space.n[uk]) * h - kTwoPi) > 1e-9 * kTwoPi ||
            std::abs(fg.lo[uk] + (double(space.n[uk] / 2) + 0.5) * dxi) > 1e-9 * dxi)
            throw InvalidArgumentError("frequency grid is not the canonical dual of the space grid (axis " +
                                       std::to_string(k) + ")");
    }

    // W[(m - n/2) mod n] = G(xi_m) e^{+i(lo_k + h_k/2) xi_{m_k}} / (n_k h_k),
    // then one backward DFT gives the samples on the space grid exactly
    const auto stride = dft_strides(space);
    std::vector<std::vector<cd>> fac(std::size_t(d), std::vector<cd>{});
    std::vector<std::vector<std::size_t>> ofs(std::size_t(d), std::vector<std::size_t>{});
    for (int k = 0; k < d; ++k) {
        const auto uk = std::size_t(k);
        const auto nk = std::ptrdiff_t(space.n[uk]);
        const std::ptrdiff_t shift = nk / 2;
        const double dxi = fg.step(k);
        const double h = space.step(k);
        const double xoff = space.lo[uk] + 0.5 * h;
        fac[uk].resize(std::size_t(nk));
        ofs[uk].resize(std::size_t(nk));
        for (std::ptrdiff_t m = 0; m < nk; ++m) {
            const double xik = double(m - shift) * dxi;
            fac[uk][std::size_t(m)] = std::polar(1.0 / (double(nk) * h), xoff * xik);
            ofs[uk][std::size_t(m)] = std::size_t((m - shift + nk) % nk) * stride[uk];
        }
    }

    std::vector<cd> work(fg.total(), cd(0.0));
    for_each_paired_index(fg, fac, ofs, [&](std::size_t flat, std::size_t dft_flat, cd factor) {
        work[dft_flat] = factor * g_hat.values[flat];
    });
    execute_dft(space, work, FFTW_BACKWARD);

    SampledField out;
    out.grid = space;
    out.values = std::move(work);
    return out;
}

SampledField inverse_fourier(const SampledField& g_hat) {
    const GridSpec& fg = g_hat.grid;
    const int d = fg.d;
    std::vector<double> lo(std::size_t(d), 0.0), hi(std::size_t(d), 0.0);
    for (int k = 0; k < d; ++k) {
        const auto uk = std::size_t(k);
        const double h = kTwoPi / (fg.step(k) * double(fg.n[uk]));
        const double len = h * double(fg.n[uk]);
        lo[uk] = -0.5 * len;
        hi[uk] = 0.5 * len;
    }
    GridSpec space = GridSpec::make(std::move(lo), std::move(hi), fg.n, fg.total());
    return inverse_fourier(g_hat, space);
}

}  // namespace fsl
