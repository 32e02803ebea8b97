#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <numbers>

#include "fsl/harness.hpp"
#include "fsl/norms.hpp"

namespace fsl {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// dual-grid resolution floor: at least this many frequency nodes across the
// target window on the fast routes, and per axis on closed-form norm grids
constexpr std::size_t kNormNodesFloor = 64;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::size_t nodes_for(double len, double rate, double oversample, std::size_t floor_n) {
    const double n = std::ceil(len * oversample * rate / kTwoPi);
    if (n > 1e18) throw BudgetExceededError("grid sizing overflows");
    return std::max<std::size_t>(floor_n, std::size_t(n));
}

GridSpec cube_grid(int d, double lo, double hi, std::size_t n, std::size_t budget) {
    return GridSpec::make(std::vector<double>(std::size_t(d), lo),
                          std::vector<double>(std::size_t(d), hi),
                          std::vector<std::size_t>(std::size_t(d), n), budget);
}

/// Direct transform of `input` at the nodes of `norm_grid` lying in `target`;
/// all other nodes are zero, which lp_norm over `target` never sees.
SampledField transform_on_masked_grid(const SampledField& input, const GridSpec& norm_grid,
                                      const Region& target) {
    MaskedNodes masked = nodes_in_region(norm_grid, target);
    if (masked.indices.empty())
        throw EmptyRestrictionError("target region contains no frequency node");
    std::vector<cd> at = fourier_direct(input, masked.points);
    SampledField out{norm_grid, std::vector<cd>(norm_grid.total(), cd(0.0))};
    for (std::size_t i = 0; i < masked.indices.size(); ++i)
        out.values[masked.indices[i]] = at[i];
    return out;
}

/// Everything needed to price one sweep value at any (p, q): the fields are
/// built eagerly, the norms are closures over them.
struct PointNorms {
    std::function<double(LebesgueExponent)> in_norm;
    std::function<double(LebesgueExponent)> out_norm;
};

PointNorms norms_from_fields(const FamilySpec& spec,
                             std::shared_ptr<const SampledField> input_field,
                             std::shared_ptr<const SampledField> transform_field) {
    PointNorms out;
    if (spec.input_norm) {
        out.in_norm = spec.input_norm;
    } else {
        if (!input_field) throw Error("family spec has neither input norm nor input field");
        Region region = spec.input_norm_region;
        out.in_norm = [field = std::move(input_field), region](LebesgueExponent p) {
            return lp_norm(*field, p, region);
        };
    }
    if (spec.transform_norm) {
        out.out_norm = spec.transform_norm;
    } else {
        if (!transform_field)
            throw Error("family spec has neither transform norm nor transform field");
        Region region = spec.target_region;
        out.out_norm = [field = std::move(transform_field), region](LebesgueExponent q) {
            return lp_norm(*field, q, region);
        };
    }
    return out;
}

double max_target_component(const Region& target) {
    Region box = target.bounding_box();
    double m = 0.0;
    for (double c : box.lo()) m = std::max(m, std::abs(c));
    for (double c : box.hi()) m = std::max(m, std::abs(c));
    return m;
}

PointNorms evaluate_modulated_box(const SweepConfig& cfg, TransformMethod method,
                                  const FamilySpec& spec) {
    const int d = cfg.d;
    const double a = spec.input_norm_region.lo()[0];
    const double b = spec.input_norm_region.hi()[0];
    const double m = spec.params.N * spec.params.N;
    const double max_xi = max_target_component(spec.target_region);
    const double rate = m + max_xi;
    const double over = std::max(cfg.policy.oversample, 8.0);

    std::shared_ptr<const SampledField> transform_field;
    switch (method) {
        case TransformMethod::ClosedForm: {
            GridSpec norm_grid = GridSpec::make(spec.target_region.lo(), spec.target_region.hi(),
                                                std::vector<std::size_t>(std::size_t(d), kNormNodesFloor),
                                                cfg.policy.budget);
            transform_field = std::make_shared<SampledField>(make_field(norm_grid, spec.transform));
            break;
        }
        case TransformMethod::DirectQuadrature: {
            const std::size_t n_f = nodes_for(b - a, rate, over, kNormNodesFloor);
            GridSpec support = cube_grid(d, a, b, n_f, cfg.policy.budget);
            SampledField input = make_field(support, spec.input);
            GridSpec norm_grid = GridSpec::make(spec.target_region.lo(), spec.target_region.hi(),
                                                std::vector<std::size_t>(std::size_t(d), kNormNodesFloor),
                                                cfg.policy.budget);
            transform_field = std::make_shared<SampledField>(
                transform_on_masked_grid(input, norm_grid, spec.target_region));
            break;
        }
        case TransformMethod::FastTransform: {
            // pad the domain until the dual grid resolves the target window
            const double span = spec.target_region.hi()[0] - spec.target_region.lo()[0];
            const double len = std::max(b - a, kTwoPi * double(kNormNodesFloor) / span);
            const std::size_t n_f = nodes_for(len, rate, over, kNormNodesFloor);
            GridSpec domain = cube_grid(d, a, a + len, n_f, cfg.policy.budget);
            SampledField input = make_field(domain, spec.input);
            transform_field = std::make_shared<SampledField>(fourier_fast(input));
            break;
        }
    }
    return norms_from_fields(spec, nullptr, std::move(transform_field));
}

PointNorms evaluate_inverse_datum(const SweepConfig& cfg, TransformMethod method,
                                  const FamilySpec& spec) {
    const int d = cfg.d;
    const double N = spec.params.N;
    const double over = std::max(cfg.policy.oversample, 8.0);

    std::shared_ptr<const SampledField> input_field;
    if (method == TransformMethod::FastTransform) {
        const double dxi = std::numbers::pi / (8.0 * N);
        const std::size_t n = (d == 1) ? 4096 : 512;
        const double lo = -(double(n / 2) + 0.5) * dxi;
        GridSpec freq = GridSpec::make(std::vector<double>(std::size_t(d), lo),
                                       std::vector<double>(std::size_t(d), lo + double(n) * dxi),
                                       std::vector<std::size_t>(std::size_t(d), n),
                                       cfg.policy.budget);
        SampledField datum = make_field(freq, spec.transform);
        input_field = std::make_shared<SampledField>(inverse_fourier(datum));
    } else {
        // the input is itself the inverse transform of the masked chirp; one
        // direct-transform batch over the truncation ball prices every norm
        const std::size_t n_xi = nodes_for(2.0, 3.0 * N, over, kNormNodesFloor);
        GridSpec xi_grid = cube_grid(d, -1.0, 1.0, n_xi, cfg.policy.budget);
        SampledField datum = make_field(xi_grid, spec.transform);

        const double R = 2.0 * N;
        const std::size_t n_x = nodes_for(2.0 * R, 3.0, over, kNormNodesFloor);
        GridSpec x_grid = cube_grid(d, -R, R, n_x, cfg.policy.budget);
        MaskedNodes masked = nodes_in_region(x_grid, spec.input_norm_region);
        PointList minus_x(d);
        minus_x.coords.reserve(masked.points.coords.size());
        for (double c : masked.points.coords) minus_x.coords.push_back(-c);

        std::vector<cd> vals = fourier_direct(datum, minus_x);
        const double scale = std::pow(kTwoPi, -double(d));
        SampledField f{x_grid, std::vector<cd>(x_grid.total(), cd(0.0))};
        for (std::size_t i = 0; i < masked.indices.size(); ++i)
            f.values[masked.indices[i]] = scale * vals[i];
        input_field = std::make_shared<SampledField>(std::move(f));
    }
    return norms_from_fields(spec, std::move(input_field), nullptr);
}

PointNorms evaluate_shell_chirp(const SweepConfig& cfg, TransformMethod method,
                                const FamilySpec& spec) {
    const int d = cfg.d;
    const double R = spec.input_norm_region.r_outer();
    const double r_out = spec.target_region.r_outer();
    const double chirp = (spec.params.id == FamilyId::D) ? spec.params.N * spec.params.N : 1.0;
    const double rate = chirp * R + r_out;
    const double over = std::max(cfg.policy.oversample, 8.0);

    // frequency-side node density: boundary ripples on the target have
    // relative size O(1/(dist sqrt(chirp))), so a density growing with the
    // sweep keeps the edge-quantization error of the covered measure falling
    const double density = (spec.params.id == FamilyId::D) ? 2.0 : 1.6 * spec.params.N;

    std::shared_ptr<const SampledField> transform_field;
    if (method == TransformMethod::FastTransform) {
        const double len = std::max(2.0 * R, kTwoPi * density);
        const std::size_t n_f = nodes_for(len, rate, over, kNormNodesFloor);
        GridSpec domain = cube_grid(d, -0.5 * len, 0.5 * len, n_f, cfg.policy.budget);
        SampledField input = make_field(domain, spec.input);
        transform_field = std::make_shared<SampledField>(fourier_fast(input));
    } else {
        const std::size_t n_f = nodes_for(2.0 * R, rate, over, kNormNodesFloor);
        GridSpec support = cube_grid(d, -R, R, n_f, cfg.policy.budget);
        SampledField input = make_field(support, spec.input);

        const std::size_t n_xi =
            std::max<std::size_t>(kNormNodesFloor, std::size_t(std::ceil(density * 2.0 * r_out)));
        GridSpec norm_grid = cube_grid(d, -r_out, r_out, n_xi, cfg.policy.budget);
        transform_field = std::make_shared<SampledField>(
            transform_on_masked_grid(input, norm_grid, spec.target_region));
    }
    return norms_from_fields(spec, nullptr, std::move(transform_field));
}

PointNorms evaluate_scaling(const SweepConfig& cfg, TransformMethod method,
                            const FamilySpec& spec) {
    const int d = cfg.d;
    auto input_field = std::make_shared<SampledField>(*spec.input_field);

    std::shared_ptr<const SampledField> transform_field;
    if (method == TransformMethod::FastTransform) {
        transform_field = std::make_shared<SampledField>(fourier_fast(*input_field));
    } else {
        GridSpec norm_grid = cube_grid(d, -1.0, 1.0, kNormNodesFloor, cfg.policy.budget);
        transform_field = std::make_shared<SampledField>(
            transform_on_masked_grid(*input_field, norm_grid, spec.target_region));
    }
    return norms_from_fields(spec, std::move(input_field), std::move(transform_field));
}

PointNorms evaluate_point(const SweepConfig& cfg, TransformMethod method, double v) {
    FamilyParams params;
    params.id = cfg.family;
    params.d = cfg.d;
    params.delta = cfg.delta;
    if (cfg.family == FamilyId::S)
        params.lambda = v;
    else
        params.N = v;
    FamilySpec spec = make_family(params);

    switch (cfg.family) {
        case FamilyId::A:
        case FamilyId::B:
            return evaluate_modulated_box(cfg, method, spec);
        case FamilyId::C:
            return evaluate_inverse_datum(cfg, method, spec);
        case FamilyId::D:
        case FamilyId::E:
            return evaluate_shell_chirp(cfg, method, spec);
        case FamilyId::S:
            return evaluate_scaling(cfg, method, spec);
    }
    throw InvalidArgumentError("unknown family id");
}

std::string strip_prefix(const char* what, const char* prefix) {
    std::string s(what);
    if (s.rfind(prefix, 0) == 0) s.erase(0, std::strlen(prefix));
    return s;
}

}  // namespace

void SweepConfig::validate() const {
    if (d < 1) throw InvalidArgumentError("sweep dimension must be >= 1");
    if (sweep.size() < 3)
        throw InvalidArgumentError("a sweep needs at least 3 values to fit a slope");
    const bool decreasing = (family == FamilyId::S);
    for (std::size_t i = 0; i + 1 < sweep.size(); ++i) {
        const bool ok = decreasing ? (sweep[i] > sweep[i + 1]) : (sweep[i] < sweep[i + 1]);
        if (!ok)
            throw InvalidArgumentError(std::string("sweep values must be strictly ") +
                                       (decreasing ? "decreasing" : "increasing"));
    }
    for (double v : sweep) {
        FamilyParams params;
        params.id = family;
        params.d = d;
        params.delta = delta;
        if (family == FamilyId::S)
            params.lambda = v;
        else
            params.N = v;
        params.validate();
    }
    if (method && *method == TransformMethod::ClosedForm && family != FamilyId::A &&
        family != FamilyId::B)
        throw InvalidArgumentError("the closed form is only available for families A and B");
    if (out_dir.empty()) throw InvalidArgumentError("output directory must not be empty");
}

TransformMethod resolved_method(const SweepConfig& cfg) {
    if (cfg.method) return *cfg.method;
    switch (cfg.family) {
        case FamilyId::A:
        case FamilyId::B:
            return TransformMethod::ClosedForm;
        case FamilyId::C:
        case FamilyId::D:
        case FamilyId::E:
            return TransformMethod::DirectQuadrature;
        case FamilyId::S:
            return TransformMethod::FastTransform;
    }
    return TransformMethod::DirectQuadrature;
}

std::vector<SweepResult> run_sweep_shared(const SweepConfig& cfg,
                                          std::span<const ExponentPair> pqs) {
    cfg.validate();
    if (pqs.empty())
        throw InvalidArgumentError("run_sweep_shared needs at least one exponent pair");
    const TransformMethod method = resolved_method(cfg);

    std::vector<SweepResult> results(pqs.size());
    for (std::size_t j = 0; j < pqs.size(); ++j) {
        results[j].config = cfg;
        results[j].config.pq = pqs[j];
        results[j].rows.resize(cfg.sweep.size());
        results[j].predicted_slope = predicted_exponent(cfg.family, cfg.d, pqs[j]);
    }

    for (std::size_t i = 0; i < cfg.sweep.size(); ++i) {
        const double v = cfg.sweep[i];
        try {
            PointNorms norms = evaluate_point(cfg, method, v);
            for (std::size_t j = 0; j < pqs.size(); ++j) {
                SweepRow& row = results[j].rows[i];
                row.sweep_value = v;
                row.norm_f_p = norms.in_norm(pqs[j].p);
                row.norm_Ff_q = norms.out_norm(pqs[j].q);
                row.ratio = ratio(row.norm_f_p, row.norm_Ff_q);
            }
        } catch (const BudgetExceededError& e) {
            throw BudgetExceededError(strip_prefix(e.what(), "budget exceeded: ") +
                                      " (family " + format_family(cfg.family) +
                                      ", sweep value " + fmt(v) + ")");
        } catch (const UndersampledError& e) {
            throw UndersampledError(strip_prefix(e.what(), "undersampled: ") + " (family " +
                                    format_family(cfg.family) + ", sweep value " + fmt(v) + ")");
        }
    }

    std::vector<double> abscissa(cfg.sweep.size());
    for (std::size_t i = 0; i < cfg.sweep.size(); ++i)
        abscissa[i] = (cfg.family == FamilyId::S) ? 1.0 / cfg.sweep[i] : cfg.sweep[i];
    for (std::size_t j = 0; j < pqs.size(); ++j) {
        std::vector<double> ratios(cfg.sweep.size());
        for (std::size_t i = 0; i < cfg.sweep.size(); ++i)
            ratios[i] = results[j].rows[i].ratio;
        FitResult fit = fit_slope(abscissa, ratios);
        results[j].fitted_slope = fit.slope;
        results[j].slope_stderr = fit.slope_stderr;
    }
    return results;
}

SweepResult run_sweep(const SweepConfig& cfg) {
    auto results = run_sweep_shared(cfg, std::span<const ExponentPair>(&cfg.pq, 1));
    return std::move(results.front());
}

}  // namespace fsl
