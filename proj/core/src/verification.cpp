#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "fsl/harness.hpp"
#include "fsl/norms.hpp"
#include "fsl/stationary_phase.hpp"
#include "fsl/verification.hpp"

namespace fsl {

namespace {

constexpr double kSqrtTwoPi = 2.50662827463100050241576528481;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

double whole_grid_norm(const SampledField& f, LebesgueExponent p) {
    return lp_norm(f, p, Region::box(f.grid.lo, f.grid.hi));
}

SampledField gaussian_line(double half_width, std::size_t n) {
    GridSpec g = GridSpec::make({-half_width}, {half_width}, {n});
    return make_field(g, [](std::span<const double> x) {
        return cd(std::exp(-0.5 * x[0] * x[0]), 0.0);
    });
}

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok) { pass = pass && ok; }
};

// ---- criterion bodies ------------------------------------------------------

std::pair<bool, std::string> identity_suite(bool) {
    SampledField f = gaussian_line(20.0, 4096);
    SampledField ff = fourier_fast(f);
    const double l2_f = whole_grid_norm(f, LebesgueExponent::from_p(2));
    const double l2_ff = whole_grid_norm(ff, LebesgueExponent::from_p(2));
    const double l1_f = whole_grid_norm(f, LebesgueExponent::from_p(1));
    const double sup_ff = whole_grid_norm(ff, LebesgueExponent::infinity());

    const double plancherel = rel_err(l2_ff, kSqrtTwoPi * l2_f);
    Check c;
    c.require(plancherel <= 1e-6);
    c.require(sup_ff <= l1_f * (1.0 + 1e-6));
    c.detail << "Plancherel rel err " << fmt("%.2e", plancherel) << ", sup|Ff| "
             << fmt("%.9g", sup_ff) << " vs ||f||_1 " << fmt("%.9g", l1_f);
    return {c.pass, c.detail.str()};
}

std::pair<bool, std::string> scaling_laws(bool) {
    SampledField base = default_scaling_base(1);
    SampledField base_hat = fourier_fast(base);
    Region ball = Region::ball(1, 1.0);

    Check c;
    double worst_eq = 0.0;
    double worst_margin = 1e300;
    for (double lambda : {0.5, 0.25}) {
        SampledField dilated = dilate(base, lambda);
        for (double pv : {1.0, 2.0, 4.0}) {
            LebesgueExponent p = LebesgueExponent::from_p(pv);
            const double got = whole_grid_norm(dilated, p);
            const double want = std::pow(lambda, -1.0 / pv) * whole_grid_norm(base, p);
            worst_eq = std::max(worst_eq, rel_err(got, want));
        }
        SampledField dilated_hat = fourier_fast(dilated);
        for (double qv : {1.0, 2.0, 4.0}) {
            LebesgueExponent q = LebesgueExponent::from_p(qv);
            const double lhs = lp_norm(dilated_hat, q, ball);
            const double rhs = std::pow(lambda, 1.0 / qv - 1.0) * lp_norm(base_hat, q, ball);
            worst_margin = std::min(worst_margin, lhs / rhs);
            c.require(lhs >= rhs * (1.0 - 1e-9));
        }
    }
    c.require(worst_eq <= 1e-12);
    c.detail << "dilation norm identity rel err " << fmt("%.2e", worst_eq)
             << ", restricted-ball inequality margin >= " << fmt("%.6g", worst_margin);
    return {c.pass, c.detail.str()};
}

SweepConfig criterion_config(FamilyId family, double p, double q, std::vector<double> sweep) {
    SweepConfig cfg;
    cfg.family = family;
    cfg.pq = ExponentPair::from_pq(p, q);
    cfg.sweep = std::move(sweep);
    return cfg;
}

std::pair<bool, std::string> closed_form_slopes(bool quick) {
    const std::vector<double> ns =
        quick ? std::vector<double>{8, 16, 32} : std::vector<double>{8, 16, 32, 64, 128};
    const std::vector<ExponentPair> a_pqs = {ExponentPair::from_pq(1, 1),
                                             ExponentPair::from_pq(2, 2)};
    const std::vector<ExponentPair> b_pqs = {ExponentPair::from_pq(1, 1),
                                             ExponentPair::from_pq(4, 4)};
    auto ra = run_sweep_shared(criterion_config(FamilyId::A, 1, 1, ns), a_pqs);
    auto rb = run_sweep_shared(criterion_config(FamilyId::B, 1, 1, ns), b_pqs);

    Check c;
    c.require(ra[0].predicted_slope == 1.0 && std::abs(ra[0].fitted_slope - 1.0) <= 0.15);
    c.require(ra[1].predicted_slope == 0.0 && std::abs(ra[1].fitted_slope) <= 0.15);
    c.require(rb[0].predicted_slope == -1.0 && std::abs(rb[0].fitted_slope + 1.0) <= 0.15);
    c.require(rb[1].predicted_slope == 0.5 && std::abs(rb[1].fitted_slope - 0.5) <= 0.15);
    c.detail << "A(1,1)=" << fmt("%.3f", ra[0].fitted_slope)
             << " A(2,2)=" << fmt("%.3f", ra[1].fitted_slope)
             << " B(1,1)=" << fmt("%.3f", rb[0].fitted_slope)
             << " B(4,4)=" << fmt("%.3f", rb[1].fitted_slope);
    return {c.pass, c.detail.str()};
}

std::pair<bool, std::string> quadrature_slopes(bool quick) {
    const std::vector<double> ns =
        quick ? std::vector<double>{8, 16, 32} : std::vector<double>{8, 16, 32, 64};
    SweepResult rd = run_sweep(criterion_config(FamilyId::D, 2, 1, ns));
    SweepResult re = run_sweep(criterion_config(FamilyId::E, 4, 2, ns));
    SweepResult rc = run_sweep(criterion_config(FamilyId::C, 4, 2, ns));

    Check c;
    c.require(std::abs(rd.fitted_slope - 1.0) <= 0.25);
    c.require(std::abs(re.fitted_slope - 0.25) <= 0.2);
    c.require(std::abs(rc.fitted_slope - 0.25) <= 0.2);
    c.detail << "D(q=1)=" << fmt("%.3f", rd.fitted_slope)
             << " E(4,2)=" << fmt("%.3f", re.fitted_slope)
             << " C(p=4)=" << fmt("%.3f", rc.fitted_slope);
    return {c.pass, c.detail.str()};
}

std::pair<bool, std::string> no_false_blowup(bool) {
    const std::vector<ExponentPair> pqs = {
        ExponentPair::from_pq(2, 2),
        ExponentPair::from_pq(1, std::numeric_limits<double>::infinity())};
    std::vector<SweepConfig> configs = {
        criterion_config(FamilyId::A, 1, 1, {8, 16, 32}),
        criterion_config(FamilyId::B, 1, 1, {8, 16, 32}),
        criterion_config(FamilyId::C, 1, 1, {8, 16, 32}),
        criterion_config(FamilyId::D, 1, 1, {8, 16, 32}),
        criterion_config(FamilyId::E, 1, 1, {8, 16, 32}),
        criterion_config(FamilyId::S, 1, 1, {0.5, 0.25, 0.125}),
    };

    Check c;
    double worst = -1e300;
    std::string worst_at = "-";
    for (const SweepConfig& cfg : configs) {
        for (const SweepResult& res : run_sweep_shared(cfg, pqs)) {
            if (res.fitted_slope > worst) {
                worst = res.fitted_slope;
                worst_at = format_family(cfg.family) + " at (1/p,1/q)=(" +
                           fmt("%g", res.config.pq.inv_p()) + "," +
                           fmt("%g", res.config.pq.inv_q()) + ")";
            }
            c.require(res.fitted_slope <= 0.2);
        }
    }
    c.detail << "max fitted slope " << fmt("%.3f", worst) << " (" << worst_at
             << "), bound 0.2";
    return {c.pass, c.detail.str()};
}

std::pair<bool, std::string> stationary_decay(bool quick) {
    const double n_base = quick ? 16.0 : 32.0;
    auto mean_error = [](double n) {
        double acc = 0.0;
        const int samples = 15;
        for (int i = 0; i < samples; ++i) {
            const double frac = 0.3 + 0.4 * double(i) / double(samples - 1);
            QuadraticPhase phase = make_quadratic_phase(n, {frac * n});
            acc += asymptotic_error(phase, recommended_ball_grid(phase));
        }
        return acc / double(samples);
    };
    const double coarse = mean_error(n_base);
    const double fine = mean_error(4.0 * n_base);

    Check c;
    c.require(fine <= 0.6 * coarse);
    c.detail << "mean rel err " << fmt("%.4g", coarse) << " at N=" << fmt("%g", n_base) << " -> "
             << fmt("%.4g", fine) << " at N=" << fmt("%g", 4.0 * n_base) << " (ratio "
             << fmt("%.3f", fine / coarse) << ", bound 0.6)";
    return {c.pass, c.detail.str()};
}

std::pair<bool, std::string> region_truth_table(bool) {
    struct LatticeTruth {
        double ip, iq;
        bool bounded;
        const char* defeats;
    };
    // hand-derived from the admissibility trapezoid and the five defeat
    // predicates A: 1/p+1/q>1, B: <1, C: 1/p<1/2, D: 1/q>1/2, E: 1/q>1/p
    static const LatticeTruth truth[25] = {
        {0.00, 0.00, false, "B|C"},   {0.00, 0.25, false, "B|C|E"},
        {0.00, 0.50, false, "B|C|E"}, {0.00, 0.75, false, "B|C|D|E"},
        {0.00, 1.00, false, "C|D|E"}, {0.25, 0.00, false, "B|C"},
        {0.25, 0.25, false, "B|C"},   {0.25, 0.50, false, "B|C|E"},
        {0.25, 0.75, false, "C|D|E"}, {0.25, 1.00, false, "A|C|D|E"},
        {0.50, 0.00, false, "B"},     {0.50, 0.25, false, "B"},
        {0.50, 0.50, true, ""},       {0.50, 0.75, true, "A|D|E"},
        {0.50, 1.00, true, "A|D|E"},  {0.75, 0.00, false, "B"},
        {0.75, 0.25, true, ""},       {0.75, 0.50, true, "A"},
        {0.75, 0.75, true, "A|D"},    {0.75, 1.00, true, "A|D|E"},
        {1.00, 0.00, true, ""},       {1.00, 0.25, true, "A"},
        {1.00, 0.50, true, "A"},      {1.00, 0.75, true, "A|D"},
        {1.00, 1.00, true, "A|D"},
    };

    std::vector<RegionVerdict> grid = classify_grid(0.25);
    Check c;
    c.require(grid.size() == 25);
    int matched = 0;
    for (std::size_t i = 0; i < grid.size() && i < 25; ++i) {
        std::string defeats;
        for (std::size_t k = 0; k < grid[i].defeated_by.size(); ++k) {
            if (k) defeats += "|";
            defeats += format_family(grid[i].defeated_by[k]);
        }
        const bool ok = grid[i].pq.inv_p() == truth[i].ip && grid[i].pq.inv_q() == truth[i].iq &&
                        grid[i].bounded_domain_admissible == truth[i].bounded &&
                        defeats == truth[i].defeats;
        if (ok) ++matched;
        c.require(ok);
    }
    c.detail << matched << "/25 lattice points match the hand truth table";
    return {c.pass, c.detail.str()};
}

std::pair<bool, std::string> oracle_equivalence(bool) {
    Check c;

    // closed form against a finely resolved direct quadrature
    std::mt19937 rng(20260816u);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double worst_closed = 0.0;
    for (int caseno = 0; caseno < 20; ++caseno) {
        const int d = caseno < 16 ? 1 : 2;
        double a = 0.0, b = 0.0, m = 0.0;
        std::vector<double> xi(std::size_t(d), 0.0);
        cd closed(0.0, 0.0);
        double len = 1.0;
        for (int attempt = 0; attempt < 100; ++attempt) {
            a = -2.0 * unit(rng);
            len = (d == 1) ? 0.5 + 1.5 * unit(rng) : 0.4 + 0.5 * unit(rng);
            b = a + len;
            const double m_max = (d == 1) ? 30.0 : 4.0;
            const double xi_max = (d == 1) ? 40.0 : 5.0;
            m = m_max * (2.0 * unit(rng) - 1.0);
            for (double& component : xi) component = xi_max * (2.0 * unit(rng) - 1.0);
            closed = closed_form_box_chirp(a, b, m, xi);
            if (std::abs(closed) >= 0.05 * std::pow(len, d)) break;
        }
        double max_xi = 0.0;
        for (double component : xi) max_xi = std::max(max_xi, std::abs(component));
        const double rate = std::abs(m) + max_xi;
        // ~1282 samples per period keeps the midpoint sinc defect near 1e-6
        const std::size_t n =
            std::max<std::size_t>(64, std::size_t(std::ceil(len * rate * 1282.0 /
                                                            (2.0 * std::numbers::pi))));
        GridSpec g = GridSpec::make(std::vector<double>(std::size_t(d), a),
                                    std::vector<double>(std::size_t(d), b),
                                    std::vector<std::size_t>(std::size_t(d), n));
        SampledField f = make_field(g, [m](std::span<const double> x) {
            double phase = 0.0;
            for (double component : x) phase += m * component;
            return std::polar(1.0, phase);
        });
        PointList pts(d);
        pts.push(xi);
        const cd direct = fourier_direct(f, pts)[0];
        worst_closed = std::max(worst_closed, std::abs(closed - direct) / std::abs(closed));
    }
    c.require(worst_closed <= 1e-4);

    // fast against direct at coinciding dual frequencies, on modes whose
    // amplitude is large enough for a pointwise relative comparison
    double worst_fast = 0.0;
    int compared = 0;
    auto compare_band = [&](const SampledField& f, double carrier) {
        SampledField ff = fourier_fast(f);
        const GridSpec& dual = ff.grid;
        const double floor_amp = 1e-5 * whole_grid_norm(f, LebesgueExponent::from_p(1));
        std::vector<std::size_t> modes;
        PointList pts(1);
        for (std::size_t mth = 0; mth < dual.n[0]; ++mth) {
            const double xi = dual.node(0, mth);
            if (std::abs(ff.values[mth]) < floor_amp) continue;
            if (std::abs(carrier) + std::abs(xi) > 0.2 * std::numbers::pi / f.grid.step(0))
                continue;
            modes.push_back(mth);
            pts.push(std::span<const double>(&xi, 1));
        }
        std::vector<cd> direct = fourier_direct(f, pts);
        for (std::size_t k = 0; k < modes.size(); ++k) {
            const double rel =
                std::abs(ff.values[modes[k]] - direct[k]) / std::abs(direct[k]);
            worst_fast = std::max(worst_fast, rel);
        }
        compared += int(modes.size());
    };
    compare_band(gaussian_line(20.0, 512), 0.0);
    {
        GridSpec g = GridSpec::make({-20.0}, {20.0}, {4096});
        compare_band(make_field(g,
                                [](std::span<const double> x) {
                                    return std::polar(std::exp(-0.5 * x[0] * x[0]), 20.0 * x[0]);
                                }),
                     20.0);
    }
    c.require(compared >= 30);
    c.require(worst_fast <= 1e-8);

    c.detail << "closed vs direct max rel " << fmt("%.2e", worst_closed) << " (20 cases), "
             << "fast vs direct max rel " << fmt("%.2e", worst_fast) << " (" << compared
             << " modes)";
    return {c.pass, c.detail.str()};
}

std::pair<bool, std::string> fixture_sensitivity(bool, bool tamper) {
    // a synthetic power law the fitter must nail, plus a negative control
    // showing the verdict can actually fail; --tamper corrupts the exponent
    const double exponent = tamper ? 2.5 : 2.0;
    std::vector<double> s = {2, 4, 8, 16, 32};
    std::vector<double> r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = 3.0 * std::pow(s[i], exponent);
    FitResult fit = fit_slope(s, r);

    SweepResult fake;
    fake.config.family = FamilyId::A;
    fake.predicted_slope = 0.0;
    fake.fitted_slope = 0.7;
    const bool negative_control_fails = !verify_sweep(fake, 0.2).pass;
    fake.fitted_slope = 0.1;
    const bool positive_control_passes = verify_sweep(fake, 0.2).pass;

    Check c;
    c.require(std::abs(fit.slope - 2.0) <= 1e-9);
    c.require(fit.slope_stderr <= 1e-9);
    c.require(negative_control_fails);
    c.require(positive_control_passes);
    c.detail << "synthetic slope " << fmt("%.6f", fit.slope) << " (want 2), controls "
             << (negative_control_fails && positive_control_passes ? "behave" : "broken");
    return {c.pass, c.detail.str()};
}

void run_criterion(std::vector<CriterionResult>& out, std::ostream& log, int index,
                   const std::string& name, double limit_seconds,
                   const std::function<std::pair<bool, std::string>()>& body) {
    CriterionResult r;
    r.index = index;
    r.name = name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        auto [pass, detail] = body();
        r.pass = pass;
        r.detail = std::move(detail);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_seconds > 0.0 && r.seconds >= limit_seconds) {
        r.pass = false;
        r.detail += " [over the " + fmt("%g", limit_seconds) + " s budget]";
    }
    log << (r.pass ? "[PASS] " : "[FAIL] ") << r.index << ". " << r.name << " ("
        << fmt("%.2f", r.seconds) << " s): " << r.detail << std::endl;
    out.push_back(std::move(r));
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options, std::ostream& log) {
    const bool quick = options.quick;
    std::vector<CriterionResult> results;
    run_criterion(results, log, 1, "identity suite", 1.0,
                  [&] { return identity_suite(quick); });
    run_criterion(results, log, 2, "scaling laws", 5.0, [&] { return scaling_laws(quick); });
    run_criterion(results, log, 3, "closed-form slopes", 10.0,
                  [&] { return closed_form_slopes(quick); });
    run_criterion(results, log, 4, "quadrature slopes", 120.0,
                  [&] { return quadrature_slopes(quick); });
    run_criterion(results, log, 5, "no false blow-up", 0.0, [&] { return no_false_blowup(quick); });
    run_criterion(results, log, 6, "stationary phase decay", 0.0,
                  [&] { return stationary_decay(quick); });
    run_criterion(results, log, 7, "region truth table", 0.0,
                  [&] { return region_truth_table(quick); });
    run_criterion(results, log, 8, "oracle equivalence", 0.0,
                  [&] { return oracle_equivalence(quick); });
    run_criterion(results, log, 9, "slope fixture sensitivity", 0.0,
                  [&] { return fixture_sensitivity(quick, options.tamper); });
    return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.pass) return false;
    return !results.empty();
}

int acceptance_main(int argc, const char* const* argv) {
    AcceptanceOptions options;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            options.quick = true;
        } else if (std::strcmp(argv[i], "--tamper") == 0) {
            options.tamper = true;
        } else {
            std::cerr << "usage: acceptance [--quick] [--tamper]\n";
            return 2;
        }
    }
    std::vector<CriterionResult> results = run_acceptance(options, std::cout);
    int passed = 0;
    for (const CriterionResult& r : results) passed += r.pass ? 1 : 0;
    std::cout << "acceptance: " << passed << "/" << results.size() << " criteria passed"
              << (options.quick ? " (quick mode)" : "") << std::endl;
    return all_passed(results) ? 0 : 2;
}

}  // namespace fsl
