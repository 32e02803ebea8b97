#include "fsl/families.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "fsl/norms.hpp"
#include "doctest.h"

using namespace fsl;

namespace {

FamilyParams params_for(FamilyId id, int d = 1, double N = 8.0) {
    FamilyParams p;
    p.id = id;
    p.d = d;
    p.N = N;
    return p;
}

std::set<char> defeat_set(double inv_p, double inv_q) {
    auto pq = ExponentPair::from_reciprocals(inv_p, inv_q);
    std::set<char> out;
    for (FamilyId id : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E})
        if (family_defeats(id, pq)) out.insert(format_family(id)[0]);
    return out;
}

}  // namespace

TEST_CASE("family names round-trip") {
    for (FamilyId id : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E, FamilyId::S}) {
        CHECK(parse_family(format_family(id)) == id);
    }
    CHECK(parse_family("c") == FamilyId::C);
    CHECK_THROWS_AS(parse_family("F"), InvalidArgumentError);
    CHECK_THROWS_AS(parse_family("AB"), InvalidArgumentError);
}

TEST_CASE("parameters are validated") {
    auto bad = [](FamilyId id, auto mutate) {
        FamilyParams p = params_for(id);
        mutate(p);
        CHECK_THROWS_AS(p.validate(), InvalidArgumentError);
    };
    bad(FamilyId::A, [](FamilyParams& p) { p.N = 1.0; });
    bad(FamilyId::A, [](FamilyParams& p) { p.delta = 0.0; });
    bad(FamilyId::A, [](FamilyParams& p) { p.delta = 0.2; });
    bad(FamilyId::B, [](FamilyParams& p) { p.N = 1.5; });
    bad(FamilyId::C, [](FamilyParams& p) { p.N = 3.0; });
    bad(FamilyId::D, [](FamilyParams& p) { p.N = 2.0; });
    bad(FamilyId::S, [](FamilyParams& p) { p.lambda = 0.0; });
    bad(FamilyId::S, [](FamilyParams& p) { p.lambda = 1.5; });
    bad(FamilyId::S, [](FamilyParams& p) { p.d = 3; });
    bad(FamilyId::A, [](FamilyParams& p) { p.d = 0; });

    FamilyParams trivial = params_for(FamilyId::S);
    trivial.lambda = 1.0;
    CHECK_NOTHROW(trivial.validate());
}

TEST_CASE("predicted exponents match the ratio laws") {
    using EP = ExponentPair;
    CHECK(predicted_exponent(FamilyId::A, 1, EP::from_pq(1.0, 1.0)) == doctest::Approx(1.0));
    CHECK(predicted_exponent(FamilyId::A, 2, EP::from_pq(1.0, 1.0)) == doctest::Approx(2.0));
    CHECK(predicted_exponent(FamilyId::A, 1, EP::from_pq(2.0, 2.0)) == 0.0);
    CHECK(predicted_exponent(FamilyId::B, 1, EP::from_pq(1.0, 1.0)) == doctest::Approx(-1.0));
    CHECK(predicted_exponent(FamilyId::B, 1, EP::from_pq(4.0, 4.0)) == doctest::Approx(0.5));
    CHECK(predicted_exponent(FamilyId::C, 1, EP::from_pq(2.0, 2.0)) == 0.0);
    CHECK(predicted_exponent(FamilyId::C, 1, EP::from_pq(4.0, 2.0)) == doctest::Approx(0.25));
    CHECK(predicted_exponent(FamilyId::D, 1, EP::from_pq(2.0, 1.0)) == doctest::Approx(1.0));
    CHECK(predicted_exponent(FamilyId::D, 1, EP::from_pq(2.0, 2.0)) == 0.0);
    CHECK(predicted_exponent(FamilyId::E, 1, EP::from_pq(4.0, 2.0)) == doctest::Approx(0.25));
    CHECK(predicted_exponent(FamilyId::E, 3, EP::from_pq(2.0, 2.0)) == 0.0);
    CHECK(predicted_exponent(FamilyId::S, 1, EP::from_reciprocals(0.0, 0.0)) == doctest::Approx(1.0));
    CHECK(predicted_exponent(FamilyId::S, 1, EP::from_pq(2.0, 2.0)) == 0.0);
    CHECK_THROWS_AS(predicted_exponent(FamilyId::A, 0, EP::from_pq(2.0, 2.0)),
                    InvalidArgumentError);
}

TEST_CASE("defeat predicates split the square as expected") {
    CHECK(defeat_set(1.0, 1.0) == std::set<char>{'A', 'D'});
    CHECK(defeat_set(0.75, 0.5) == std::set<char>{'A'});
    CHECK(defeat_set(0.0, 0.0) == std::set<char>{'B', 'C'});
    CHECK(defeat_set(0.25, 0.75) == std::set<char>{'C', 'D', 'E'});
    CHECK(defeat_set(0.5, 0.5).empty());

    // off the duality line exactly one of A, B witnesses the failure
    std::mt19937 rng(20240915);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double ip = u(rng), iq = u(rng);
        if (std::abs(ip + iq - 1.0) <= 1e-9) continue;
        auto pq = ExponentPair::from_reciprocals(ip, iq);
        CHECK(family_defeats(FamilyId::A, pq) != family_defeats(FamilyId::B, pq));
    }
}

TEST_CASE("targets sit outside the ball of radius N") {
    for (double N : {8.0, 64.0}) {
        auto a = family_A(params_for(FamilyId::A, 1, N));
        CHECK(a.target_region.lo()[0] > N);
        auto b = family_B(params_for(FamilyId::B, 2, N));
        CHECK(b.target_region.lo()[0] > N);
        auto d_spec = family_D(params_for(FamilyId::D, 1, N));
        CHECK(d_spec.target_region.r_inner() > N);
        auto e_spec = family_E(params_for(FamilyId::E, 2, N));
        CHECK(e_spec.target_region.r_inner() > N);
    }
}

TEST_CASE("analytic input norms agree with quadrature") {
    // the box and shell edges align with cell edges, so the discrete norms
    // are exact and the comparison is tight
    auto check_norms = [](const FamilySpec& spec, const GridSpec& grid, double tol) {
        auto f = make_field(grid, spec.input);
        for (double p : {1.0, 2.0, 4.0}) {
            auto lp = LebesgueExponent::from_p(p);
            CHECK(lp_norm(f, lp, spec.input_norm_region) ==
                  doctest::Approx(spec.input_norm(lp)).epsilon(tol));
        }
        auto inf = LebesgueExponent::infinity();
        CHECK(lp_norm(f, inf, spec.input_norm_region) ==
              doctest::Approx(spec.input_norm(inf)).epsilon(tol));
    };

    check_norms(family_B(params_for(FamilyId::B, 1, 8.0)), GridSpec::line(8.0, 16.0, 64), 1e-12);
    {
        FamilyParams p = params_for(FamilyId::A, 1, 8.0);
        check_norms(family_A(p), GridSpec::line(0.0, 0.05 / 8.0, 64), 1e-12);
    }
    check_norms(family_D(params_for(FamilyId::D, 1, 3.0)), GridSpec::line(-5.0, 5.0, 640), 1e-12);
    check_norms(family_E(params_for(FamilyId::E, 1, 3.0)), GridSpec::line(-15.0, 15.0, 960), 1e-12);

    // in d=2 the circular edge is pixelated; the norm converges at ~h level
    auto e2 = family_E(params_for(FamilyId::E, 2, 3.0));
    auto grid2 = GridSpec::make({-15.0, -15.0}, {15.0, 15.0}, {1024, 1024});
    auto f2 = make_field(grid2, e2.input);
    for (double p : {1.0, 2.0}) {
        auto lp = LebesgueExponent::from_p(p);
        const double got = lp_norm(f2, lp, e2.input_norm_region);
        CHECK(std::abs(got - e2.input_norm(lp)) < 0.01 * e2.input_norm(lp));
    }
}

TEST_CASE("family C datum and truncation") {
    auto spec = family_C(params_for(FamilyId::C, 2, 8.0));
    double inside[2] = {0.3, 0.4};
    cd v = spec.transform(inside);
    CHECK(std::abs(std::abs(v) - 1.0) < 1e-15);
    CHECK(std::arg(v) == doctest::Approx(-0.5 * 8.0 * 0.25));
    double outside[2] = {0.8, 0.8};
    CHECK(spec.transform(outside) == cd(0.0));
    CHECK(spec.transform_norm(LebesgueExponent::from_p(2.0)) ==
          doctest::Approx(std::sqrt(std::numbers::pi)));
    CHECK(spec.transform_norm(LebesgueExponent::infinity()) == doctest::Approx(1.0));

    // the input norm stabilizes once the truncation ball reaches 2N
    const double N = 8.0;
    auto xi_grid = GridSpec::line(-1.0, 1.0, 128);
    auto c1 = family_C(params_for(FamilyId::C, 1, N));
    auto g0 = make_field(xi_grid, c1.transform);

    auto x_grid = GridSpec::line(-4.0 * N, 4.0 * N, 1024);
    PointList pts(1);
    for (std::size_t j = 0; j < x_grid.total(); ++j) {
        double minus_x[1] = {-x_grid.node(0, j)};
        pts.push(minus_x);
    }
    auto vals = fourier_direct(g0, pts);
    SampledField f{x_grid, std::move(vals)};
    for (auto& val : f.values) val /= 2.0 * std::numbers::pi;

    for (double p : {2.0, 4.0}) {
        auto lp = LebesgueExponent::from_p(p);
        const double at_2n = lp_norm(f, lp, Region::ball(1, 2.0 * N));
        const double at_4n = lp_norm(f, lp, Region::ball(1, 4.0 * N));
        CHECK(std::abs(at_2n - at_4n) < 0.01 * at_4n);
    }
}

TEST_CASE("scaling family dilates its base") {
    FamilyParams p = params_for(FamilyId::S);
    p.lambda = 0.5;
    auto base = default_scaling_base(1);
    auto spec = family_S(p, base);

    REQUIRE(spec.input_field.has_value());
    CHECK(spec.input_field->grid.lo[0] == doctest::Approx(-40.0));
    CHECK(spec.input_field->grid.hi[0] == doctest::Approx(40.0));
    CHECK(spec.input_field->values == base.values);
    CHECK(spec.target_region.kind() == RegionKind::Ball);
    CHECK(spec.lower_bound_semantics);
    CHECK(spec.default_method == TransformMethod::FastTransform);

    CHECK_THROWS_AS(default_scaling_base(3), InvalidArgumentError);
    FamilyParams p2 = params_for(FamilyId::S, 2);
    CHECK_THROWS_AS(family_S(p2, base), DimensionMismatchError);
}

TEST_CASE("make_family dispatches and builds usable inputs") {
    for (FamilyId id : {FamilyId::A, FamilyId::B, FamilyId::C, FamilyId::D, FamilyId::E}) {
        auto spec = make_family(params_for(id));
        CHECK(spec.params.id == id);
    }
    auto a = make_family(params_for(FamilyId::A, 1, 8.0));
    double in_pt[1] = {0.003};
    CHECK(std::abs(a.input(in_pt)) == doctest::Approx(1.0));
    double out_pt[1] = {0.008};
    CHECK(a.input(out_pt) == cd(0.0));

    FamilyParams sp = params_for(FamilyId::S);
    sp.lambda = 0.25;
    auto s = make_family(sp);
    CHECK(s.input_field.has_value());
    CHECK(s.input_field->grid.hi[0] == doctest::Approx(80.0));
}
