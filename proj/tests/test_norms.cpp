#include "fsl/norms.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

using namespace fsl;

namespace {

SampledField random_field(const GridSpec& grid, std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SampledField f{grid, {}};
    f.values.resize(grid.total());
    for (auto& v : f.values) v = cd(u(rng), u(rng));
    return f;
}

}  // namespace

TEST_CASE("box indicator norms are exact") {
    auto grid = GridSpec::line(0.0, 1.0, 128);
    SampledField f{grid, std::vector<cd>(128, cd(1.0))};
    Region box = Region::box({0.0}, {1.0});
    for (double p : {1.0, 2.0, 4.0}) {
        CHECK(lp_norm(f, LebesgueExponent::from_p(p), box) == 1.0);
    }
    CHECK(lp_norm(f, LebesgueExponent::infinity(), box) == 1.0);
}

TEST_CASE("gaussian norms match analytic values") {
    auto grid = GridSpec::line(-20.0, 20.0, 4096);
    auto f = make_field(grid, [](std::span<const double> x) { return cd(std::exp(-0.5 * x[0] * x[0])); });
    Region box = Region::box({-20.0}, {20.0});

    const double l2 = 1.33133536380038971279753491795;  // pi^{1/4}
    const double l4 = 1.05807142240977646987908300415;  // (pi/2)^{1/8}
    CHECK(lp_norm(f, LebesgueExponent::from_p(2.0), box) == doctest::Approx(l2).epsilon(1e-10));
    CHECK(lp_norm(f, LebesgueExponent::from_p(4.0), box) == doctest::Approx(l4).epsilon(1e-10));

    // no node sits exactly at the origin, so the sup is the value half a step out
    const double peak = std::abs(f.values[2048]);
    CHECK(lp_norm(f, LebesgueExponent::infinity(), box) == peak);
}

TEST_CASE("large p approaches the sup norm") {
    auto grid = GridSpec::line(0.0, 1.0, 256);
    auto f = make_field(grid, [](std::span<const double> x) { return cd(x[0] < 0.5 ? 1.0 : 0.2); });
    Region box = Region::box({0.0}, {1.0});
    const double sup = lp_norm(f, LebesgueExponent::infinity(), box);
    const double p128 = lp_norm(f, LebesgueExponent::from_p(128.0), box);
    CHECK(sup == 1.0);
    CHECK(p128 > 0.99 * sup);
    CHECK(p128 <= sup * (1.0 + 1e-12));
}

TEST_CASE("norms are monotone in p on a unit-measure box") {
    auto f = random_field(GridSpec::line(0.0, 1.0, 64), 20240908);
    Region box = Region::box({0.0}, {1.0});
    double prev = lp_norm(f, LebesgueExponent::from_p(1.0), box);
    for (double p : {2.0, 4.0, 8.0, 32.0}) {
        double cur = lp_norm(f, LebesgueExponent::from_p(p), box);
        CHECK(cur >= prev * (1.0 - 1e-12));
        prev = cur;
    }
    CHECK(lp_norm(f, LebesgueExponent::infinity(), box) >= prev * (1.0 - 1e-12));
}

TEST_CASE("homogeneity is bit-exact for power-of-two scalings") {
    auto f = random_field(GridSpec::line(-1.0, 2.0, 96), 20240909);
    Region box = Region::box({-1.0}, {2.0});
    SampledField scaled = f;
    for (auto& v : scaled.values) v *= 8.0;

    for (double p : {1.0, 2.0, 3.5}) {
        auto lp = LebesgueExponent::from_p(p);
        CHECK(lp_norm(scaled, lp, box) == 8.0 * lp_norm(f, lp, box));
    }
    CHECK(lp_norm(scaled, LebesgueExponent::infinity(), box) ==
          8.0 * lp_norm(f, LebesgueExponent::infinity(), box));

    SampledField odd = f;
    for (auto& v : odd.values) v *= 3.7;
    auto l2 = LebesgueExponent::from_p(2.0);
    CHECK(lp_norm(odd, l2, box) == doctest::Approx(3.7 * lp_norm(f, l2, box)).epsilon(1e-14));
}

TEST_CASE("restriction keeps only in-region nodes") {
    auto grid = GridSpec::line(0.0, 1.0, 100);
    SampledField f{grid, std::vector<cd>(100, cd(1.0))};
    Region half = Region::box({0.0}, {0.5});
    CHECK(lp_norm(f, LebesgueExponent::from_p(1.0), half) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lp_norm(f, LebesgueExponent::infinity(), half) == 1.0);
}

TEST_CASE("modulated box norms are exact in any dimension") {
    auto grid1 = GridSpec::line(2.0, 4.0, 64);
    auto f1 = make_field(grid1, [](std::span<const double> x) { return std::polar(1.0, 4.0 * x[0]); });
    Region box1 = Region::box({2.0}, {4.0});
    for (double p : {1.0, 2.0, 4.0}) {
        CHECK(lp_norm(f1, LebesgueExponent::from_p(p), box1) ==
              doctest::Approx(std::pow(2.0, 1.0 / p)).epsilon(1e-14));
    }

    auto grid2 = GridSpec::make({2.0, 2.0}, {4.0, 4.0}, {64, 64});
    auto f2 = make_field(grid2, [](std::span<const double> x) { return std::polar(1.0, 4.0 * (x[0] + x[1])); });
    Region box2 = Region::box({2.0, 2.0}, {4.0, 4.0});
    for (double p : {1.0, 2.0, 4.0}) {
        CHECK(lp_norm(f2, LebesgueExponent::from_p(p), box2) ==
              doctest::Approx(std::pow(4.0, 1.0 / p)).epsilon(1e-14));
    }
}

TEST_CASE("embedding bound holds on random fields") {
    const double qs[] = {1.0, 1.5, 2.0, 3.0, 8.0};
    std::mt19937 rng(20240910);
    std::uniform_int_distribution<int> pick(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_field(GridSpec::line(0.0, 2.0, 32), 30000 + std::uint32_t(trial));
        int i = pick(rng), j = pick(rng);
        auto q_small = LebesgueExponent::from_p(qs[std::min(i, j)]);
        auto q_big = (trial % 7 == 0) ? LebesgueExponent::infinity()
                                      : LebesgueExponent::from_p(qs[std::max(i, j)]);
        Region omega = (trial % 2 == 0) ? Region::box({0.0}, {2.0}) : Region::ball(1, 1.3);
        auto bound = hoelder_embedding_bound(f, q_big, q_small, omega);
        CHECK(bound.lhs <= bound.rhs * (1.0 + 1e-12));
    }

    // constants are the equality case, which pins the measure exponent
    auto grid = GridSpec::line(0.0, 2.0, 32);
    SampledField c{grid, std::vector<cd>(32, cd(0.7))};
    auto eq = hoelder_embedding_bound(c, LebesgueExponent::from_p(4.0),
                                      LebesgueExponent::from_p(2.0), Region::box({0.0}, {2.0}));
    CHECK(eq.lhs == doctest::Approx(eq.rhs).epsilon(1e-13));
}

TEST_CASE("embedding validates its arguments") {
    auto f = random_field(GridSpec::line(0.0, 1.0, 16), 20240911);
    CHECK_THROWS_AS(hoelder_embedding_bound(f, LebesgueExponent::from_p(2.0),
                                            LebesgueExponent::from_p(4.0),
                                            Region::box({0.0}, {1.0})),
                    InvalidArgumentError);
    CHECK_THROWS_AS(hoelder_embedding_bound(f, LebesgueExponent::from_p(4.0),
                                            LebesgueExponent::from_p(2.0),
                                            Region::ball_complement(1, 0.5)),
                    UnboundedRegionError);
}

TEST_CASE("empty and mismatched restrictions are refused") {
    auto grid = GridSpec::line(5.0, 6.0, 16);
    SampledField f{grid, std::vector<cd>(16, cd(1.0))};
    CHECK_THROWS_AS(lp_norm(f, LebesgueExponent::from_p(2.0), Region::ball(1, 0.5)),
                    EmptyRestrictionError);
    CHECK_THROWS_AS(lp_norm(f, LebesgueExponent::from_p(2.0), Region::ball(2, 10.0)),
                    DimensionMismatchError);
}

TEST_CASE("ratio validates the denominator") {
    CHECK(ratio(2.0, 6.0) == 3.0);
    CHECK_THROWS_AS(ratio(0.0, 1.0), InvalidArgumentError);
    CHECK_THROWS_AS(ratio(-1.0, 1.0), InvalidArgumentError);
}

TEST_CASE("zero fields have zero norm") {
    auto grid = GridSpec::line(0.0, 1.0, 8);
    SampledField f{grid, std::vector<cd>(8, cd(0.0))};
    Region box = Region::box({0.0}, {1.0});
    CHECK(lp_norm(f, LebesgueExponent::from_p(2.0), box) == 0.0);
    CHECK(lp_norm(f, LebesgueExponent::infinity(), box) == 0.0);
}
