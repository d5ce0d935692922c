#include <catch_amalgamated.hpp>

#include <cmath>

#include "cogrowth/growth.hpp"
#include "cogrowth/radial.hpp"

using namespace cogrowth;

namespace {

CountSeries pure_geometric(double c, int r_max) {
    CountSeries s;
    s.kind = WalkKind::walk;
    s.r_max = r_max;
    for (int r = 0; r <= r_max; ++r) {
        s.logvals.push_back(r * std::log(c));
        s.exact_flags.push_back(0);
    }
    return s;
}

}  // namespace

TEST_CASE("estimators recover exact geometric growth with zero residual") {
    CountSeries s = pure_geometric(2.4, 100);
    for (auto m : {EstimateMethod::root, EstimateMethod::ratio, EstimateMethod::ratio2,
                   EstimateMethod::logfit}) {
        GrowthEstimate est = estimate_growth_rate(s, m);
        CHECK_THAT(est.value, Catch::Matchers::WithinRel(2.4, 1e-10));
        CHECK(est.residual <= 1e-10);
    }
}

TEST_CASE("estimator edge cases") {
    SECTION("eventually-zero series estimate 0 by convention") {
        CountSeries s;
        s.kind = WalkKind::nbw;
        s.r_max = 10;
        for (int r = 0; r <= 10; ++r) {
            s.logvals.push_back(r == 0 ? 0.0 : -std::numeric_limits<double>::infinity());
            s.exact_flags.push_back(1);
        }
        GrowthEstimate est = estimate_growth_rate(s, EstimateMethod::ratio2);
        CHECK(est.value == 0.0);
        CHECK(est.residual == 0.0);
    }
    SECTION("parity-zero series: ratio errors, ratio2 works") {
        CountSeries b = radial_walk_counts(3, 3, RadialProfile::sphere_indicator(0), 60);
        CHECK_THROWS_AS(
            estimate_growth_rate(b, EstimateMethod::ratio, EstimateWindow{30, 40}),
            std::invalid_argument);
        GrowthEstimate est = estimate_growth_rate(b, EstimateMethod::ratio2);
        CHECK(est.value > 2.0);
    }
    SECTION("window validation") {
        CountSeries s = pure_geometric(2.0, 20);
        CHECK_THROWS_AS(estimate_growth_rate(s, EstimateMethod::root, EstimateWindow{5, 30}),
                        std::invalid_argument);
        CHECK_THROWS_AS(estimate_growth_rate(s, EstimateMethod::root, EstimateWindow{-1, 5}),
                        std::invalid_argument);
        CHECK_THROWS_AS(estimate_growth_rate(s, EstimateMethod::root, EstimateWindow{9, 5}),
                        std::invalid_argument);
    }
}

TEST_CASE("walk growth of the root delta approaches 2 sqrt(d-1)") {
    CountSeries b = radial_walk_counts(3, 3, RadialProfile::sphere_indicator(0), 2000);
    GrowthEstimate est =
        estimate_growth_rate(b, EstimateMethod::ratio2, EstimateWindow{1800, 2000});
    double target = 2.0 * std::sqrt(2.0);
    CHECK(std::abs(est.value - target) / target < 0.01);
}

TEST_CASE("nbw growth of a geometric family is exact from small r") {
    CountSeries a = radial_nbw_counts(3, 3, RadialProfile::geometric_family(parse_decimal("1.2")), 60);
    GrowthEstimate est =
        estimate_growth_rate(a, EstimateMethod::ratio, EstimateWindow{2, 58});
    CHECK_THAT(est.value, Catch::Matchers::WithinRel(2.4, 1e-12));
    CHECK(est.residual <= 1e-12);
}

TEST_CASE("co-growth map, regular tree") {
    CHECK_THAT(cogrowth_regular(1.0, 3), Catch::Matchers::WithinAbs(2.828427, 1e-6));
    CHECK_THAT(cogrowth_regular(2.0, 3), Catch::Matchers::WithinAbs(3.0, 1e-12));
    SECTION("threshold continuity") {
        for (int d : {3, 4, 7}) {
            double root = std::sqrt(d - 1.0);
            CHECK_THAT(cogrowth_regular(root, d),
                       Catch::Matchers::WithinRel(root + (d - 1.0) / root, 1e-12));
            CHECK_THAT(cogrowth_regular(root * (1 + 1e-9), d),
                       Catch::Matchers::WithinRel(2.0 * root, 1e-8));
        }
    }
    SECTION("subcritical values all map to 2 sqrt(d-1)") {
        CHECK(cogrowth_regular(0.0, 3) == cogrowth_regular(1.0, 3));
        CHECK(cogrowth_regular(0.3, 4) == 2.0 * std::sqrt(3.0));
    }
    CHECK_THROWS_AS(cogrowth_regular(1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(cogrowth_regular(-0.5, 3), std::invalid_argument);
}

TEST_CASE("co-growth map, bi-regular tree") {
    SECTION("(3,4) subcritical: sqrt(2) + sqrt(3)") {
        CHECK_THAT(cogrowth_biregular(1.0, 3, 4), Catch::Matchers::WithinAbs(3.146264, 1e-6));
        CHECK(std::pow(6.0, 0.25) > 1.0);  // 1.0 is genuinely below the threshold
    }
    SECTION("(3,4) at alpha = sqrt(6): beta = 2 sqrt(3)") {
        CHECK_THAT(cogrowth_biregular(std::sqrt(6.0), 3, 4),
                   Catch::Matchers::WithinRel(std::sqrt(12.0), 1e-12));
    }
    SECTION("k = l reduces to the regular map") {
        for (double alpha : {0.5, 2.0, 5.0})
            for (int d : {3, 4})
                CHECK_THAT(cogrowth_biregular(alpha, d, d),
                           Catch::Matchers::WithinRel(cogrowth_regular(alpha, d), 1e-13));
    }
    SECTION("threshold continuity for several degree pairs") {
        for (auto [k, l] : {std::pair{3, 3}, {3, 4}, {4, 5}, {2, 5}}) {
            double th = std::pow((k - 1.0) * (l - 1.0), 0.25);
            double below = cogrowth_biregular(th, k, l);
            double above = std::sqrt(th + (k - 1.0) / th) * std::sqrt(th + (l - 1.0) / th);
            CHECK_THAT(below, Catch::Matchers::WithinRel(above, 1e-12));
        }
    }
    SECTION("monotone non-decreasing, strictly increasing above threshold") {
        for (auto [k, l] : {std::pair{3, 4}, {2, 5}}) {
            double prev = -1.0;
            double th = std::pow((k - 1.0) * (l - 1.0), 0.25);
            for (double alpha = 0.1; alpha < 8.0; alpha += 0.1) {
                double beta = cogrowth_biregular(alpha, k, l);
                CHECK(beta >= prev - 1e-14);
                if (alpha - 0.1 > th) CHECK(beta > prev);
                prev = beta;
            }
        }
    }
    SECTION("degenerate (2,2) family evaluates and is flagged") {
        CHECK_THAT(cogrowth_biregular(0.5, 2, 2), Catch::Matchers::WithinRel(2.0, 1e-12));
        CHECK_THAT(cogrowth_biregular(3.0, 2, 2), Catch::Matchers::WithinRel(3.0 + 1.0 / 3.0, 1e-12));
        CHECK(cogrowth_degenerate(2, 2));
        CHECK(!cogrowth_degenerate(2, 5));
    }
}

TEST_CASE("inverse co-growth maps") {
    SECTION("regular: hand values") {
        CHECK_THAT(inverse_cogrowth_regular(3.0, 3), Catch::Matchers::WithinAbs(2.0, 1e-12));
        // at the threshold the quadratic has a double root, so double
        // arithmetic only pins the preimage to ~sqrt(eps)
        CHECK_THAT(inverse_cogrowth_regular(2.0 * std::sqrt(2.0), 3),
                   Catch::Matchers::WithinAbs(std::sqrt(2.0), 1e-7));
        CHECK_THAT(inverse_cogrowth_regular(3.0, 3),
                   Catch::Matchers::WithinAbs(2.0, 1e-12));  // f = 1: b_r = d^r
        CHECK_THROWS_AS(inverse_cogrowth_regular(2.0, 3), std::invalid_argument);
    }
    SECTION("bi-regular: hand values") {
        CHECK_THAT(inverse_cogrowth_biregular(std::sqrt(12.0), 3, 4),
                   Catch::Matchers::WithinAbs(std::sqrt(6.0), 1e-9));
        CHECK_THAT(inverse_cogrowth_biregular(std::sqrt(2.0) + std::sqrt(3.0), 3, 4),
                   Catch::Matchers::WithinAbs(std::pow(6.0, 0.25), 1e-7));
        for (auto [k, l] : {std::pair{3, 4}, {4, 5}})
            CHECK_THAT(inverse_cogrowth_biregular(std::sqrt(double(k) * l), k, l),
                       Catch::Matchers::WithinAbs(std::sqrt((k - 1.0) * (l - 1.0)), 1e-9));
        CHECK_THROWS_AS(inverse_cogrowth_biregular(2.0, 3, 4), std::invalid_argument);
    }
    SECTION("round trips across the upper branch") {
        // The forward map has zero derivative at the threshold, so the
        // round trip is ill-conditioned exactly there; start just inside.
        for (int d : {3, 4, 6}) {
            double th = std::sqrt(d - 1.0);
            for (double alpha = th * 1.001; alpha <= 1000.0; alpha *= 1.7) {
                double beta = cogrowth_regular(alpha, d);
                CHECK_THAT(inverse_cogrowth_regular(beta, d),
                           Catch::Matchers::WithinRel(alpha, 1e-10));
            }
        }
        for (auto [k, l] : {std::pair{3, 4}, {4, 5}, {2, 5}}) {
            double th = std::pow((k - 1.0) * (l - 1.0), 0.25);
            for (double alpha = th * 1.001; alpha <= 1000.0; alpha *= 1.7) {
                double beta = cogrowth_biregular(alpha, k, l);
                CHECK_THAT(inverse_cogrowth_biregular(beta, k, l),
                           Catch::Matchers::WithinRel(alpha, 1e-10));
            }
        }
    }
}

TEST_CASE("b-series estimates respect the universal lower bound") {
    // every walk series on the (k,l) tree grows at least like
    // sqrt(k-1)+sqrt(l-1); finite-r estimates approach it from below with an
    // O(1/r) bias, so allow the residual plus a 1% slack
    double floor34 = std::sqrt(2.0) + std::sqrt(3.0);
    RadialOptions fl;
    fl.mode = RadialOptions::Mode::floating;
    std::vector<CountSeries> series = {
        radial_walk_counts(3, 4, RadialProfile::sphere_indicator(0), 1500),
        radial_walk_counts(3, 4, RadialProfile::sphere_indicator(2), 1500),
        radial_walk_counts(3, 4, RadialProfile::geometric_family(parse_decimal("1.3")), 1500, fl),
    };
    for (const auto& b : series) {
        GrowthEstimate est = estimate_growth_rate(b, EstimateMethod::ratio2);
        CHECK(est.value >= floor34 - est.residual - 0.01 * floor34);
    }
}

TEST_CASE("estimates line up with the co-growth map on radial families") {
    // alpha = c sqrt((k-1)(l-1)) for the geometric family with base c; the
    // b-series growth must then match the mapped beta.
    int k = 3, l = 4;
    Rational c = parse_decimal("1.3");
    RadialOptions opt;
    opt.mode = RadialOptions::Mode::floating;
    CountSeries a = radial_nbw_counts(k, l, RadialProfile::geometric_family(c), 600, opt);
    CountSeries b = radial_walk_counts(k, l, RadialProfile::geometric_family(c), 600, opt);
    double alpha = estimate_growth_rate(a, EstimateMethod::ratio2).value;
    double beta = estimate_growth_rate(b, EstimateMethod::ratio2).value;
    CHECK_THAT(alpha, Catch::Matchers::WithinRel(1.3 * std::sqrt(6.0), 1e-9));
    CHECK_THAT(beta, Catch::Matchers::WithinRel(cogrowth_biregular(alpha, k, l), 1e-6));
}
