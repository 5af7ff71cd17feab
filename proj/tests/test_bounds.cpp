#include <doctest.h>

#include <cmath>

#include "core/bounds.hpp"
#include "oracles.hpp"

using namespace rashomon;

TEST_CASE("anchored finite-class bound") {
    CHECK(thm_anchored_rhs(0.0, 1.0, 1, 2.0, 100) == 0.0);
    CHECK(thm_anchored_rhs(0.1, 1.0, 1000, 0.05, 200) ==
          doctest::Approx(0.4255247261437458).epsilon(1e-12));

    // doubling n shrinks the square-root part by exactly sqrt(2)
    const double r1 = thm_anchored_rhs(0.0, 1.0, 500, 0.05, 100);
    const double r2 = thm_anchored_rhs(0.0, 1.0, 500, 0.05, 200);
    CHECK(r1 / r2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    CHECK_THROWS(thm_anchored_rhs(0.0, 1.0, 1000, 0.0, 100));
}

TEST_CASE("approximating-set bound") {
    CHECK(thm_approximating_set_rhs(0.07, 1.0, 1.0, 50) == doctest::Approx(0.14));
    CHECK(thm_approximating_set_rhs(0.05, 1.0, 0.05, 100) ==
          doctest::Approx(0.22238734153404083).epsilon(1e-12));

    // with tiny gamma and a huge reference class the gamma-doubling variant wins
    const double t41 = thm_anchored_rhs(0.01, 1.0, 1000000, 0.05, 100);
    const double t42 = thm_approximating_set_rhs(0.01, 1.0, 0.05, 100);
    CHECK(t42 < t41);
}

TEST_CASE("without-replacement subclass probability") {
    CHECK(sampled_subclass_probability(10, 3, 0) == 0.0);
    CHECK(sampled_subclass_probability(10, 10, 1) == 1.0);
    CHECK(sampled_subclass_probability(10, 3, 2) == doctest::Approx(8.0 / 15.0).epsilon(1e-14));
    CHECK_THROWS(sampled_subclass_probability(10, 11, 1));

    SUBCASE("product and binomial-coefficient routes agree") {
        for (long long f2 = 1; f2 <= 60; ++f2)
            for (long long f1 = 0; f1 <= f2; ++f1)
                for (long long rset = 0; rset <= f2 - f1; rset += (f2 > 20 ? 7 : 1)) {
                    const double a = sampled_subclass_probability(f2, f1, rset);
                    const double b = oracle::subclass_probability_binomial(f2, f1, rset);
                    CHECK(a == doctest::Approx(b).epsilon(1e-12));
                }
        for (long long f2 : {250LL, 777LL, 1000LL})
            for (long long f1 : {1LL, 13LL, f2 / 3, f2 - 1})
                for (long long rset : {0LL, 1LL, f2 / 100 + 1, f2 / 5}) {
                    if (f1 + rset > f2) continue;
                    const double a = sampled_subclass_probability(f2, f1, rset);
                    const double b = oracle::subclass_probability_binomial(f2, f1, rset);
                    CHECK(a == doctest::Approx(b).epsilon(1e-12));
                }
    }
}

TEST_CASE("minimal reference class size reproduces the usage table") {
    CHECK(min_reference_class_size(100000, 0.001, 0.99) == 5156);
    CHECK(min_reference_class_size(100000, 0.005, 0.99) == 1051);
    CHECK(min_reference_class_size(100000, 0.01, 0.99) == 526);
    CHECK(min_reference_class_size(100000, 0.02, 0.99) == 262);
    CHECK(min_reference_class_size(100000, 0.05, 0.99) == 104);
}

TEST_CASE("ratio threshold for one in-set draw") {
    CHECK(lemma_ratio_threshold(1, 0.01) == doctest::Approx(0.99).epsilon(1e-14));
    CHECK(lemma_ratio_threshold(100000, 0.01) ==
          doctest::Approx(4.6050641496536055e-05).epsilon(1e-12));

    CHECK(lemma_ratio_threshold(10, 0.05) > lemma_ratio_threshold(100, 0.05));
    CHECK(lemma_ratio_threshold(10, 0.5) > lemma_ratio_threshold(10, 0.9));
}

TEST_CASE("membership probability") {
    CHECK(membership_probability(100, 0.0, 1.0) == 0.0);
    CHECK(membership_probability(100, 0.1, 1.0) ==
          doctest::Approx(0.8646647167633873).epsilon(1e-14));
    // only the ratio eps/b matters; doubling both is exact in binary floating point
    CHECK(membership_probability(50, 0.2, 1.0) == membership_probability(50, 0.4, 2.0));
}

TEST_CASE("pattern ratio limit and entropy sandwich") {
    CHECK(pattern_ratio_limit(1, 0.0) == 0.5);
    CHECK(pattern_ratio_limit(5, 0.2) == 0.1875);
    CHECK(pattern_ratio_limit(10, 0.3) == doctest::Approx(176.0 / 1024.0).epsilon(1e-15));
    CHECK(pattern_ratio_limit(12, 1.0) == 1.0);
    CHECK_THROWS(pattern_ratio_limit(10, 1.5));

    const auto [lo, hi] = pattern_entropy_bounds(10, 0.3);
    CHECK(lo == doctest::Approx(0.10715078528459338).epsilon(1e-12));
    CHECK(hi == doctest::Approx(0.43918752853805454).epsilon(1e-12));

    SUBCASE("additive Pascal oracle agrees exactly for small n") {
        for (int n = 1; n <= 30; ++n)
            for (double theta : {0.0, 0.1, 0.25, 0.4, 0.5}) {
                const int cutoff = static_cast<int>(std::floor(theta * n + 1e-9));
                CHECK(pattern_ratio_limit(n, theta) == oracle::binomial_head_fraction(n, cutoff));
            }
    }

    SUBCASE("limit is non-decreasing in theta") {
        for (int n : {7, 20, 33}) {
            double prev = -1.0;
            for (double theta = 0.0; theta <= 1.0; theta += 0.05) {
                const double v = pattern_ratio_limit(n, theta);
                CHECK(v >= prev);
                prev = v;
            }
        }
    }

    SUBCASE("entropy sandwich holds across the grid") {
        for (int n = 1; n <= 100; ++n)
            for (int k = 1; k <= 10; ++k) {
                const double theta = 0.05 * k;
                const double limit = pattern_ratio_limit(n, theta);
                const auto [lower, upper] = pattern_entropy_bounds(n, theta);
                CHECK(limit >= lower - 1e-15);
                CHECK(limit <= upper + 1e-15);
            }
    }

    SUBCASE("log-space branch matches the exact branch near the crossover") {
        // same inputs computed with n just under and the log path just over 64
        const double exact = pattern_ratio_limit(64, 0.25);
        const double log_n64 = oracle::binomial_head_fraction(64, 16);
        CHECK(exact == log_n64);
        const double log_branch = pattern_ratio_limit(80, 0.25);
        CHECK(log_branch == doctest::Approx(oracle::binomial_head_fraction(80, 20)).epsilon(1e-10));
    }
}

TEST_CASE("lipschitz generalization right-hand sides") {
    const auto zero_k = lipschitz_generalization_rhs(0.0, 0.5, 1.0, 200, 0.05, 0.0, 0.1,
                                                     LipschitzVariant::existence_II);
    CHECK(zero_k.rhs == doctest::Approx(std::sqrt(std::log(40.0) / 400.0)).epsilon(1e-12));

    const auto ex1 = lipschitz_generalization_rhs(1.0, 0.05, 1.0, 200, 0.05, 0.0, 0.1,
                                                  LipschitzVariant::existence_I);
    CHECK(ex1.rhs == doctest::Approx(0.1960322791319921).epsilon(1e-12));
    REQUIRE(ex1.companion_radius.has_value());
    CHECK(*ex1.companion_radius == doctest::Approx(0.1));

    const auto base = lipschitz_generalization_rhs(1.0, 0.05, 1.0, 200, 0.05, 0.0, 0.0,
                                                   LipschitzVariant::multiple);
    const auto reduced = lipschitz_generalization_rhs(1.0, 0.05, 1.0, 200, 0.05, 0.1, 0.0,
                                                      LipschitzVariant::reduced_complexity);
    CHECK(reduced.rhs - base.rhs == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("bound evaluators move monotonically with their inputs") {
    // finite-difference sign checks on a handful of random-ish points
    for (int i = 1; i <= 5; ++i) {
        const double g = 0.01 * i, b = 0.5 + 0.1 * i, eps = 0.02 * i;
        const long long f1 = 10 * i + 1, n = 50 * i;
        CHECK(thm_anchored_rhs(g, b, f1, eps, n) > thm_anchored_rhs(g, b, f1, eps, n + 50));
        CHECK(thm_anchored_rhs(g + 0.01, b, f1, eps, n) > thm_anchored_rhs(g, b, f1, eps, n));
        CHECK(thm_approximating_set_rhs(g, b, eps, n) >
              thm_approximating_set_rhs(g, b, eps, n + 50));
        const double k = 0.5 * i;
        const auto lo = lipschitz_generalization_rhs(k, 0.05, b, n, eps, 0.05, 0.1,
                                                     LipschitzVariant::reduced_complexity);
        const auto hi = lipschitz_generalization_rhs(k, 0.05, b, n, eps, 0.06, 0.1,
                                                     LipschitzVariant::reduced_complexity);
        CHECK(hi.rhs > lo.rhs);
    }
}

TEST_CASE("growth lower bound") {
    CHECK(growth_lower_bound(2.0, 1) == 1.0);
    CHECK(growth_lower_bound(2.0, 3) == 7.0);
    CHECK(growth_lower_bound(3.0, 4) == 40.0);
    CHECK_THROWS(growth_lower_bound(1.0, 3));
    CHECK_THROWS(growth_lower_bound(0.5, 3));
}

TEST_CASE("greedy packing lower bound") {
    using Pts = std::vector<std::vector<double>>;
    CHECK(packing_count_lower_bound(Pts{{0.5}, {0.5}, {0.5}}, 0.2, PackingMetric::l2) == 1);
    CHECK(packing_count_lower_bound(Pts{{0}, {1}, {2}, {3}}, 0.9, PackingMetric::l2) == 4);
    CHECK(packing_count_lower_bound(Pts{{0}, {0.5}, {1}}, 0.6, PackingMetric::l2) == 2);
    CHECK_THROWS(packing_count_lower_bound(Pts{}, 0.5, PackingMetric::l1));

    SUBCASE("metrics differ as expected") {
        const Pts pts{{0, 0}, {1, 1}, {0, 1}};
        // L1 distance between corners is 2, L2 is sqrt(2)
        CHECK(packing_count_lower_bound(pts, 1.5, PackingMetric::l1) == 2);
        CHECK(packing_count_lower_bound(pts, 1.5, PackingMetric::l2) == 1);
        CHECK(packing_count_lower_bound(pts, 0.5, PackingMetric::hamming) == 3);
    }

    SUBCASE("count never exceeds the exhaustive optimum on tiny sets") {
        const Pts pts{{0}, {0.3}, {0.55}, {0.9}, {1.4}, {1.45}};
        for (double sep : {0.1, 0.3, 0.5, 0.8}) {
            // brute-force best packing over all subsets
            int best = 0;
            for (unsigned mask = 1; mask < 64; ++mask) {
                bool valid = true;
                int count = 0;
                for (int i = 0; i < 6 && valid; ++i) {
                    if (!(mask & (1u << i))) continue;
                    ++count;
                    for (int j = i + 1; j < 6 && valid; ++j) {
                        if (!(mask & (1u << j))) continue;
                        valid = std::abs(pts[static_cast<std::size_t>(i)][0] -
                                         pts[static_cast<std::size_t>(j)][0]) > sep;
                    }
                }
                if (valid) best = std::max(best, count);
            }
            const long long greedy = packing_count_lower_bound(pts, sep, PackingMetric::l2);
            CHECK(greedy <= best);
            CHECK(greedy >= 1);
        }
    }
}
