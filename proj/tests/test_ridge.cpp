#include <doctest.h>

#include <cmath>
#include <random>

#include "core/ridge.hpp"
#include "oracles.hpp"

using namespace rashomon;

namespace {

Dataset regression_data(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    Dataset d;
    d.features = x;
    d.labels = y;
    d.feature_kinds.assign(static_cast<std::size_t>(x.cols()), FeatureKind::real);
    for (Eigen::Index j = 0; j < x.cols(); ++j)
        d.feature_names.push_back("x" + std::to_string(j + 1));
    d.task = Task::regression;
    return d;  // exact feature values, no re-normalization
}

RidgeSpec spec_of(std::vector<double> sv, double reg, double theta) {
    RidgeSpec s;
    s.singular_values = std::move(sv);
    s.reg = reg;
    s.theta = theta;
    s.dim = static_cast<int>(s.singular_values.size());
    return s;
}

}  // namespace

TEST_CASE("ridge fit on identity designs") {
    Eigen::MatrixXd x = Eigen::MatrixXd::Identity(2, 2);
    Eigen::VectorXd y(2);
    y << 2.0, 2.0;
    const Dataset d = regression_data(x, y);

    const RidgeFit plain = ridge_fit(d, 0.0);
    CHECK(plain.w_hat[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(plain.w_hat[1] == doctest::Approx(2.0).epsilon(1e-12));

    const RidgeFit shrunk = ridge_fit(d, 1.0);
    CHECK(shrunk.w_hat[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(shrunk.w_hat[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ridge fit rejects a singular gram at C = 0") {
    Eigen::MatrixXd x(3, 2);
    x << 1, 2, 2, 4, 3, 6;  // second column is twice the first
    Eigen::VectorXd y(3);
    y << 1, 2, 3;
    CHECK_THROWS(ridge_fit(regression_data(x, y), 0.0));
    CHECK_NOTHROW(ridge_fit(regression_data(x, y), 0.1));
}

TEST_CASE("ridge fit agrees with a grid-refinement oracle") {
    Eigen::MatrixXd x(5, 2);
    x << 0.2, 0.9, 0.5, 0.1, 0.8, 0.4, 0.3, 0.7, 0.6, 0.2;
    Eigen::VectorXd y(5);
    y << 1.0, 0.2, 0.7, 0.9, 0.4;
    const Dataset d = regression_data(x, y);
    const double reg = 0.3;
    const RidgeFit fit = ridge_fit(d, reg);

    // shrink a grid around the best cell a few times
    double c0 = 0.0, c1 = 0.0, half = 2.0;
    for (int round = 0; round < 12; ++round) {
        double best = std::numeric_limits<double>::infinity(), b0 = c0, b1 = c1;
        for (int i = -10; i <= 10; ++i)
            for (int j = -10; j <= 10; ++j) {
                Eigen::VectorXd w(2);
                w << c0 + half * i / 10.0, c1 + half * j / 10.0;
                const double risk = ridge_risk_sum(d, w, reg);
                if (risk < best) {
                    best = risk;
                    b0 = w[0];
                    b1 = w[1];
                }
            }
        c0 = b0;
        c1 = b1;
        half /= 5.0;
    }
    CHECK(fit.w_hat[0] == doctest::Approx(c0).epsilon(1e-4));
    CHECK(fit.w_hat[1] == doctest::Approx(c1).epsilon(1e-4));
}

TEST_CASE("closed-form volumes on hand instances") {
    CHECK(ridge_volume(spec_of({1.0, 1.0}, 0.0, 1.0)) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(ridge_volume(spec_of({2.0}, 0.0, 4.0)) == doctest::Approx(2.0).epsilon(1e-12));
    // J(2,3)/10 with sigma (1,2,3) and C = 1
    CHECK(ridge_volume(spec_of({1.0, 2.0, 3.0}, 1.0, 2.0)) ==
          doctest::Approx(1.1847687835088976).epsilon(1e-12));
    CHECK_THROWS(ridge_volume(spec_of({1.0, 0.0}, 0.0, 1.0)));  // divergent
    CHECK_NOTHROW(ridge_volume(spec_of({1.0, 0.0}, 0.5, 1.0)));
}

TEST_CASE("closed form matches the Monte Carlo rejection oracle") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> unif(0.2, 2.0);
    for (int trial = 0; trial < 4; ++trial) {
        const int p = 1 + trial % 3;
        Eigen::MatrixXd x(p + 3, p);
        for (int i = 0; i < p + 3; ++i)
            for (int j = 0; j < p; ++j) x(i, j) = unif(gen);
        const double reg = trial % 2 ? 0.4 : 0.0;
        const double theta = 0.8 + 0.3 * trial;

        Eigen::MatrixXd quad = x.transpose() * x;
        quad.diagonal().array() += reg;
        const double mc = oracle::mc_ellipsoid_volume(quad, theta, 400000, 1234 + trial);

        Eigen::JacobiSVD<Eigen::MatrixXd> svd(x);
        std::vector<double> sv(svd.singularValues().data(),
                               svd.singularValues().data() + svd.singularValues().size());
        const double exact = ridge_volume(spec_of(sv, reg, theta));
        CHECK(exact == doctest::Approx(mc).epsilon(0.02));
    }
}

TEST_CASE("ellipsoid membership is inclusive at the boundary") {
    Eigen::MatrixXd x(1, 1);
    x << 2.0;  // gram = 4
    Eigen::VectorXd y(1);
    y << 1.0;
    const Dataset d = regression_data(x, y);
    const RidgeFit fit = ridge_fit(d, 0.0);

    Eigen::VectorXd w = fit.w_hat;
    CHECK(ellipsoid_contains(w, fit, 1e-12));
    w[0] = fit.w_hat[0] + 1.0;
    CHECK(ellipsoid_contains(w, fit, 4.0));  // 4 * 1^2 = 4, boundary
    w[0] = fit.w_hat[0] + 1.01;
    CHECK_FALSE(ellipsoid_contains(w, fit, 4.0));  // 4.0804 > 4
}

TEST_CASE("theta from a direction of interest") {
    Eigen::MatrixXd x(1, 1);
    x << 2.0;
    Eigen::VectorXd y(1);
    y << 0.5;
    const Dataset d = regression_data(x, y);
    const RidgeFit fit = ridge_fit(d, 0.0);

    CHECK(theta_from_direction(fit, fit.w_hat) == 0.0);
    Eigen::VectorXd w = fit.w_hat;
    w[0] += 0.5;
    CHECK(theta_from_direction(fit, w) == doctest::Approx(1.0).epsilon(1e-12));

    SUBCASE("round trip: the derived theta re-admits the point") {
        std::mt19937_64 gen(5);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        Eigen::MatrixXd x3(6, 3);
        Eigen::VectorXd y3(6);
        for (int i = 0; i < 6; ++i) {
            y3[i] = unif(gen);
            for (int j = 0; j < 3; ++j) x3(i, j) = 0.5 + 0.4 * unif(gen);
        }
        const Dataset d3 = regression_data(x3, y3);
        const RidgeFit f3 = ridge_fit(d3, 0.05);
        for (int trial = 0; trial < 10; ++trial) {
            Eigen::VectorXd w_int(3);
            for (int j = 0; j < 3; ++j) w_int[j] = unif(gen);
            const double theta = theta_from_direction(f3, w_int);
            CHECK(ellipsoid_contains(w_int, f3, theta));
        }
    }
}

TEST_CASE("risk identity: parameter steps change the loss by the quadratic form") {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    Eigen::MatrixXd x(8, 3);
    Eigen::VectorXd y(8);
    for (int i = 0; i < 8; ++i) {
        y[i] = unif(gen);
        for (int j = 0; j < 3; ++j) x(i, j) = unif(gen);
    }
    const Dataset d = regression_data(x, y);
    for (double reg : {0.0, 0.7}) {
        const RidgeFit fit = ridge_fit(d, reg);
        const double base = ridge_risk_sum(d, fit.w_hat, reg);
        for (int trial = 0; trial < 8; ++trial) {
            Eigen::VectorXd delta(3);
            for (int j = 0; j < 3; ++j) delta[j] = unif(gen);
            const double lhs = ridge_risk_sum(d, fit.w_hat + delta, reg) - base;
            const double rhs = delta.dot(fit.gram * delta);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
        }
    }
}

TEST_CASE("volume depends on the features only, never the targets") {
    Eigen::MatrixXd x(6, 2);
    x << 0.3, 0.8, 0.1, 0.9, 0.7, 0.2, 0.5, 0.5, 0.9, 0.1, 0.2, 0.6;
    Eigen::VectorXd y1(6), y2(6);
    y1 << 1, 2, 3, 4, 5, 6;
    y2 << -3, 0.5, 9, -1, 2, 0;
    const Dataset a = regression_data(x, y1);
    const Dataset b = regression_data(x, y2);

    const auto sva = singular_values(a);
    const auto svb = singular_values(b);
    const double va = ridge_volume(spec_of(sva, 0.1, 0.5));
    const double vb = ridge_volume(spec_of(svb, 0.1, 0.5));
    CHECK(va == vb);  // bit identical
}

TEST_CASE("volume monotonicity and scaling") {
    const double base = ridge_volume(spec_of({1.0, 2.0}, 0.3, 1.0));
    CHECK(ridge_volume(spec_of({1.0, 2.0}, 0.3, 1.5)) > base);
    CHECK(ridge_volume(spec_of({1.2, 2.0}, 0.3, 1.0)) < base);
    CHECK(ridge_volume(spec_of({1.0, 2.0}, 0.5, 1.0)) < base);

    // X -> cX maps sigma to c sigma
    const double c = 1.7;
    const double scaled = ridge_volume(spec_of({c * 1.0, c * 2.0}, 0.3, 1.0));
    const double expected =
        std::exp(log_ellipsoid_coefficient(1.0, 2)) /
        std::sqrt((c * c * 1.0 + 0.3) * (c * c * 4.0 + 0.3));
    CHECK(scaled == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("log-form volume survives dimensions that underflow the linear form") {
    std::vector<double> sv(400, 3.0);
    const auto spec = spec_of(std::move(sv), 0.0, 1e-6);
    const double log10_v = ridge_log10_volume(spec);
    CHECK(std::isfinite(log10_v));
    CHECK(log10_v < -300.0);
    CHECK(ridge_volume(spec) == 0.0);  // linear form underflows to zero
}

TEST_CASE("volume lower bounds evaluate the stated formulas") {
    SUBCASE("one-dimensional slack case") {
        // exact volume 2; the formula gives 4 because the product/sum step
        // only contracts when sigma^2 + C is at least 4
        const auto spec = spec_of({1.0}, 0.0, 1.0);
        CHECK(ridge_volume(spec) == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(ridge_volume_lower_bound(spec, RidgeBoundKind::frobenius, 1.0, 0) ==
              doctest::Approx(4.0).epsilon(1e-12));
    }

    SUBCASE("equal singular values make the two-dimensional bound tight") {
        for (double s : {0.7, 1.0, 2.5}) {
            const auto spec = spec_of({s, s}, 0.0, 1.3);
            const double fro_sq = 2.0 * s * s;
            const double bound =
                ridge_volume_lower_bound(spec, RidgeBoundKind::frobenius, fro_sq, 0);
            CHECK(bound == doctest::Approx(ridge_volume(spec)).epsilon(1e-12));
        }
    }

    SUBCASE("an anisotropic unit-sphere instance keeps the bound below the volume") {
        // rows concentrated near one direction: the top singular value
        // carries nearly all the Frobenius mass
        Eigen::MatrixXd x(5, 3);
        std::mt19937_64 gen(4);
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (int i = 0; i < 5; ++i) {
            Eigen::Vector3d v(1.0, 0.05 * unif(gen), 0.05 * unif(gen));
            v.normalize();
            x.row(i) = v.transpose();
        }
        Eigen::VectorXd y(5);
        y << 1, 2, 3, 4, 5;
        const Dataset d = regression_data(x, y);
        const auto sv = singular_values(d);
        const auto spec = spec_of(sv, 0.2, 0.9);
        const double bound =
            ridge_volume_lower_bound(spec, RidgeBoundKind::unit_sphere, 0.0, 5);
        CHECK(bound <= ridge_volume(spec));
    }

    SUBCASE("second-derivative bound checks its hypothesis") {
        const auto spec = spec_of({1.0, 1.0}, 0.3, 1.0);
        CHECK_THROWS(
            ridge_volume_lower_bound(spec, RidgeBoundKind::second_derivative, 0.5, 0));
        const double b =
            ridge_volume_lower_bound(spec, RidgeBoundKind::second_derivative, 4.0, 0);
        CHECK(b > 0.0);
        // the delta-based Frobenius cap reduces to the direct Frobenius form
        const double direct = ridge_volume_lower_bound(spec, RidgeBoundKind::frobenius,
                                                       std::sqrt(2.0 * (2.0 - 0.3)), 0);
        CHECK(b == doctest::Approx(direct).epsilon(1e-12));
    }
}
