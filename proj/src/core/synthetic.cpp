#include "core/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "core/rng.hpp"

namespace rashomon {
namespace synthetic {

namespace {

void check_n(std::size_t n, std::size_t min_n) {
    if (n < min_n) throw std::invalid_argument("synthetic dataset too small");
}

// Box-Muller from two uniform draws
double gaussian(RngStream& rng) {
    const double u = rng.real01_open();
    const double v = rng.real01_open();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

}  // namespace

Dataset separable_margin(std::size_t n, std::uint64_t seed) {
    check_n(n, 4);
    RngStream rng = RngStream::substream(seed, streams::synthetic, 1);
    Eigen::MatrixXd x(n, 2);
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool positive = (i % 2 == 1);  // alternate for balance
        const double x1 = positive ? 0.6 + 0.4 * rng.real01() : 0.4 * rng.real01();
        x(static_cast<Eigen::Index>(i), 0) = x1;
        x(static_cast<Eigen::Index>(i), 1) = rng.real01();
        y[static_cast<Eigen::Index>(i)] = positive ? 1.0 : -1.0;
    }
    return make_dataset(x, y, Task::classification, "separable-margin");
}

Dataset xor_corners(std::size_t n) {
    check_n(n, 4);
    const std::size_t quarter = n / 4;
    const std::size_t total = quarter * 4;
    Eigen::MatrixXd x(total, 2);
    Eigen::VectorXd y(total);
    std::size_t row = 0;
    for (int c = 0; c < 4; ++c) {
        const double x1 = (c & 1) ? 1.0 : 0.0;
        const double x2 = (c & 2) ? 1.0 : 0.0;
        const double label = (x1 == x2) ? -1.0 : 1.0;
        for (std::size_t i = 0; i < quarter; ++i, ++row) {
            x(static_cast<Eigen::Index>(row), 0) = x1;
            x(static_cast<Eigen::Index>(row), 1) = x2;
            y[static_cast<Eigen::Index>(row)] = label;
        }
    }
    return make_dataset(x, y, Task::classification, "xor-corners");
}

Dataset circles(std::size_t n, std::uint64_t seed) {
    check_n(n, 4);
    RngStream rng = RngStream::substream(seed, streams::synthetic, 2);
    Eigen::MatrixXd x(n, 2);
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool ring = (i % 2 == 1);
        const double radius = ring ? 0.35 + 0.1 * rng.real01() : 0.15 * rng.real01();
        const double angle = 2.0 * M_PI * rng.real01();
        x(static_cast<Eigen::Index>(i), 0) = 0.5 + radius * std::cos(angle);
        x(static_cast<Eigen::Index>(i), 1) = 0.5 + radius * std::sin(angle);
        y[static_cast<Eigen::Index>(i)] = ring ? 1.0 : -1.0;
    }
    return make_dataset(x, y, Task::classification, "circles");
}

Dataset noisy_margin(std::size_t n, double flip_probability, std::uint64_t seed) {
    if (flip_probability < 0.0 || flip_probability > 1.0)
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    Dataset d = separable_margin(n, seed);
    RngStream rng = RngStream::substream(seed, streams::synthetic, 3);
    for (Eigen::Index i = 0; i < d.labels.size(); ++i)
        if (rng.real01() < flip_probability) d.labels[i] = -d.labels[i];
    d.name = "noisy-margin";
    return d;
}

Dataset wave_regression(std::size_t n, double noise, std::uint64_t seed) {
    check_n(n, 4);
    RngStream rng = RngStream::substream(seed, streams::synthetic, 4);
    Eigen::MatrixXd x(n, 1);
    Eigen::VectorXd y(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n - 1);
        x(static_cast<Eigen::Index>(i), 0) = t;
        y[static_cast<Eigen::Index>(i)] = 1.2 * t + 0.4 * std::sin(6.0 * t) + noise * gaussian(rng);
    }
    return make_dataset(x, y, Task::regression, "wave-regression");
}

}  // namespace synthetic
}  // namespace rashomon
