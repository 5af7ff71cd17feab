#include "core/svm1.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rashomon {

double hinge_loss_sum(const Dataset& d, const Eigen::VectorXd& w) {
    if (w.size() != static_cast<Eigen::Index>(d.cols()))
        throw std::invalid_argument("hinge: dimension mismatch");
    double total = 0.0;
    const Eigen::VectorXd margins = d.labels.cwiseProduct(d.features * w);
    for (Eigen::Index i = 0; i < margins.size(); ++i) total += std::max(0.0, 1.0 - margins[i]);
    return total;
}

namespace {

// Exact minimizer of reg*|t| + sum_i max(0, c_i - a_i t) along one
// coordinate. The function is piecewise linear and convex; the slope jumps
// upward at t = 0 and at each hinge breakpoint, so we scan breakpoints in
// order until the slope turns nonnegative. Flat optimal segments resolve to
// the endpoint with the smaller hinge sum, then the smaller |t|, then the
// left end.
double line_minimize(double reg, const std::vector<double>& c, const std::vector<double>& a) {
    struct Event {
        double t;
        double jump;
    };
    std::vector<Event> events;
    events.push_back({0.0, 2.0 * reg});
    double slope = -reg;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > 0.0) {
            slope -= a[i];
            events.push_back({c[i] / a[i], a[i]});
        } else if (a[i] < 0.0) {
            events.push_back({c[i] / a[i], -a[i]});
        }
    }
    std::sort(events.begin(), events.end(),
              [](const Event& x, const Event& y) { return x.t < y.t; });

    auto hinge_at = [&](double t) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) s += std::max(0.0, c[i] - a[i] * t);
        return s;
    };

    constexpr double kFlat = 1e-12;
    std::size_t idx = 0;
    while (idx < events.size()) {
        double t = events[idx].t;
        // merge coincident breakpoints
        while (idx < events.size() && events[idx].t == t) slope += events[idx++].jump;
        if (slope > kFlat) return t;
        if (slope >= -kFlat) {
            // flat segment from t to the next breakpoint (or unbounded: with
            // reg > 0 the slope eventually rises, so a next event exists)
            if (idx >= events.size()) return t;
            const double t2 = events[idx].t;
            const double h1 = hinge_at(t), h2 = hinge_at(t2);
            if (h1 < h2 - kFlat) return t;
            if (h2 < h1 - kFlat) return t2;
            if (std::abs(t) != std::abs(t2)) return std::abs(t) < std::abs(t2) ? t : t2;
            return t;
        }
    }
    return events.empty() ? 0.0 : events.back().t;
}

}  // namespace

Svm1Fit svm1_fit(const Dataset& d, double reg_weight, int max_sweeps, double rel_tol) {
    if (d.task != Task::classification)
        throw std::invalid_argument("svm1: classification dataset required");
    if (reg_weight <= 0.0) throw std::invalid_argument("svm1: regularization weight must be positive");
    const auto n = static_cast<Eigen::Index>(d.rows());
    const auto p = static_cast<Eigen::Index>(d.cols());

    Svm1Fit fit;
    fit.w = Eigen::VectorXd::Zero(p);
    Eigen::VectorXd margins = Eigen::VectorXd::Zero(n);  // y_i * w^T x_i

    auto objective = [&]() {
        double hinge = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) hinge += std::max(0.0, 1.0 - margins[i]);
        return reg_weight * fit.w.lpNorm<1>() + hinge;
    };

    double prev = objective();
    std::vector<double> c(static_cast<std::size_t>(n)), a(static_cast<std::size_t>(n));
    for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
        fit.sweeps = sweep;
        for (Eigen::Index j = 0; j < p; ++j) {
            for (Eigen::Index i = 0; i < n; ++i) {
                const double aij = d.labels[i] * d.features(i, j);
                a[static_cast<std::size_t>(i)] = aij;
                c[static_cast<std::size_t>(i)] = 1.0 - margins[i] + aij * fit.w[j];
            }
            const double t = line_minimize(reg_weight, c, a);
            const double delta = t - fit.w[j];
            if (delta != 0.0) {
                fit.w[j] = t;
                for (Eigen::Index i = 0; i < n; ++i)
                    margins[i] += delta * d.labels[i] * d.features(i, j);
            }
        }
        const double cur = objective();
        if (prev - cur <= rel_tol * std::max(1.0, std::abs(prev))) {
            fit.converged = true;
            fit.objective = cur;
            return fit;
        }
        prev = cur;
    }
    fit.converged = false;
    fit.objective = prev;
    return fit;
}

CrossPolytopeBound inscribed_cross_polytope(const Dataset& d, const Eigen::VectorXd& center,
                                            double theta, double clip_radius) {
    if (theta < 0.0) throw std::invalid_argument("cross-polytope: theta must be nonnegative");
    if (clip_radius <= 0.0) throw std::invalid_argument("cross-polytope: clip radius must be positive");
    const auto p = static_cast<int>(d.cols());
    if (center.size() != p) throw std::invalid_argument("cross-polytope: dimension mismatch");

    const double base = hinge_loss_sum(d, center);
    const double thr = base + theta;
    const Eigen::VectorXd base_margins = d.labels.cwiseProduct(d.features * center);

    // max hinge sum over the 2p vertices center +- delta e_j; convexity puts
    // the polytope maximum at a vertex, so this is the binding constraint
    auto vertex_max = [&](double delta) {
        double worst = 0.0;
        for (int j = 0; j < p; ++j) {
            double plus = 0.0, minus = 0.0;
            for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(d.rows()); ++i) {
                const double step = delta * d.labels[i] * d.features(i, j);
                plus += std::max(0.0, 1.0 - base_margins[i] - step);
                minus += std::max(0.0, 1.0 - base_margins[i] + step);
            }
            worst = std::max({worst, plus, minus});
        }
        return worst;
    };

    CrossPolytopeBound out;
    out.center = center;

    double lo = 0.0, hi = 1.0;
    bool clipped = false;
    while (vertex_max(hi) <= thr) {
        lo = hi;
        hi *= 2.0;
        if (hi >= clip_radius) {
            clipped = true;
            break;
        }
    }
    double delta;
    if (clipped) {
        delta = clip_radius;
    } else {
        while (hi - lo > 1e-9) {
            const double mid = 0.5 * (lo + hi);
            (vertex_max(mid) <= thr ? lo : hi) = mid;
        }
        delta = lo;
    }

    out.half_diagonal = delta;
    out.clipped = clipped;
    if (delta > 0.0) {
        const double log_vol = p * std::log(2.0 * delta) - std::lgamma(static_cast<double>(p) + 1.0);
        out.volume_lower_bound = std::exp(log_vol);
        out.log10_volume = log_vol / std::log(10.0);
    } else {
        out.volume_lower_bound = 0.0;
        out.log10_volume = -std::numeric_limits<double>::infinity();
    }
    return out;
}

}  // namespace rashomon
