#include "core/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rashomon {

namespace {
void check_epsilon(double epsilon, double hi) {
    if (epsilon <= 0.0 || epsilon > hi) throw std::invalid_argument("epsilon out of range");
}
}  // namespace

double thm_anchored_rhs(double gamma, double b, long long f1_size, double epsilon, long long n) {
    if (f1_size < 1) throw std::invalid_argument("|F1| must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (gamma < 0.0 || b < 0.0) throw std::invalid_argument("gamma and b must be nonnegative");
    check_epsilon(epsilon, 2.0);
    const double num = std::log(static_cast<double>(f1_size)) + std::log(2.0 / epsilon);
    return gamma + 2.0 * b * std::sqrt(num / (2.0 * static_cast<double>(n)));
}

double thm_approximating_set_rhs(double gamma, double b, double epsilon, long long n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (gamma < 0.0 || b < 0.0) throw std::invalid_argument("gamma and b must be nonnegative");
    check_epsilon(epsilon, 1.0);
    return 2.0 * gamma + b * std::sqrt(std::log(1.0 / epsilon) / (2.0 * static_cast<double>(n)));
}

double sampled_subclass_probability(long long f2_size, long long f1_size, long long rset_size) {
    if (f2_size < 0 || f1_size < 0 || rset_size < 0)
        throw std::invalid_argument("sizes must be nonnegative");
    if (f1_size > f2_size) throw std::invalid_argument("|F1| cannot exceed |F2|");
    if (rset_size == 0 || f1_size == 0) return 0.0;
    double log_miss = 0.0;
    for (long long i = 1; i <= rset_size; ++i) {
        const double denom = static_cast<double>(f2_size - rset_size + i);
        if (denom <= static_cast<double>(f1_size)) return 1.0;  // some factor hits zero or below
        log_miss += std::log1p(-static_cast<double>(f1_size) / denom);
    }
    return -std::expm1(log_miss);
}

long long min_reference_class_size(long long f2_size, double rset_ratio,
                                   double overall_confidence) {
    if (f2_size < 1) throw std::invalid_argument("|F2| must be >= 1");
    if (rset_ratio <= 0.0 || rset_ratio > 1.0)
        throw std::invalid_argument("rset ratio must lie in (0, 1]");
    if (overall_confidence <= 0.0 || overall_confidence >= 1.0)
        throw std::invalid_argument("confidence must lie in (0, 1)");
    const long long rset = std::llround(rset_ratio * static_cast<double>(f2_size));
    if (rset < 1) throw std::invalid_argument("rset ratio rounds to an empty set");
    // (1 - eps) p >= confidence with eps = 1 - sqrt(confidence) <=> p >= sqrt(confidence)
    const double target = std::sqrt(overall_confidence);
    if (sampled_subclass_probability(f2_size, f2_size, rset) < target)
        throw std::runtime_error("confidence unattainable even with |F1| = |F2|");
    long long lo = 1, hi = f2_size;
    while (lo < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (sampled_subclass_probability(f2_size, mid, rset) >= target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

double lemma_ratio_threshold(long long f1_size, double epsilon) {
    if (f1_size < 1) throw std::invalid_argument("|F1| must be >= 1");
    if (epsilon <= 0.0 || epsilon >= 1.0) throw std::invalid_argument("epsilon must lie in (0, 1)");
    return -std::expm1(std::log(epsilon) / static_cast<double>(f1_size));
}

double membership_probability(long long n, double epsilon, double b) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (b <= 0.0) throw std::invalid_argument("loss bound b must be positive");
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
    const double r = epsilon / b;
    return -std::expm1(-2.0 * static_cast<double>(n) * r * r);
}

namespace {

long long risk_cutoff(long long n, double theta) {
    // floor(theta * n) with a crumb of tolerance against representation
    // error in decimal theta values
    return static_cast<long long>(std::floor(theta * static_cast<double>(n) + 1e-9));
}

}  // namespace

double pattern_ratio_limit(long long n, double theta) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("theta must lie in [0, 1]");
    const long long m = std::min(n, risk_cutoff(n, theta));
    if (n <= 64) {
        // exact 128-bit Pascal recurrence; the partial sums (< 2^64) and the
        // final power-of-two scaling are both exact in a 64-bit mantissa
        unsigned __int128 binom = 1;
        long double acc = 0.0L;
        for (long long i = 0; i <= m; ++i) {
            acc += static_cast<long double>(static_cast<unsigned long long>(binom));
            binom = binom * static_cast<unsigned __int128>(n - i) /
                    static_cast<unsigned __int128>(i + 1);
        }
        return static_cast<double>(ldexpl(acc, static_cast<int>(-n)));
    }
    // log-space evaluation for large n
    const double ln2 = std::log(2.0);
    double log_acc = -std::numeric_limits<double>::infinity();
    for (long long i = 0; i <= m; ++i) {
        const double log_term = std::lgamma(static_cast<double>(n) + 1.0) -
                                std::lgamma(static_cast<double>(i) + 1.0) -
                                std::lgamma(static_cast<double>(n - i) + 1.0) -
                                static_cast<double>(n) * ln2;
        const double hi = std::max(log_acc, log_term), lo = std::min(log_acc, log_term);
        log_acc = hi + std::log1p(std::exp(lo - hi));
    }
    return std::exp(log_acc);
}

std::pair<double, double> pattern_entropy_bounds(long long n, double theta) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (theta <= 0.0 || theta > 0.5)
        throw std::invalid_argument("entropy bounds require theta in (0, 1/2]");
    auto entropy = [](double t) { return -t * std::log2(t) - (1.0 - t) * std::log2(1.0 - t); };
    const double upper = std::exp2(static_cast<double>(n) * (entropy(theta) - 1.0));
    // The binomial-coefficient lower bound is stated for integer cutoffs, so
    // it is evaluated at the realized cutoff fraction floor(theta n)/n; a
    // zero cutoff degenerates to the single perfect pattern.
    const long long m = std::min(n, risk_cutoff(n, theta));
    double lower;
    if (m == 0) {
        lower = std::exp2(-static_cast<double>(n));
    } else {
        const double t = static_cast<double>(m) / static_cast<double>(n);
        lower = std::exp2(static_cast<double>(n) * (entropy(t) - 1.0)) /
                std::sqrt(8.0 * static_cast<double>(n) * t * (1.0 - t));
    }
    return {lower, upper};
}

LipschitzRhs lipschitz_generalization_rhs(double lipschitz, double rademacher, double b,
                                          long long n, double epsilon, double delta, double theta,
                                          LipschitzVariant variant) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (lipschitz < 0.0 || rademacher < 0.0 || b < 0.0 || delta < 0.0)
        throw std::invalid_argument("K, R_n, b and delta must be nonnegative");
    check_epsilon(epsilon, 2.0);
    LipschitzRhs out;
    const double tail = b * std::sqrt(std::log(2.0 / epsilon) / (2.0 * static_cast<double>(n)));
    double complexity = 2.0 * lipschitz * rademacher;
    if (variant == LipschitzVariant::reduced_complexity)
        complexity = 2.0 * lipschitz * (delta + rademacher);
    out.rhs = complexity + tail;
    if (variant == LipschitzVariant::existence_I)
        out.companion_radius = lipschitz > 0.0
                                   ? theta / lipschitz
                                   : std::numeric_limits<double>::infinity();
    return out;
}

double growth_lower_bound(double c, int t) {
    if (!(c > 1.0)) throw std::invalid_argument("growth constant C must exceed 1");
    if (t < 1) throw std::invalid_argument("hierarchy length T must be >= 1");
    return (std::pow(c, static_cast<double>(t)) - 1.0) / (c - 1.0);
}

namespace {
double point_distance(const std::vector<double>& a, const std::vector<double>& b,
                      PackingMetric metric) {
    double acc = 0.0;
    switch (metric) {
        case PackingMetric::l1:
            for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
            return acc;
        case PackingMetric::l2:
            for (std::size_t i = 0; i < a.size(); ++i) acc += (a[i] - b[i]) * (a[i] - b[i]);
            return std::sqrt(acc);
        case PackingMetric::hamming:
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) acc += 1.0;
            return acc;
    }
    return acc;
}
}  // namespace

long long packing_count_lower_bound(const std::vector<std::vector<double>>& points,
                                    double two_delta, PackingMetric metric) {
    if (points.empty()) throw std::invalid_argument("packing: empty point list");
    const std::size_t dim = points.front().size();
    for (const auto& pt : points)
        if (pt.size() != dim) throw std::invalid_argument("packing: ragged point list");

    std::vector<std::size_t> chosen{0};
    std::vector<double> min_dist(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        min_dist[i] = point_distance(points[i], points[0], metric);

    while (true) {
        // farthest remaining point from the current packing, lowest index on ties
        std::size_t best = points.size();
        double best_dist = two_delta;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (min_dist[i] > best_dist) {
                best_dist = min_dist[i];
                best = i;
            }
        }
        if (best == points.size()) break;
        chosen.push_back(best);
        for (std::size_t i = 0; i < points.size(); ++i)
            min_dist[i] = std::min(min_dist[i], point_distance(points[i], points[best], metric));
    }
    return static_cast<long long>(chosen.size());
}

}  // namespace rashomon
