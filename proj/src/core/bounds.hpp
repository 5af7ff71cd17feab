#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace rashomon {

// Right-hand sides and probabilities of the finite-class results, evaluated
// exactly from caller-supplied quantities. Natural logs throughout except
// the binary entropy, which is base 2 by definition.

// gamma + 2b sqrt((ln|F1| + ln(2/eps)) / (2n))
double thm_anchored_rhs(double gamma, double b, long long f1_size, double epsilon, long long n);

// 2 gamma + b sqrt(ln(1/eps) / (2n))
double thm_approximating_set_rhs(double gamma, double b, double epsilon, long long n);

// 1 - prod_{i=1..rset} (1 - f1 / (f2 - rset + i)), the chance that a uniform
// without-replacement reference class of size f1 hits the set. Evaluated in
// log space; equals 1 - C(f2-rset, f1)/C(f2, f1).
double sampled_subclass_probability(long long f2_size, long long f1_size, long long rset_size);

// Smallest f1 with (1-eps) * p >= overall_confidence under the split
// eps = 1 - sqrt(overall_confidence). Integer bisection on the monotone p.
long long min_reference_class_size(long long f2_size, double rset_ratio,
                                   double overall_confidence);

// 1 - eps^(1/f1): the anchored-ratio level at which a random reference class
// of size f1 contains an in-set model with probability 1 - eps.
double lemma_ratio_threshold(long long f1_size, double epsilon);

// 1 - exp(-2n (eps/b)^2)
double membership_probability(long long n, double epsilon, double b);

// sum_{i <= floor(theta n)} C(n, i) / 2^n, exact up to n = 64 and in log
// space beyond.
double pattern_ratio_limit(long long n, double theta);

// (lower, upper) entropy sandwich around the limit, valid for theta in (0, 1/2].
std::pair<double, double> pattern_entropy_bounds(long long n, double theta);

enum class LipschitzVariant { existence_I, existence_II, multiple, reduced_complexity };

struct LipschitzRhs {
    double rhs = 0.0;
    // theta / K, the hypothesis-distance radius accompanying existence_I
    std::optional<double> companion_radius;
};

// 2K R_n + b sqrt(ln(2/eps)/(2n)); reduced_complexity adds 2K delta.
LipschitzRhs lipschitz_generalization_rhs(double lipschitz, double rademacher, double b,
                                          long long n, double epsilon, double delta, double theta,
                                          LipschitzVariant variant);

// (C^T - 1) / (C - 1)
double growth_lower_bound(double c, int t);

enum class PackingMetric { l1, l2, hamming };

// Greedy farthest-point packing at separation > two_delta; the count is a
// valid packing and hence a lower bound on the packing number.
long long packing_count_lower_bound(const std::vector<std::vector<double>>& points,
                                    double two_delta, PackingMetric metric);

}  // namespace rashomon
