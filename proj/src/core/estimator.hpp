#pragma once

#include <cstdint>
#include <functional>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <vector>

#include "core/dataset.hpp"
#include "core/rng.hpp"
#include "core/trees.hpp"

namespace rashomon {

// Membership rule for a Rashomon set: risk <= reference_risk + theta, or
// risk <= gamma when anchored. The threshold test is inclusive.
struct RashomonSpec {
    double theta = 0.0;
    double reference_risk = 0.0;
    bool anchored = false;
    double gamma = 0.0;

    double threshold() const { return anchored ? gamma : reference_risk + theta; }
    bool contains(double risk) const { return risk <= threshold(); }
    void validate() const;
};

enum class EstimatorKind { rejection, importance };

struct RatioEstimate {
    double ratio_fraction = 0.0;
    double ratio_percent = 0.0;
    double log10_fraction = 0.0;      // meaningful only when has_log10
    bool has_log10 = false;           // false marks the ratio-zero case
    long long samples = 0;            // k
    double confidence_radius = 0.0;   // t implied by k at the configured alpha
    double alpha = 0.05;
    EstimatorKind estimator = EstimatorKind::rejection;
    bool exhaustive = false;          // enumeration replaced sampling
    long long in_set_count = 0;
    double min_nonzero_fraction = 0.0;  // smallest representable nonzero estimate
    double threshold = 0.0;
    double reference_risk = 0.0;
    double theta = 0.0;
    std::uint64_t seed = 0;

    nlohmann::json to_json() const;
};

// ceil(ln(2/alpha) / (2 t^2)): samples needed to pin the ratio within t at
// confidence 1 - alpha. alpha = 2 collapses to zero samples.
long long hoeffding_sample_size(double t, double alpha);

// t implied by a sample count at the given alpha.
double hoeffding_radius(long long k, double alpha);

// A hypothesis space the rejection estimator can draw risks from. When
// `enumerable_risks` is non-empty and no larger than the configured cap,
// estimation is replaced by exact counting.
struct HypothesisSpace {
    std::function<double(RngStream&)> sample_risk;
    std::vector<double> enumerable_risks;
};

struct RejectionOptions {
    double alpha = 0.05;
    std::size_t exhaustive_cap = 100000;
};

RatioEstimate estimate_ratio_rejection(const HypothesisSpace& space, const RashomonSpec& spec,
                                       long long k, std::uint64_t seed,
                                       const RejectionOptions& opt = {});

// Importance estimate over depth-D proposal trees:
// (1/k) * sum of (1/2)^(2^depth) over in-set draws.
RatioEstimate estimate_ratio_importance(const Dataset& d, int depth, const RashomonSpec& spec,
                                        long long k, std::uint64_t seed, double alpha = 0.05);

struct PatternTally {
    long long numerator = 0;    // distinct in-set prediction patterns
    long long denominator = 0;  // distinct patterns over the whole list
    double ratio = 0.0;
};

// Exact pattern tally over an explicit hypothesis list.
PatternTally pattern_ratio_exact(const std::vector<std::vector<int>>& prediction_vectors,
                                 const std::vector<double>& risks, const RashomonSpec& spec);

bool anchored_membership(double risk, double gamma);

// Mean Hamming distance over unordered pairs of prediction vectors.
double average_hamming(const std::vector<std::vector<int>>& prediction_vectors);

}  // namespace rashomon
