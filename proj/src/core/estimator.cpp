#include "core/estimator.hpp"

#include <cmath>
#include <nlohmann/json.hpp>
#include <set>
#include <stdexcept>

#include "core/parallel.hpp"

namespace rashomon {

void RashomonSpec::validate() const {
    if (theta < 0.0) throw std::invalid_argument("theta must be nonnegative");
    if (anchored && gamma < 0.0) throw std::invalid_argument("anchor gamma must be nonnegative");
}

nlohmann::json RatioEstimate::to_json() const {
    nlohmann::json j{
        {"ratio_fraction", ratio_fraction},
        {"ratio_percent", ratio_percent},
        {"log10_fraction", has_log10 ? nlohmann::json(log10_fraction) : nlohmann::json()},
        {"k", samples},
        {"t", confidence_radius},
        {"alpha", alpha},
        {"estimator", estimator == EstimatorKind::rejection ? "rejection" : "importance"},
        {"exhaustive", exhaustive},
        {"in_set_count", in_set_count},
        {"min_nonzero_fraction", min_nonzero_fraction},
        {"threshold", threshold},
        {"reference_risk", reference_risk},
        {"theta", theta},
        {"seed", seed},
    };
    return j;
}

long long hoeffding_sample_size(double t, double alpha) {
    if (t <= 0.0) throw std::invalid_argument("tolerance t must be positive");
    if (alpha <= 0.0 || alpha > 2.0) throw std::invalid_argument("alpha must lie in (0, 2]");
    return static_cast<long long>(std::ceil(std::log(2.0 / alpha) / (2.0 * t * t)));
}

double hoeffding_radius(long long k, double alpha) {
    if (alpha <= 0.0 || alpha > 2.0) throw std::invalid_argument("alpha must lie in (0, 2]");
    if (k < 1) return std::numeric_limits<double>::infinity();
    return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(k)));
}

namespace {

void fill_log10(RatioEstimate& e) {
    if (e.ratio_fraction > 0.0) {
        e.log10_fraction = std::log10(e.ratio_fraction);
        e.has_log10 = true;
    } else {
        e.has_log10 = false;
    }
}

}  // namespace

RatioEstimate estimate_ratio_rejection(const HypothesisSpace& space, const RashomonSpec& spec,
                                       long long k, std::uint64_t seed,
                                       const RejectionOptions& opt) {
    spec.validate();
    if (opt.alpha <= 0.0 || opt.alpha > 2.0)
        throw std::invalid_argument("alpha must lie in (0, 2]");
    RatioEstimate e;
    e.estimator = EstimatorKind::rejection;
    e.alpha = opt.alpha;
    e.seed = seed;
    e.threshold = spec.threshold();
    e.reference_risk = spec.anchored ? 0.0 : spec.reference_risk;
    e.theta = spec.anchored ? 0.0 : spec.theta;

    const std::size_t space_size = space.enumerable_risks.size();
    if (space_size > 0 && space_size <= opt.exhaustive_cap) {
        long long in_set = 0;
        for (double r : space.enumerable_risks)
            if (spec.contains(r)) ++in_set;
        e.exhaustive = true;
        e.samples = static_cast<long long>(space_size);
        e.in_set_count = in_set;
        e.ratio_fraction = static_cast<double>(in_set) / static_cast<double>(space_size);
        e.confidence_radius = 0.0;
        e.min_nonzero_fraction = 1.0 / static_cast<double>(space_size);
    } else {
        if (k < 1) throw std::invalid_argument("sample count k must be >= 1");
        if (!space.sample_risk) throw std::invalid_argument("hypothesis space has no sampler");
        long long in_set = 0;
        parallel_chunks<long long>(
            k, 0,
            [&](long long i, long long& acc) {
                RngStream rng = RngStream::substream(seed, streams::rejection,
                                                     static_cast<std::uint64_t>(i));
                if (spec.contains(space.sample_risk(rng))) ++acc;
            },
            [](long long& a, const long long& b) { a += b; }, in_set);
        e.samples = k;
        e.in_set_count = in_set;
        e.ratio_fraction = static_cast<double>(in_set) / static_cast<double>(k);
        e.confidence_radius = hoeffding_radius(k, opt.alpha);
        e.min_nonzero_fraction = 1.0 / static_cast<double>(k);
    }
    e.ratio_percent = e.ratio_fraction * 100.0;
    fill_log10(e);
    return e;
}

RatioEstimate estimate_ratio_importance(const Dataset& d, int depth, const RashomonSpec& spec,
                                        long long k, std::uint64_t seed, double alpha) {
    spec.validate();
    if (k < 1) throw std::invalid_argument("sample count k must be >= 1");
    const double weight = proposal_importance_weight(depth);
    const double log10_weight = proposal_importance_log10_weight(depth);

    long long in_set = 0;
    parallel_chunks<long long>(
        k, 0,
        [&](long long i, long long& acc) {
            RngStream rng =
                RngStream::substream(seed, streams::proposal, static_cast<std::uint64_t>(i));
            const SampledHypothesis h = sample_proposal_tree(d, depth, rng);
            if (spec.contains(h.empirical_risk)) ++acc;
        },
        [](long long& a, const long long& b) { a += b; }, in_set);

    RatioEstimate e;
    e.estimator = EstimatorKind::importance;
    e.alpha = alpha;
    e.seed = seed;
    e.samples = k;
    e.in_set_count = in_set;
    e.threshold = spec.threshold();
    e.reference_risk = spec.anchored ? 0.0 : spec.reference_risk;
    e.theta = spec.anchored ? 0.0 : spec.theta;
    e.ratio_fraction = weight * static_cast<double>(in_set) / static_cast<double>(k);
    e.ratio_percent = e.ratio_fraction * 100.0;
    e.min_nonzero_fraction = weight / static_cast<double>(k);
    e.confidence_radius = hoeffding_radius(k, alpha);
    if (in_set > 0) {
        // log-space form survives depths whose weight underflows a double
        e.log10_fraction = log10_weight +
                           std::log10(static_cast<double>(in_set) / static_cast<double>(k));
        e.has_log10 = true;
    } else {
        e.has_log10 = false;
    }
    return e;
}

PatternTally pattern_ratio_exact(const std::vector<std::vector<int>>& prediction_vectors,
                                 const std::vector<double>& risks, const RashomonSpec& spec) {
    spec.validate();
    if (prediction_vectors.empty()) throw std::invalid_argument("empty hypothesis list");
    if (prediction_vectors.size() != risks.size())
        throw std::invalid_argument("risks must align with prediction vectors");
    const std::size_t n = prediction_vectors.front().size();
    std::set<std::vector<int>> all, in_set;
    for (std::size_t i = 0; i < prediction_vectors.size(); ++i) {
        if (prediction_vectors[i].size() != n)
            throw std::invalid_argument("prediction vectors must share one length");
        all.insert(prediction_vectors[i]);
        if (spec.contains(risks[i])) in_set.insert(prediction_vectors[i]);
    }
    PatternTally t;
    t.numerator = static_cast<long long>(in_set.size());
    t.denominator = static_cast<long long>(all.size());
    t.ratio = static_cast<double>(t.numerator) / static_cast<double>(t.denominator);
    return t;
}

bool anchored_membership(double risk, double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("anchor gamma must be nonnegative");
    return risk <= gamma;
}

double average_hamming(const std::vector<std::vector<int>>& prediction_vectors) {
    const std::size_t m = prediction_vectors.size();
    if (m < 2) throw std::invalid_argument("average_hamming needs at least two vectors");
    const std::size_t n = prediction_vectors.front().size();
    for (const auto& v : prediction_vectors)
        if (v.size() != n)
            throw std::invalid_argument("prediction vectors must share one length");
    long long total = 0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t i = 0; i < n; ++i)
                if (prediction_vectors[a][i] != prediction_vectors[b][i]) ++total;
        }
    }
    const double pairs = static_cast<double>(m) * static_cast<double>(m - 1) / 2.0;
    return static_cast<double>(total) / pairs;
}

}  // namespace rashomon
