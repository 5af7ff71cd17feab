#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <string>
#include <vector>

#include "core/dataset.hpp"
#include "core/estimator.hpp"

namespace rashomon {

enum class ThetaPolicy { absolute, relative };
enum class MeasureKind { ratio, volume };

struct CurvePoint {
    std::string label;             // hierarchy member (tree depth / poly degree)
    double train_risk = 0.0;       // fold-averaged reference risk
    std::optional<double> test_risk;
    double measure = 0.0;          // ratio fraction or ellipsoid volume
    double measure_log10 = 0.0;
    bool has_log10 = false;        // false = minus-infinity marker
    bool floored = false;          // log value came from the zero-ratio floor
    double theta_used = 0.0;       // fold-averaged theta for relative policies
    long long samples = 0;         // k per fold (classification)
    long long in_set_total = 0;    // summed over folds (classification)
    std::string error;             // per-point failure note (e.g. singular gram)
};

struct RashomonCurve {
    ThetaPolicy policy = ThetaPolicy::absolute;
    double theta_value = 0.0;      // absolute theta or the relative factor
    MeasureKind kind = MeasureKind::ratio;
    std::vector<CurvePoint> points;
    int fold_count = 0;
    std::uint64_t seed = 0;
};

// Tree hierarchy curve: per depth and fold, the reference risk is the better
// of the best sampled tree and the depth-matched greedy tree; ratios come
// from importance sampling with `samples_per_depth` draws per fold. Risks,
// test risks and ratio fractions are averaged arithmetically over folds.
RashomonCurve build_tree_curve(const Dataset& d, const FoldPlan& folds, int depth_min,
                               int depth_max, double theta, long long samples_per_depth,
                               std::uint64_t seed);

// Polynomial-degree ridge curve with theta_t = theta_rel * train risk of the
// per-fold fit. pca_k <= 0 skips the PCA reduction; pca_on_train_only fits
// the projection on each fold's training rows instead of the whole dataset.
RashomonCurve build_ridge_curve(const Dataset& d, const FoldPlan& folds, int degree_min,
                                int degree_max, double reg, double theta_rel, int pca_k = 3,
                                bool pca_on_train_only = false);

enum class CombinerKind { weighted_sum, product, lexicographic };

// argmax over points of G(1 - risk, measure); `param` is the accuracy weight
// for weighted_sum and the risk tolerance for lexicographic. Ties take the
// simplest (earliest) space.
std::string elbow_maximin(const RashomonCurve& curve, CombinerKind combiner, double param);

// Largest scaled perpendicular distance from the line through the first and
// last points in the (risk, log10 measure) plane. Falls back to the
// lexicographic rule when the endpoints coincide.
std::string elbow_geometric(const RashomonCurve& curve, double fallback_tolerance = 0.01);

// Walking from the most complex space down, the simplest space whose risk
// stays within jump_threshold of the most complex one.
std::string elbow_risk_jump(const std::vector<double>& risks,
                            const std::vector<std::string>& labels, double jump_threshold);
std::string elbow_risk_jump(const RashomonCurve& curve, double jump_threshold);

nlohmann::json curve_to_json(const RashomonCurve& curve, double lexicographic_tolerance = 0.01,
                             double jump_threshold = 0.05);
std::string curve_to_csv(const RashomonCurve& curve);
RashomonCurve curve_from_json(const nlohmann::json& j);

}  // namespace rashomon
