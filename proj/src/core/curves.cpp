#include "core/curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "core/parallel.hpp"
#include "core/ridge.hpp"
#include "core/rng.hpp"
#include "core/trees.hpp"

namespace rashomon {

namespace {

Dataset subset_rows(const Dataset& d, const std::vector<int>& rows) {
    Dataset out;
    out.features.resize(static_cast<Eigen::Index>(rows.size()),
                        static_cast<Eigen::Index>(d.cols()));
    out.labels.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.features.row(static_cast<Eigen::Index>(i)) = d.features.row(rows[i]);
        out.labels[static_cast<Eigen::Index>(i)] = d.labels[rows[i]];
    }
    out.feature_kinds = d.feature_kinds;
    out.feature_names = d.feature_names;
    out.task = d.task;
    out.name = d.name;
    out.negative_label = d.negative_label;
    out.positive_label = d.positive_label;
    return out;
}

void split_fold(const FoldPlan& folds, int fold, std::vector<int>& train, std::vector<int>& test) {
    train.clear();
    test.clear();
    for (std::size_t i = 0; i < folds.assignments.size(); ++i)
        (folds.assignments[i] == fold ? test : train).push_back(static_cast<int>(i));
}

}  // namespace

RashomonCurve build_tree_curve(const Dataset& d, const FoldPlan& folds, int depth_min,
                               int depth_max, double theta, long long samples_per_depth,
                               std::uint64_t seed) {
    if (d.task != Task::classification)
        throw std::invalid_argument("tree curve requires a classification dataset");
    if (depth_min < 1 || depth_max < depth_min)
        throw std::invalid_argument("bad depth range");
    if (samples_per_depth < 1) throw std::invalid_argument("samples_per_depth must be >= 1");
    if (theta < 0.0) throw std::invalid_argument("theta must be nonnegative");

    RashomonCurve curve;
    curve.policy = ThetaPolicy::absolute;
    curve.theta_value = theta;
    curve.kind = MeasureKind::ratio;
    curve.fold_count = folds.fold_count;
    curve.seed = seed;

    for (int depth = depth_min; depth <= depth_max; ++depth) {
        CurvePoint pt;
        pt.label = "depth-" + std::to_string(depth);
        pt.samples = samples_per_depth;
        pt.theta_used = theta;

        double risk_sum = 0.0, test_sum = 0.0, fraction_sum = 0.0;
        long long in_set_total = 0;
        const double weight = proposal_importance_weight(depth);
        const double log10_weight = proposal_importance_log10_weight(depth);

        for (int fold = 0; fold < folds.fold_count; ++fold) {
            std::vector<int> train_rows, test_rows;
            split_fold(folds, fold, train_rows, test_rows);
            if (train_rows.empty() || test_rows.empty())
                throw std::runtime_error("curve: fold with an empty train or test side");
            const Dataset train = subset_rows(d, train_rows);
            const Dataset test = subset_rows(d, test_rows);

            const std::uint64_t fold_seed =
                slice_seed(seed, static_cast<std::uint64_t>(depth), static_cast<std::uint64_t>(fold));

            // one pass stores the sampled risks; the membership threshold
            // is only known once the best sampled risk is in hand
            struct Acc {
                std::vector<double> risks;
                double best = std::numeric_limits<double>::infinity();
                long long best_index = -1;
            };
            Acc acc;
            parallel_chunks<Acc>(
                samples_per_depth, Acc{},
                [&](long long i, Acc& a) {
                    RngStream rng = RngStream::substream(fold_seed, streams::proposal,
                                                         static_cast<std::uint64_t>(i));
                    const SampledHypothesis h = sample_proposal_tree(train, depth, rng);
                    a.risks.push_back(h.empirical_risk);
                    if (h.empirical_risk < a.best) {
                        a.best = h.empirical_risk;
                        a.best_index = i;
                    }
                },
                [](Acc& x, const Acc& y) {
                    // chunks merge in index order, so concatenation keeps the
                    // sample order and "first best index wins" stays exact
                    x.risks.insert(x.risks.end(), y.risks.begin(), y.risks.end());
                    if (y.best < x.best) {
                        x.best = y.best;
                        x.best_index = y.best_index;
                    }
                },
                acc);

            const DecisionTree cart = cart_fit(train, depth);
            const double cart_risk = empirical_risk(cart, train);
            const double reference = std::min(cart_risk, acc.best);
            const double threshold = reference + theta;

            long long in_set = 0;
            for (double r : acc.risks)
                if (r <= threshold) ++in_set;
            in_set_total += in_set;
            fraction_sum += static_cast<double>(in_set) / static_cast<double>(samples_per_depth);
            risk_sum += reference;

            // test risk of the reference model: the better of the greedy tree
            // and the best sampled tree (regenerated from its substream)
            if (cart_risk <= acc.best) {
                test_sum += empirical_risk(cart, test);
            } else {
                RngStream rng = RngStream::substream(fold_seed, streams::proposal,
                                                     static_cast<std::uint64_t>(acc.best_index));
                const SampledHypothesis best = sample_proposal_tree(train, depth, rng);
                test_sum += empirical_risk(best.tree, test);
            }
        }

        const double fold_n = static_cast<double>(folds.fold_count);
        pt.train_risk = risk_sum / fold_n;
        pt.test_risk = test_sum / fold_n;
        pt.in_set_total = in_set_total;
        const double avg_fraction = fraction_sum / fold_n;
        pt.measure = weight * avg_fraction;
        if (in_set_total > 0) {
            pt.measure_log10 = log10_weight + std::log10(avg_fraction);
            pt.has_log10 = true;
        } else {
            // zero-ratio floor: a tenth of the smallest representable estimate
            pt.measure_log10 = log10_weight -
                               std::log10(static_cast<double>(samples_per_depth)) - 1.0;
            pt.has_log10 = true;
            pt.floored = true;
        }
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

RashomonCurve build_ridge_curve(const Dataset& d, const FoldPlan& folds, int degree_min,
                                int degree_max, double reg, double theta_rel, int pca_k,
                                bool pca_on_train_only) {
    if (d.task != Task::regression)
        throw std::invalid_argument("ridge curve requires a regression dataset");
    if (degree_min < 1 || degree_max < degree_min)
        throw std::invalid_argument("bad degree range");
    if (theta_rel < 0.0) throw std::invalid_argument("relative theta must be nonnegative");

    RashomonCurve curve;
    curve.policy = ThetaPolicy::relative;
    curve.theta_value = theta_rel;
    curve.kind = MeasureKind::volume;
    curve.fold_count = folds.fold_count;
    curve.seed = folds.seed;

    Dataset base = d;
    if (pca_k > 0 && !pca_on_train_only)
        base = pca_top_k(d, std::min<int>(pca_k, static_cast<int>(d.cols())));

    for (int degree = degree_min; degree <= degree_max; ++degree) {
        CurvePoint pt;
        pt.label = "degree-" + std::to_string(degree);
        double risk_sum = 0.0, test_sum = 0.0, volume_sum = 0.0, theta_sum = 0.0;
        double log10_sum = 0.0;
        bool ok = true;
        std::string error;

        for (int fold = 0; fold < folds.fold_count && ok; ++fold) {
            std::vector<int> train_rows, test_rows;
            split_fold(folds, fold, train_rows, test_rows);
            if (train_rows.empty() || test_rows.empty())
                throw std::runtime_error("curve: fold with an empty train or test side");
            try {
                Dataset reduced = base;
                if (pca_k > 0 && pca_on_train_only)
                    reduced = pca_top_k(d, std::min<int>(pca_k, static_cast<int>(d.cols())),
                                        train_rows);
                const Dataset expanded = polynomial_features(reduced, degree);
                const Dataset train = subset_rows(expanded, train_rows);
                const Dataset test = subset_rows(expanded, test_rows);

                const RidgeFit fit = ridge_fit(train, reg);
                const double train_risk = ridge_risk_sum(train, fit.w_hat, reg);
                const double theta = theta_rel * train_risk;
                theta_sum += theta;
                risk_sum += train_risk / static_cast<double>(train.rows());
                test_sum += (test.features * fit.w_hat - test.labels).squaredNorm() /
                            static_cast<double>(test.rows());

                if (theta > 0.0) {
                    RidgeSpec spec;
                    spec.singular_values = singular_values(train);
                    spec.reg = reg;
                    spec.theta = theta;
                    spec.dim = static_cast<int>(train.cols());
                    volume_sum += ridge_volume(spec);
                    log10_sum += ridge_log10_volume(spec);
                }
            } catch (const std::exception& e) {
                ok = false;
                error = e.what();
            }
        }

        if (!ok) {
            pt.error = error;
            pt.measure = 0.0;
            pt.has_log10 = false;
        } else {
            const double fold_n = static_cast<double>(folds.fold_count);
            pt.train_risk = risk_sum / fold_n;
            pt.test_risk = test_sum / fold_n;
            pt.theta_used = theta_sum / fold_n;
            pt.measure = volume_sum / fold_n;
            if (pt.measure > 0.0) {
                pt.measure_log10 = std::log10(pt.measure);
                pt.has_log10 = true;
                // fall back to the fold-mean log volume when the linear mean
                // underflowed to zero
            } else if (theta_sum > 0.0) {
                pt.measure_log10 = log10_sum / fold_n;
                pt.has_log10 = true;
                pt.floored = true;
            } else {
                pt.has_log10 = false;  // theta_rel = 0: degenerate ellipsoid
            }
        }
        curve.points.push_back(std::move(pt));
    }
    return curve;
}

namespace {

const CurvePoint* valid_point(const RashomonCurve& curve, std::size_t i) {
    const CurvePoint& p = curve.points[i];
    return p.error.empty() ? &p : nullptr;
}

std::vector<std::size_t> valid_indices(const RashomonCurve& curve) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < curve.points.size(); ++i)
        if (valid_point(curve, i)) idx.push_back(i);
    if (idx.empty()) throw std::invalid_argument("curve has no valid points");
    return idx;
}

}  // namespace

std::string elbow_maximin(const RashomonCurve& curve, CombinerKind combiner, double param) {
    const auto idx = valid_indices(curve);
    std::size_t best = idx.front();
    if (combiner == CombinerKind::lexicographic) {
        double best_risk = std::numeric_limits<double>::infinity();
        for (std::size_t i : idx) best_risk = std::min(best_risk, curve.points[i].train_risk);
        double best_measure = -std::numeric_limits<double>::infinity();
        for (std::size_t i : idx) {
            const CurvePoint& p = curve.points[i];
            if (p.train_risk <= best_risk + param && p.measure > best_measure) {
                best_measure = p.measure;
                best = i;
            }
        }
        return curve.points[best].label;
    }
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t i : idx) {
        const CurvePoint& p = curve.points[i];
        const double accuracy = 1.0 - p.train_risk;
        const double score = combiner == CombinerKind::product
                                 ? accuracy * p.measure
                                 : param * accuracy + (1.0 - param) * p.measure;
        if (score > best_score) {
            best_score = score;
            best = i;
        }
    }
    return curve.points[best].label;
}

std::string elbow_geometric(const RashomonCurve& curve, double fallback_tolerance) {
    const auto idx = valid_indices(curve);
    if (idx.size() < 3)
        throw std::invalid_argument("geometric elbow needs at least three curve points");

    // coordinates: (risk, log10 measure), min-max scaled per axis
    std::vector<double> xs, ys;
    for (std::size_t i : idx) {
        const CurvePoint& p = curve.points[i];
        if (!p.has_log10)
            throw std::invalid_argument("geometric elbow: point without a finite log measure");
        xs.push_back(p.train_risk);
        ys.push_back(p.measure_log10);
    }
    const auto scale = [](std::vector<double>& v) {
        const double lo = *std::min_element(v.begin(), v.end());
        const double hi = *std::max_element(v.begin(), v.end());
        for (double& x : v) x = hi > lo ? (x - lo) / (hi - lo) : 0.0;
    };
    scale(xs);
    scale(ys);

    const double x0 = xs.front(), y0 = ys.front();
    const double x1 = xs.back(), y1 = ys.back();
    const double len = std::hypot(x1 - x0, y1 - y0);
    if (len == 0.0)  // endpoints coincide after scaling
        return elbow_maximin(curve, CombinerKind::lexicographic, fallback_tolerance);

    std::size_t best = idx[1];
    double best_dist = -1.0;
    for (std::size_t j = 1; j + 1 < idx.size(); ++j) {
        const double dist =
            std::abs((x1 - x0) * (y0 - ys[j]) - (x0 - xs[j]) * (y1 - y0)) / len;
        if (dist > best_dist) {
            best_dist = dist;
            best = idx[j];
        }
    }
    return curve.points[best].label;
}

std::string elbow_risk_jump(const std::vector<double>& risks,
                            const std::vector<std::string>& labels, double jump_threshold) {
    if (risks.size() < 2) throw std::invalid_argument("risk-jump elbow needs at least two risks");
    if (risks.size() != labels.size()) throw std::invalid_argument("risks and labels must align");
    const double anchor = risks.back();
    std::size_t chosen = risks.size() - 1;
    for (std::size_t i = risks.size() - 1; i-- > 0;) {
        if (risks[i] - anchor > jump_threshold) break;
        chosen = i;
    }
    return labels[chosen];
}

std::string elbow_risk_jump(const RashomonCurve& curve, double jump_threshold) {
    const auto idx = valid_indices(curve);
    std::vector<double> risks;
    std::vector<std::string> labels;
    for (std::size_t i : idx) {
        risks.push_back(curve.points[i].train_risk);
        labels.push_back(curve.points[i].label);
    }
    return elbow_risk_jump(risks, labels, jump_threshold);
}

nlohmann::json curve_to_json(const RashomonCurve& curve, double lexicographic_tolerance,
                             double jump_threshold) {
    nlohmann::json points = nlohmann::json::array();
    for (const auto& p : curve.points) {
        nlohmann::json jp{
            {"label", p.label},
            {"train_risk", p.train_risk},
            {"test_risk", p.test_risk ? nlohmann::json(*p.test_risk) : nlohmann::json()},
            {"measure_fraction", p.measure},
            {"measure_percent", curve.kind == MeasureKind::ratio
                                    ? nlohmann::json(p.measure * 100.0)
                                    : nlohmann::json()},
            {"measure_log10", p.has_log10 ? nlohmann::json(p.measure_log10) : nlohmann::json()},
            {"floored", p.floored},
            {"theta", p.theta_used},
            {"k", p.samples},
            {"in_set_total", p.in_set_total},
            {"seed", curve.seed},
        };
        if (!p.error.empty()) jp["error"] = p.error;
        points.push_back(std::move(jp));
    }
    nlohmann::json elbows;
    try {
        elbows["maximin"] = elbow_maximin(curve, CombinerKind::lexicographic,
                                          lexicographic_tolerance);
    } catch (const std::exception&) {
        elbows["maximin"] = nullptr;
    }
    try {
        elbows["geometric"] = elbow_geometric(curve, lexicographic_tolerance);
    } catch (const std::exception&) {
        elbows["geometric"] = nullptr;
    }
    try {
        elbows["risk_jump"] = elbow_risk_jump(curve, jump_threshold);
    } catch (const std::exception&) {
        elbows["risk_jump"] = nullptr;
    }
    return {
        {"theta_policy", curve.policy == ThetaPolicy::absolute ? "absolute" : "relative"},
        {"theta", curve.theta_value},
        {"measure_kind", curve.kind == MeasureKind::ratio ? "ratio" : "volume"},
        {"fold_count", curve.fold_count},
        {"seed", curve.seed},
        {"points", points},
        {"elbows", elbows},
    };
}

std::string curve_to_csv(const RashomonCurve& curve) {
    std::ostringstream out;
    out << "label,train_risk,test_risk,measure_fraction,measure_log10,theta,k,in_set_total\n";
    out.precision(17);
    for (const auto& p : curve.points) {
        out << p.label << ',' << p.train_risk << ',';
        if (p.test_risk) out << *p.test_risk;
        out << ',' << p.measure << ',';
        if (p.has_log10) out << p.measure_log10;
        out << ',' << p.theta_used << ',' << p.samples << ',' << p.in_set_total << '\n';
    }
    return out.str();
}

RashomonCurve curve_from_json(const nlohmann::json& j) {
    RashomonCurve curve;
    curve.policy = j.at("theta_policy").get<std::string>() == "absolute" ? ThetaPolicy::absolute
                                                                         : ThetaPolicy::relative;
    curve.theta_value = j.at("theta").get<double>();
    curve.kind = j.at("measure_kind").get<std::string>() == "ratio" ? MeasureKind::ratio
                                                                    : MeasureKind::volume;
    curve.fold_count = j.value("fold_count", 0);
    curve.seed = j.value("seed", 0ULL);
    for (const auto& jp : j.at("points")) {
        CurvePoint p;
        p.label = jp.at("label").get<std::string>();
        p.train_risk = jp.at("train_risk").get<double>();
        if (jp.contains("test_risk") && !jp.at("test_risk").is_null())
            p.test_risk = jp.at("test_risk").get<double>();
        p.measure = jp.at("measure_fraction").get<double>();
        if (jp.contains("measure_log10") && !jp.at("measure_log10").is_null()) {
            p.measure_log10 = jp.at("measure_log10").get<double>();
            p.has_log10 = true;
        }
        p.floored = jp.value("floored", false);
        p.theta_used = jp.value("theta", 0.0);
        p.samples = jp.value("k", 0LL);
        p.in_set_total = jp.value("in_set_total", 0LL);
        if (jp.contains("error")) p.error = jp.at("error").get<std::string>();
        curve.points.push_back(std::move(p));
    }
    return curve;
}

}  // namespace rashomon
