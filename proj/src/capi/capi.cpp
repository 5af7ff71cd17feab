#include "rashomon/rashomon.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "core/bounds.hpp"
#include "core/curves.hpp"
#include "core/dataset.hpp"
#include "core/estimator.hpp"
#include "core/ridge.hpp"
#include "core/rng.hpp"
#include "core/svm1.hpp"
#include "core/synthetic.hpp"
#include "core/trees.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error = "no error";

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// runs the body, translating exceptions into status codes
template <typename Fn>
rr_status guarded(Fn&& fn) {
    try {
        fn();
        return RR_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return RR_ERROR_INVALID_ARGUMENT;
    } catch (const std::ios_base::failure& e) {
        g_last_error = e.what();
        return RR_ERROR_IO;
    } catch (const std::runtime_error& e) {
        g_last_error = e.what();
        const std::string msg = e.what();
        return msg.find("file") != std::string::npos || msg.find("open") != std::string::npos
                   ? RR_ERROR_IO
                   : RR_ERROR_NUMERIC;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return RR_ERROR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown failure";
        return RR_ERROR_UNKNOWN;
    }
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

struct rr_dataset {
    rashomon::Dataset data;
};

struct rr_curve {
    rashomon::RashomonCurve curve;
};

extern "C" {

const char* rr_last_error(void) { return g_last_error.c_str(); }

void rr_string_free(char* s) { std::free(s); }

/* ------------------------------------------------------------------ */

rr_status rr_dataset_load_csv(const char* path, const char* label_column, rr_task task,
                              rr_dataset** out) {
    return guarded([&] {
        require(path && label_column && out, "null argument");
        auto d = rashomon::load_csv(path, label_column,
                                    task == RR_TASK_CLASSIFICATION
                                        ? rashomon::Task::classification
                                        : rashomon::Task::regression);
        *out = new rr_dataset{std::move(d)};
    });
}

rr_status rr_dataset_create(const double* features, const double* labels, size_t n, size_t p,
                            rr_task task, rr_dataset** out) {
    return guarded([&] {
        require(features && labels && out, "null argument");
        require(n >= 1 && p >= 1, "need n >= 1 and p >= 1");
        Eigen::MatrixXd x(n, p);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < p; ++j)
                x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = features[i * p + j];
        Eigen::VectorXd y(n);
        for (size_t i = 0; i < n; ++i) y[static_cast<Eigen::Index>(i)] = labels[i];
        auto d = rashomon::make_dataset(x, y,
                                        task == RR_TASK_CLASSIFICATION
                                            ? rashomon::Task::classification
                                            : rashomon::Task::regression,
                                        "in-memory");
        *out = new rr_dataset{std::move(d)};
    });
}

rr_status rr_dataset_synthetic(const char* name, size_t n, uint64_t seed, rr_dataset** out) {
    return guarded([&] {
        require(name && out, "null argument");
        const std::string which = name;
        rashomon::Dataset d;
        if (which == "separable")
            d = rashomon::synthetic::separable_margin(n, seed);
        else if (which == "xor")
            d = rashomon::synthetic::xor_corners(n);
        else if (which == "circles")
            d = rashomon::synthetic::circles(n, seed);
        else if (which == "noisy-margin")
            d = rashomon::synthetic::noisy_margin(n, 0.1, seed);
        else if (which == "wave")
            d = rashomon::synthetic::wave_regression(n, 0.05, seed);
        else
            throw std::invalid_argument("unknown synthetic dataset: " + which);
        *out = new rr_dataset{std::move(d)};
    });
}

void rr_dataset_free(rr_dataset* d) { delete d; }

size_t rr_dataset_rows(const rr_dataset* d) { return d ? d->data.rows() : 0; }
size_t rr_dataset_cols(const rr_dataset* d) { return d ? d->data.cols() : 0; }

rr_status rr_dataset_info_json(const rr_dataset* d, char** out) {
    return guarded([&] {
        require(d && out, "null argument");
        json kinds = json::array();
        for (auto k : d->data.feature_kinds)
            kinds.push_back(k == rashomon::FeatureKind::binary ? "binary" : "real");
        json j{{"name", d->data.name},
               {"n", d->data.rows()},
               {"p", d->data.cols()},
               {"task", d->data.task == rashomon::Task::classification ? "classification"
                                                                       : "regression"},
               {"feature_names", d->data.feature_names},
               {"feature_kinds", kinds}};
        if (!d->data.negative_label.empty())
            j["label_mapping"] = {{d->data.negative_label, -1}, {d->data.positive_label, 1}};
        *out = dup_string(j.dump());
    });
}

rr_status rr_dataset_pca(const rr_dataset* d, int k, rr_dataset** out) {
    return guarded([&] {
        require(d && out, "null argument");
        *out = new rr_dataset{rashomon::pca_top_k(d->data, k)};
    });
}

rr_status rr_dataset_polynomial(const rr_dataset* d, int degree, rr_dataset** out) {
    return guarded([&] {
        require(d && out, "null argument");
        *out = new rr_dataset{rashomon::polynomial_features(d->data, degree)};
    });
}

rr_status rr_fold_assignments(const rr_dataset* d, int fold_count, uint64_t seed,
                              int* assignments) {
    return guarded([&] {
        require(d && assignments, "null argument");
        const auto plan = rashomon::make_folds(d->data, fold_count, seed);
        std::copy(plan.assignments.begin(), plan.assignments.end(), assignments);
    });
}

int rr_default_fold_count(size_t n) { return rashomon::default_fold_count(n); }

/* ------------------------------------------------------------------ */

rr_status rr_hoeffding_sample_size(double t, double alpha, long long* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::hoeffding_sample_size(t, alpha);
    });
}

rr_ratio_options rr_ratio_options_default(void) {
    rr_ratio_options opt;
    opt.depth = 7;
    opt.theta = 0.05;
    opt.anchored = 0;
    opt.gamma = 0.0;
    opt.reference_risk = -1.0;
    opt.samples = 10000;
    opt.seed = 0;
    opt.alpha = 0.05;
    opt.estimator = RR_ESTIMATOR_IMPORTANCE;
    opt.exhaustive_cap = 100000;
    return opt;
}

rr_status rr_estimate_tree_ratio(const rr_dataset* d, const rr_ratio_options* opt, char** out) {
    return guarded([&] {
        require(d && opt && out, "null argument");
        const auto& data = d->data;
        require(data.task == rashomon::Task::classification,
                "ratio estimation needs a classification dataset");

        const rashomon::DecisionTree cart = rashomon::cart_fit(data, opt->depth);
        const double cart_risk = rashomon::empirical_risk(cart, data);

        rashomon::RashomonSpec spec;
        spec.theta = opt->theta;
        spec.anchored = opt->anchored != 0;
        spec.gamma = opt->gamma;

        rashomon::DecisionTree best_tree = cart;
        double best_risk = cart_risk;

        rashomon::RatioEstimate est;
        if (opt->estimator == RR_ESTIMATOR_IMPORTANCE) {
            // the reference risk needs the best sampled risk, so scan the
            // substreams once before counting
            if (opt->reference_risk >= 0.0) {
                spec.reference_risk = opt->reference_risk;
            } else {
                double best = cart_risk;
                long long best_index = -1;
                for (long long i = 0; i < opt->samples; ++i) {
                    auto rng = rashomon::RngStream::substream(opt->seed,
                                                              rashomon::streams::proposal,
                                                              static_cast<uint64_t>(i));
                    const auto h = rashomon::sample_proposal_tree(data, opt->depth, rng);
                    if (h.empirical_risk < best) {
                        best = h.empirical_risk;
                        best_index = i;
                    }
                }
                spec.reference_risk = best;
                if (best_index >= 0) {
                    auto rng = rashomon::RngStream::substream(opt->seed,
                                                              rashomon::streams::proposal,
                                                              static_cast<uint64_t>(best_index));
                    best_tree =
                        rashomon::sample_proposal_tree(data, opt->depth, rng).tree;
                    best_risk = best;
                }
            }
            est = rashomon::estimate_ratio_importance(data, opt->depth, spec, opt->samples,
                                                      opt->seed, opt->alpha);
        } else {
            rashomon::HypothesisSpace space;
            std::vector<rashomon::DecisionTree> enumerated;
            const bool all_binary = std::all_of(
                data.feature_kinds.begin(), data.feature_kinds.end(),
                [](rashomon::FeatureKind k) { return k == rashomon::FeatureKind::binary; });
            if (opt->exhaustive_cap > 0 && all_binary &&
                rashomon::enumerate_tree_space(data, opt->depth, opt->exhaustive_cap,
                                               enumerated)) {
                space.enumerable_risks.reserve(enumerated.size());
                for (const auto& t : enumerated)
                    space.enumerable_risks.push_back(rashomon::empirical_risk(t, data));
            }
            space.sample_risk = [&data, depth = opt->depth](rashomon::RngStream& rng) {
                return rashomon::sample_target_tree(data, depth, rng).empirical_risk;
            };
            if (opt->reference_risk >= 0.0) {
                spec.reference_risk = opt->reference_risk;
            } else if (!space.enumerable_risks.empty()) {
                spec.reference_risk = *std::min_element(space.enumerable_risks.begin(),
                                                        space.enumerable_risks.end());
                spec.reference_risk = std::min(spec.reference_risk, cart_risk);
            } else {
                // scan the same substreams the estimator will replay so the
                // reference risk covers the sampled trees
                double best = cart_risk;
                for (long long i = 0; i < opt->samples; ++i) {
                    auto rng = rashomon::RngStream::substream(opt->seed,
                                                              rashomon::streams::rejection,
                                                              static_cast<uint64_t>(i));
                    best = std::min(best, space.sample_risk(rng));
                }
                spec.reference_risk = best;
            }
            rashomon::RejectionOptions ropt;
            ropt.alpha = opt->alpha;
            ropt.exhaustive_cap = opt->exhaustive_cap;
            est = rashomon::estimate_ratio_rejection(space, spec, opt->samples, opt->seed, ropt);
        }

        json j = est.to_json();
        j["cart_risk"] = cart_risk;
        j["best_tree"] = rashomon::tree_to_json(best_tree);
        j["best_tree_risk"] = best_risk;
        *out = dup_string(j.dump());
    });
}

rr_status rr_pattern_ratio(const rr_dataset* d, int depth, double theta, const char* zeta,
                           size_t cap, char** out) {
    return guarded([&] {
        require(d && out, "null argument");
        const auto& data = d->data;
        require(data.task == rashomon::Task::classification,
                "pattern ratio needs a classification dataset");
        const std::string zeta_kind = zeta ? zeta : "sign";
        require(zeta_kind == "sign" || zeta_kind == "loss", "zeta must be 'sign' or 'loss'");

        std::vector<rashomon::DecisionTree> space;
        if (!rashomon::enumerate_tree_space(data, depth, cap == 0 ? 100000 : cap, space))
            throw std::runtime_error("tree space exceeds the enumeration cap");

        std::vector<std::vector<int>> patterns;
        std::vector<double> risks;
        patterns.reserve(space.size());
        risks.reserve(space.size());
        double best = 1.0;
        for (const auto& t : space) {
            auto preds = rashomon::predictions(t, data);
            risks.push_back(rashomon::empirical_risk(t, data));
            best = std::min(best, risks.back());
            if (zeta_kind == "loss") {
                for (std::size_t i = 0; i < preds.size(); ++i)
                    preds[i] = preds[i] != static_cast<int>(data.labels[static_cast<Eigen::Index>(i)]);
            }
            patterns.push_back(std::move(preds));
        }
        rashomon::RashomonSpec spec;
        spec.theta = theta;
        spec.reference_risk = best;
        const auto tally = rashomon::pattern_ratio_exact(patterns, risks, spec);
        json j{{"numerator", tally.numerator},
               {"denominator", tally.denominator},
               {"ratio_fraction", tally.ratio},
               {"ratio_percent", tally.ratio * 100.0},
               {"space_size", space.size()},
               {"zeta", zeta_kind},
               {"threshold", spec.threshold()},
               {"reference_risk", best}};
        *out = dup_string(j.dump());
    });
}

rr_status rr_prediction_diversity(const rr_dataset* d, int depth, double theta,
                                  long long samples, uint64_t seed, const char* scope,
                                  char** out) {
    return guarded([&] {
        require(d && out, "null argument");
        const auto& data = d->data;
        require(data.task == rashomon::Task::classification,
                "diversity needs a classification dataset");
        require(samples >= 2, "need at least two samples");
        const std::string which = scope ? scope : "in-set";
        require(which == "in-set" || which == "all", "scope must be 'in-set' or 'all'");

        const rashomon::DecisionTree cart = rashomon::cart_fit(data, depth);
        double best = rashomon::empirical_risk(cart, data);

        std::vector<rashomon::SampledHypothesis> sampled;
        sampled.reserve(static_cast<std::size_t>(samples));
        for (long long i = 0; i < samples; ++i) {
            auto rng = rashomon::RngStream::substream(seed, rashomon::streams::target,
                                                      static_cast<uint64_t>(i));
            sampled.push_back(rashomon::sample_target_tree(data, depth, rng));
            best = std::min(best, sampled.back().empirical_risk);
        }
        const double threshold = best + theta;

        std::vector<std::vector<int>> preds;
        for (const auto& h : sampled)
            if (which == "all" || h.empirical_risk <= threshold)
                preds.push_back(rashomon::predictions(h.tree, data));
        if (preds.size() < 2)
            throw std::runtime_error("fewer than two models in scope; widen theta or sample more");

        const double avg = rashomon::average_hamming(preds);
        json j{{"models", preds.size()},
               {"average_hamming", avg},
               {"normalized", avg / static_cast<double>(data.rows())},
               {"k", samples},
               {"threshold", threshold},
               {"scope", which},
               {"seed", seed}};
        *out = dup_string(j.dump());
    });
}

/* ------------------------------------------------------------------ */

namespace {

rashomon::RidgeSpec make_spec(const double* sv, int p, double reg, double theta) {
    require(sv != nullptr, "null singular values");
    rashomon::RidgeSpec spec;
    spec.singular_values.assign(sv, sv + p);
    spec.reg = reg;
    spec.theta = theta;
    spec.dim = p;
    return spec;
}

}  // namespace

rr_status rr_ridge_volume(const double* singular_values, int p, double reg, double theta,
                          double* volume, double* log10_volume) {
    return guarded([&] {
        require(volume || log10_volume, "no output requested");
        const auto spec = make_spec(singular_values, p, reg, theta);
        if (volume) *volume = rashomon::ridge_volume(spec);
        if (log10_volume) *log10_volume = rashomon::ridge_log10_volume(spec);
    });
}

rr_status rr_ridge_report(const rr_dataset* d, double reg, double theta, int theta_relative,
                          char** out) {
    return guarded([&] {
        require(d && out, "null argument");
        const auto& data = d->data;
        require(data.task == rashomon::Task::regression, "ridge needs a regression dataset");

        const auto fit = rashomon::ridge_fit(data, reg);
        const double risk_sum = rashomon::ridge_risk_sum(data, fit.w_hat, reg);
        const double theta_abs = theta_relative ? theta * risk_sum : theta;

        rashomon::RidgeSpec spec;
        spec.singular_values = rashomon::singular_values(data);
        spec.reg = reg;
        spec.theta = theta_abs;
        spec.dim = static_cast<int>(data.cols());

        json j{{"p", spec.dim},
               {"n", data.rows()},
               {"reg", reg},
               {"theta", theta_abs},
               {"theta_policy", theta_relative ? "relative" : "absolute"},
               {"singular_values", spec.singular_values},
               {"risk_sum", risk_sum},
               {"risk_mean", risk_sum / static_cast<double>(data.rows())},
               {"w_hat", std::vector<double>(fit.w_hat.data(), fit.w_hat.data() + fit.w_hat.size())}};
        if (theta_abs > 0.0) {
            j["volume"] = rashomon::ridge_volume(spec);
            j["log10_volume"] = rashomon::ridge_log10_volume(spec);
            double fro_sq = 0.0;
            for (double s : spec.singular_values) fro_sq += s * s;
            j["lower_bounds"] = {
                {"frobenius", rashomon::ridge_volume_lower_bound(
                                  spec, rashomon::RidgeBoundKind::frobenius, fro_sq, 0)},
            };
        } else {
            j["volume"] = 0.0;
            j["log10_volume"] = nullptr;
        }
        *out = dup_string(j.dump());
    });
}

rr_status rr_ridge_contains(const rr_dataset* d, double reg, double theta, const double* w,
                            int p, int* contains) {
    return guarded([&] {
        require(d && w && contains, "null argument");
        require(p == static_cast<int>(d->data.cols()), "dimension mismatch");
        const auto fit = rashomon::ridge_fit(d->data, reg);
        Eigen::VectorXd wv = Eigen::Map<const Eigen::VectorXd>(w, p);
        *contains = rashomon::ellipsoid_contains(wv, fit, theta) ? 1 : 0;
    });
}

rr_status rr_ridge_theta_from_direction(const rr_dataset* d, double reg,
                                        const double* w_interest, int p, double* theta) {
    return guarded([&] {
        require(d && w_interest && theta, "null argument");
        require(p == static_cast<int>(d->data.cols()), "dimension mismatch");
        const auto fit = rashomon::ridge_fit(d->data, reg);
        Eigen::VectorXd wv = Eigen::Map<const Eigen::VectorXd>(w_interest, p);
        *theta = rashomon::theta_from_direction(fit, wv);
    });
}

rr_status rr_ridge_volume_lower_bound(const double* singular_values, int p, double reg,
                                      double theta, rr_ridge_bound kind, double param,
                                      long long n, double* bound) {
    return guarded([&] {
        require(bound != nullptr, "null argument");
        const auto spec = make_spec(singular_values, p, reg, theta);
        rashomon::RidgeBoundKind k = rashomon::RidgeBoundKind::frobenius;
        if (kind == RR_RIDGE_BOUND_SECOND_DERIVATIVE)
            k = rashomon::RidgeBoundKind::second_derivative;
        else if (kind == RR_RIDGE_BOUND_UNIT_SPHERE)
            k = rashomon::RidgeBoundKind::unit_sphere;
        *bound = rashomon::ridge_volume_lower_bound(spec, k, param, n);
    });
}

/* ------------------------------------------------------------------ */

rr_status rr_svm1_bound(const rr_dataset* d, double reg_weight, double theta,
                        double clip_radius, char** out) {
    return guarded([&] {
        require(d && out, "null argument");
        const auto fit = rashomon::svm1_fit(d->data, reg_weight);
        const auto bound = rashomon::inscribed_cross_polytope(
            d->data, fit.w, theta, clip_radius > 0.0 ? clip_radius : 1e6);
        json j{{"center", std::vector<double>(fit.w.data(), fit.w.data() + fit.w.size())},
               {"objective", fit.objective},
               {"converged", fit.converged},
               {"sweeps", fit.sweeps},
               {"delta", bound.half_diagonal},
               {"volume_lower_bound", bound.volume_lower_bound},
               {"log10_volume", std::isfinite(bound.log10_volume)
                                    ? json(bound.log10_volume)
                                    : json()},
               {"clipped", bound.clipped},
               {"theta", theta},
               {"reg", reg_weight}};
        *out = dup_string(j.dump());
    });
}

/* ------------------------------------------------------------------ */

rr_status rr_bound_anchored_rhs(double gamma, double b, long long f1_size, double epsilon,
                                long long n, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::thm_anchored_rhs(gamma, b, f1_size, epsilon, n);
    });
}

rr_status rr_bound_approximating_set_rhs(double gamma, double b, double epsilon, long long n,
                                         double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::thm_approximating_set_rhs(gamma, b, epsilon, n);
    });
}

rr_status rr_bound_subclass_probability(long long f2_size, long long f1_size,
                                        long long rset_size, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::sampled_subclass_probability(f2_size, f1_size, rset_size);
    });
}

rr_status rr_bound_min_class_size(long long f2_size, double rset_ratio, double confidence,
                                  long long* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::min_reference_class_size(f2_size, rset_ratio, confidence);
    });
}

rr_status rr_bound_ratio_threshold(long long f1_size, double epsilon, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::lemma_ratio_threshold(f1_size, epsilon);
    });
}

rr_status rr_bound_membership_probability(long long n, double epsilon, double b, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::membership_probability(n, epsilon, b);
    });
}

rr_status rr_bound_pattern_limit(long long n, double theta, double* limit, double* entropy_lower,
                                 double* entropy_upper) {
    return guarded([&] {
        require(limit != nullptr, "null argument");
        *limit = rashomon::pattern_ratio_limit(n, theta);
        if (entropy_lower || entropy_upper) {
            const auto [lo, hi] = rashomon::pattern_entropy_bounds(n, theta);
            if (entropy_lower) *entropy_lower = lo;
            if (entropy_upper) *entropy_upper = hi;
        }
    });
}

rr_status rr_bound_lipschitz_rhs(double lipschitz, double rademacher, double b, long long n,
                                 double epsilon, double delta, double theta,
                                 rr_lipschitz_variant variant, double* rhs,
                                 double* companion_radius) {
    return guarded([&] {
        require(rhs != nullptr, "null argument");
        rashomon::LipschitzVariant v = rashomon::LipschitzVariant::existence_I;
        if (variant == RR_LIPSCHITZ_EXISTENCE_II) v = rashomon::LipschitzVariant::existence_II;
        if (variant == RR_LIPSCHITZ_MULTIPLE) v = rashomon::LipschitzVariant::multiple;
        if (variant == RR_LIPSCHITZ_REDUCED_COMPLEXITY)
            v = rashomon::LipschitzVariant::reduced_complexity;
        const auto res =
            rashomon::lipschitz_generalization_rhs(lipschitz, rademacher, b, n, epsilon, delta,
                                                   theta, v);
        *rhs = res.rhs;
        if (companion_radius && res.companion_radius) *companion_radius = *res.companion_radius;
    });
}

rr_status rr_bound_growth_count(double c, int t, double* out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        *out = rashomon::growth_lower_bound(c, t);
    });
}

rr_status rr_bound_packing_count(const double* points, size_t count, size_t dim,
                                 double two_delta, rr_metric metric, long long* out) {
    return guarded([&] {
        require(points && out, "null argument");
        std::vector<std::vector<double>> pts(count, std::vector<double>(dim));
        for (size_t i = 0; i < count; ++i)
            for (size_t j = 0; j < dim; ++j) pts[i][j] = points[i * dim + j];
        rashomon::PackingMetric m = rashomon::PackingMetric::l1;
        if (metric == RR_METRIC_L2) m = rashomon::PackingMetric::l2;
        if (metric == RR_METRIC_HAMMING) m = rashomon::PackingMetric::hamming;
        *out = rashomon::packing_count_lower_bound(pts, two_delta, m);
    });
}

/* ------------------------------------------------------------------ */

rr_status rr_build_tree_curve(const rr_dataset* d, int fold_count, int depth_min, int depth_max,
                              double theta, long long samples_per_depth, uint64_t seed,
                              rr_curve** out) {
    return guarded([&] {
        require(d && out, "null argument");
        const int folds = fold_count > 0 ? fold_count
                                         : rashomon::default_fold_count(d->data.rows());
        const auto plan = rashomon::make_folds(d->data, folds, seed);
        auto curve = rashomon::build_tree_curve(d->data, plan, depth_min, depth_max, theta,
                                                samples_per_depth, seed);
        *out = new rr_curve{std::move(curve)};
    });
}

rr_status rr_build_ridge_curve(const rr_dataset* d, int fold_count, int degree_min,
                               int degree_max, double reg, double theta_rel, int pca_k,
                               int pca_on_train_only, uint64_t seed, rr_curve** out) {
    return guarded([&] {
        require(d && out, "null argument");
        const int folds = fold_count > 0 ? fold_count
                                         : rashomon::default_fold_count(d->data.rows());
        const auto plan = rashomon::make_folds(d->data, folds, seed);
        auto curve = rashomon::build_ridge_curve(d->data, plan, degree_min, degree_max, reg,
                                                 theta_rel, pca_k, pca_on_train_only != 0);
        *out = new rr_curve{std::move(curve)};
    });
}

rr_status rr_curve_from_json(const char* text, rr_curve** out) {
    return guarded([&] {
        require(text && out, "null argument");
        *out = new rr_curve{rashomon::curve_from_json(json::parse(text))};
    });
}

void rr_curve_free(rr_curve* c) { delete c; }

rr_status rr_curve_to_json(const rr_curve* c, double lexicographic_tolerance,
                           double jump_threshold, char** out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = dup_string(
            rashomon::curve_to_json(c->curve, lexicographic_tolerance, jump_threshold).dump());
    });
}

rr_status rr_curve_to_csv(const rr_curve* c, char** out) {
    return guarded([&] {
        require(c && out, "null argument");
        *out = dup_string(rashomon::curve_to_csv(c->curve));
    });
}

rr_status rr_curve_elbow(const rr_curve* c, rr_elbow_rule rule, rr_combiner combiner,
                         double param, char** label) {
    return guarded([&] {
        require(c && label, "null argument");
        std::string result;
        switch (rule) {
            case RR_ELBOW_MAXIMIN: {
                rashomon::CombinerKind k = rashomon::CombinerKind::lexicographic;
                if (combiner == RR_COMBINER_WEIGHTED_SUM)
                    k = rashomon::CombinerKind::weighted_sum;
                else if (combiner == RR_COMBINER_PRODUCT)
                    k = rashomon::CombinerKind::product;
                result = rashomon::elbow_maximin(c->curve, k, param);
                break;
            }
            case RR_ELBOW_GEOMETRIC:
                result = rashomon::elbow_geometric(c->curve);
                break;
            case RR_ELBOW_RISK_JUMP:
                result = rashomon::elbow_risk_jump(c->curve, param);
                break;
            default:
                throw std::invalid_argument("unknown elbow rule");
        }
        *label = dup_string(result);
    });
}

} /* extern "C" */
