/*
 * rashomon: C API for Rashomon-set measurement.
 *
 * The library quantifies how many near-optimal models a dataset and
 * hypothesis space admit: sampled Rashomon ratios over decision-tree
 * spaces, closed-form Rashomon volumes for ridge regression, the
 * cross-polytope under-approximation for 1-norm SVMs, finite-class
 * generalization calculators, and Rashomon curves with elbow selection.
 *
 * All functions return rr_status; rr_last_error() describes the most
 * recent failure on the calling thread. Strings returned through char**
 * are heap-allocated JSON and must be released with rr_string_free().
 * Handles are opaque and must be released with their _free function.
 * Every sampling routine is deterministic in (inputs, seed).
 */

#ifndef RASHOMON_H
#define RASHOMON_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rr_status {
    RR_OK = 0,
    RR_ERROR_INVALID_ARGUMENT = 1,
    RR_ERROR_IO = 2,
    RR_ERROR_NUMERIC = 3,
    RR_ERROR_UNKNOWN = 4
} rr_status;

/* message for the last failing call on this thread; never NULL */
const char* rr_last_error(void);

void rr_string_free(char* s);

/* ------------------------------------------------------------------ */
/* datasets                                                            */
/* ------------------------------------------------------------------ */

typedef struct rr_dataset rr_dataset;

typedef enum rr_task { RR_TASK_CLASSIFICATION = 0, RR_TASK_REGRESSION = 1 } rr_task;

/* CSV with a header row; label column by name or 0-based index.
 * Rows with empty cells are dropped; features are min-max normalized to
 * [0,1]; classification labels map lexicographically to {-1,+1}. */
rr_status rr_dataset_load_csv(const char* path, const char* label_column, rr_task task,
                              rr_dataset** out);

/* row-major features (n x p); classification labels must be -1/+1 */
rr_status rr_dataset_create(const double* features, const double* labels, size_t n, size_t p,
                            rr_task task, rr_dataset** out);

/* bundled synthetic generators: "separable", "xor", "circles",
 * "noisy-margin", "wave" (regression) */
rr_status rr_dataset_synthetic(const char* name, size_t n, uint64_t seed, rr_dataset** out);

void rr_dataset_free(rr_dataset* d);

size_t rr_dataset_rows(const rr_dataset* d);
size_t rr_dataset_cols(const rr_dataset* d);

/* {"name", "n", "p", "task", "feature_kinds", "label_mapping"} */
rr_status rr_dataset_info_json(const rr_dataset* d, char** json);

rr_status rr_dataset_pca(const rr_dataset* d, int k, rr_dataset** out);
rr_status rr_dataset_polynomial(const rr_dataset* d, int degree, rr_dataset** out);

/* deterministic fold assignment (stratified for classification when every
 * class can fill each fold); `assignments` must hold rr_dataset_rows values */
rr_status rr_fold_assignments(const rr_dataset* d, int fold_count, uint64_t seed,
                              int* assignments);

/* 10 folds above 200 rows, 5 otherwise */
int rr_default_fold_count(size_t n);

/* ------------------------------------------------------------------ */
/* ratio estimation                                                    */
/* ------------------------------------------------------------------ */

/* ceil(ln(2/alpha) / (2 t^2)) */
rr_status rr_hoeffding_sample_size(double t, double alpha, long long* out);

typedef enum rr_estimator {
    RR_ESTIMATOR_REJECTION = 0,
    RR_ESTIMATOR_IMPORTANCE = 1
} rr_estimator;

typedef struct rr_ratio_options {
    int depth;                /* decision-tree depth */
    double theta;             /* Rashomon parameter */
    int anchored;             /* nonzero: threshold at gamma instead */
    double gamma;
    double reference_risk;    /* < 0: derive from min(best sample, greedy tree) */
    long long samples;        /* k */
    uint64_t seed;
    double alpha;             /* confidence parameter for the reported radius */
    rr_estimator estimator;
    size_t exhaustive_cap;    /* rejection: enumerate instead when the space
                                 fits (all-binary features); 0 disables */
} rr_ratio_options;

/* sensible defaults: depth 7, theta 0.05, k 10000, alpha 0.05, importance */
rr_ratio_options rr_ratio_options_default(void);

/* Estimate the Rashomon ratio of depth-D trees on a dataset.
 * JSON: {ratio_fraction, ratio_percent, log10_fraction, k, t, alpha,
 *        estimator, exhaustive, in_set_count, min_nonzero_fraction,
 *        threshold, reference_risk, theta, seed, best_tree, cart_risk} */
rr_status rr_estimate_tree_ratio(const rr_dataset* d, const rr_ratio_options* opt, char** json);

/* Exact pattern tally over the enumerated depth-D tree space (thresholds at
 * value midpoints). zeta: "sign" or "loss".
 * JSON: {numerator, denominator, ratio_fraction, ratio_percent, space_size,
 *        threshold, reference_risk} */
rr_status rr_pattern_ratio(const rr_dataset* d, int depth, double theta, const char* zeta,
                           size_t cap, char** json);

/* Average pairwise Hamming distance across sampled in-set tree predictions.
 * scope: "in-set" or "all".
 * JSON: {models, average_hamming, normalized, k, threshold, seed} */
rr_status rr_prediction_diversity(const rr_dataset* d, int depth, double theta,
                                  long long samples, uint64_t seed, const char* scope,
                                  char** json);

/* ------------------------------------------------------------------ */
/* ridge regression volumes                                            */
/* ------------------------------------------------------------------ */

/* Exact ellipsoid volume from explicit singular values. */
rr_status rr_ridge_volume(const double* singular_values, int p, double reg, double theta,
                          double* volume, double* log10_volume);

/* Fit + closed-form volume for a regression dataset. theta_relative != 0
 * means theta = theta_rel * (penalized training risk of the fit).
 * JSON: {p, n, reg, theta, theta_policy, singular_values, volume,
 *        log10_volume, risk_sum, risk_mean, w_hat, lower_bounds} */
rr_status rr_ridge_report(const rr_dataset* d, double reg, double theta, int theta_relative,
                          char** json);

/* 1 if w lies in the ridge Rashomon ellipsoid at the given theta */
rr_status rr_ridge_contains(const rr_dataset* d, double reg, double theta, const double* w,
                            int p, int* contains);

/* theta that puts w_interest on the ellipsoid boundary */
rr_status rr_ridge_theta_from_direction(const rr_dataset* d, double reg,
                                        const double* w_interest, int p, double* theta);

typedef enum rr_ridge_bound {
    RR_RIDGE_BOUND_FROBENIUS = 0,
    RR_RIDGE_BOUND_SECOND_DERIVATIVE = 1,
    RR_RIDGE_BOUND_UNIT_SPHERE = 2
} rr_ridge_bound;

rr_status rr_ridge_volume_lower_bound(const double* singular_values, int p, double reg,
                                      double theta, rr_ridge_bound kind, double param,
                                      long long n, double* bound);

/* ------------------------------------------------------------------ */
/* SVM-1 cross-polytope                                                */
/* ------------------------------------------------------------------ */

/* Fit the 1-norm SVM and inscribe the largest cross-polytope in its
 * Rashomon set. JSON: {center, objective, converged, delta,
 * volume_lower_bound, log10_volume, clipped, theta, reg} */
rr_status rr_svm1_bound(const rr_dataset* d, double reg_weight, double theta,
                        double clip_radius, char** json);

/* ------------------------------------------------------------------ */
/* finite-class bound calculators                                      */
/* ------------------------------------------------------------------ */

rr_status rr_bound_anchored_rhs(double gamma, double b, long long f1_size, double epsilon,
                                long long n, double* out);
rr_status rr_bound_approximating_set_rhs(double gamma, double b, double epsilon, long long n,
                                         double* out);
rr_status rr_bound_subclass_probability(long long f2_size, long long f1_size,
                                        long long rset_size, double* out);
rr_status rr_bound_min_class_size(long long f2_size, double rset_ratio, double confidence,
                                  long long* out);
rr_status rr_bound_ratio_threshold(long long f1_size, double epsilon, double* out);
rr_status rr_bound_membership_probability(long long n, double epsilon, double b, double* out);
rr_status rr_bound_pattern_limit(long long n, double theta, double* limit, double* entropy_lower,
                                 double* entropy_upper);

typedef enum rr_lipschitz_variant {
    RR_LIPSCHITZ_EXISTENCE_I = 0,
    RR_LIPSCHITZ_EXISTENCE_II = 1,
    RR_LIPSCHITZ_MULTIPLE = 2,
    RR_LIPSCHITZ_REDUCED_COMPLEXITY = 3
} rr_lipschitz_variant;

/* companion_radius receives theta/K for the existence_I variant, and is
 * left untouched otherwise; it may be NULL */
rr_status rr_bound_lipschitz_rhs(double lipschitz, double rademacher, double b, long long n,
                                 double epsilon, double delta, double theta,
                                 rr_lipschitz_variant variant, double* rhs,
                                 double* companion_radius);

rr_status rr_bound_growth_count(double c, int t, double* out);

typedef enum rr_metric { RR_METRIC_L1 = 0, RR_METRIC_L2 = 1, RR_METRIC_HAMMING = 2 } rr_metric;

/* points: row-major count x dim */
rr_status rr_bound_packing_count(const double* points, size_t count, size_t dim,
                                 double two_delta, rr_metric metric, long long* out);

/* ------------------------------------------------------------------ */
/* Rashomon curves and elbows                                          */
/* ------------------------------------------------------------------ */

typedef struct rr_curve rr_curve;

rr_status rr_build_tree_curve(const rr_dataset* d, int fold_count, int depth_min, int depth_max,
                              double theta, long long samples_per_depth, uint64_t seed,
                              rr_curve** out);

/* pca_k <= 0 skips the reduction; pca_on_train_only fits it per fold */
rr_status rr_build_ridge_curve(const rr_dataset* d, int fold_count, int degree_min,
                               int degree_max, double reg, double theta_rel, int pca_k,
                               int pca_on_train_only, uint64_t seed, rr_curve** out);

rr_status rr_curve_from_json(const char* json, rr_curve** out);
void rr_curve_free(rr_curve* c);

/* {theta_policy, theta, measure_kind, fold_count, seed, points: [{label,
 *  train_risk, test_risk, measure_fraction, measure_percent, measure_log10,
 *  floored, theta, k, in_set_total, seed}], elbows: {maximin, geometric,
 *  risk_jump}} */
rr_status rr_curve_to_json(const rr_curve* c, double lexicographic_tolerance,
                           double jump_threshold, char** json);
rr_status rr_curve_to_csv(const rr_curve* c, char** csv);

typedef enum rr_elbow_rule {
    RR_ELBOW_MAXIMIN = 0,
    RR_ELBOW_GEOMETRIC = 1,
    RR_ELBOW_RISK_JUMP = 2
} rr_elbow_rule;

typedef enum rr_combiner {
    RR_COMBINER_WEIGHTED_SUM = 0,
    RR_COMBINER_PRODUCT = 1,
    RR_COMBINER_LEXICOGRAPHIC = 2
} rr_combiner;

/* param: accuracy weight (weighted_sum), risk tolerance (lexicographic),
 * jump threshold (risk_jump); ignored otherwise. Returns the selected
 * space label. */
rr_status rr_curve_elbow(const rr_curve* c, rr_elbow_rule rule, rr_combiner combiner,
                         double param, char** label);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RASHOMON_H */
