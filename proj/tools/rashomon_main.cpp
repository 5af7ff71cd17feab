// Command-line front end. Everything goes through the C API in
// rashomon/rashomon.h; this translation unit never touches the C++ core.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "rashomon/rashomon.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
    std::string format = "json";  // json | csv | plain
    std::string path;             // empty = stdout
};

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format: json, csv or plain")
        ->check(CLI::IsMember({"json", "csv", "plain"}));
    cmd->add_option("--output,-o", out.path, "Write the result to a file instead of stdout");
}

void emit(const OutputOptions& out, const std::string& text) {
    if (out.path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream f(out.path);
    if (!f) throw std::runtime_error("cannot write output file: " + out.path);
    f << text << "\n";
}

[[noreturn]] void fail(const std::string& context) {
    std::cerr << "error: " << context << ": " << rr_last_error() << "\n";
    std::exit(kExitComputation);
}

void check(rr_status status, const std::string& context) {
    if (status != RR_OK) fail(context);
}

// keeps the flat key=value rendering stable for scripts
std::string to_plain(const json& j, const std::string& prefix = "") {
    std::string out;
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            out += to_plain(value, name);
        } else {
            out += name + " = " + value.dump() + "\n";
        }
    }
    return out;
}

void emit_json(const OutputOptions& out, const json& j) {
    if (out.format == "plain") {
        std::string text = to_plain(j);
        if (!text.empty() && text.back() == '\n') text.pop_back();
        emit(out, text);
    } else {
        emit(out, j.dump(2));
    }
}

struct DatasetArgs {
    std::string input;
    std::string label = "label";
    std::string task = "classification";
    std::string synth;
    std::size_t synth_n = 200;
};

void add_dataset_flags(CLI::App* cmd, DatasetArgs& args, bool fixed_task = false) {
    auto* input = cmd->add_option("--input,-i", args.input, "CSV file with a header row");
    cmd->add_option("--label", args.label, "Label column name or 0-based index")
        ->capture_default_str();
    if (!fixed_task)
        cmd->add_option("--task", args.task, "classification or regression")
            ->check(CLI::IsMember({"classification", "regression"}))
            ->capture_default_str();
    auto* synth = cmd->add_option("--synthetic", args.synth,
                                  "Bundled generator instead of a file: separable, xor, "
                                  "circles, noisy-margin, wave");
    cmd->add_option("--synthetic-n", args.synth_n, "Rows for --synthetic")
        ->capture_default_str();
    input->excludes(synth);
}

rr_dataset* open_dataset(const DatasetArgs& args, uint64_t seed) {
    rr_dataset* d = nullptr;
    if (!args.synth.empty()) {
        check(rr_dataset_synthetic(args.synth.c_str(), args.synth_n, seed, &d), "synthetic");
        return d;
    }
    if (args.input.empty()) {
        std::cerr << "error: provide --input or --synthetic\n";
        std::exit(kExitUsage);
    }
    const rr_task task =
        args.task == "regression" ? RR_TASK_REGRESSION : RR_TASK_CLASSIFICATION;
    check(rr_dataset_load_csv(args.input.c_str(), args.label.c_str(), task, &d), "load");
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rashomon set measurement toolkit"};
    app.require_subcommand(1);

    // ---------------------------------------------------------------- ratio
    DatasetArgs ratio_data;
    rr_ratio_options ropt = rr_ratio_options_default();
    double ratio_gamma = -1.0;
    OutputOptions ratio_out;
    auto* ratio = app.add_subcommand("ratio", "Estimate the Rashomon ratio of a tree space");
    add_dataset_flags(ratio, ratio_data, true);
    ratio->add_option("--depth", ropt.depth, "Tree depth")->capture_default_str();
    ratio->add_option("--theta", ropt.theta, "Rashomon parameter")->capture_default_str();
    ratio->add_option("--gamma", ratio_gamma,
                      "Anchored threshold (absolute risk) instead of --theta");
    ratio->add_option("--reference-risk", ropt.reference_risk,
                      "Override the reference risk (default: best of sampled and greedy)");
    ratio->add_option("--samples,-k", ropt.samples, "Hypotheses to draw")->capture_default_str();
    ratio->add_option("--seed", ropt.seed, "RNG seed")->capture_default_str();
    ratio->add_option("--alpha", ropt.alpha, "Confidence parameter")->capture_default_str();
    std::string estimator = "importance";
    ratio->add_option("--estimator", estimator, "importance or rejection")
        ->check(CLI::IsMember({"importance", "rejection"}))
        ->capture_default_str();
    ratio->add_option("--exhaustive-cap", ropt.exhaustive_cap,
                      "Enumerate instead of sampling when the space fits (0 disables)")
        ->capture_default_str();
    add_output_flags(ratio, ratio_out);
    ratio->callback([&] {
        ropt.estimator =
            estimator == "rejection" ? RR_ESTIMATOR_REJECTION : RR_ESTIMATOR_IMPORTANCE;
        if (ratio_gamma >= 0.0) {
            ropt.anchored = 1;
            ropt.gamma = ratio_gamma;
        }
        rr_dataset* d = open_dataset(ratio_data, ropt.seed);
        char* out = nullptr;
        check(rr_estimate_tree_ratio(d, &ropt, &out), "ratio");
        emit_json(ratio_out, json::parse(out));
        rr_string_free(out);
        rr_dataset_free(d);
    });

    // ---------------------------------------------------------------- curve
    DatasetArgs curve_data;
    OutputOptions curve_out;
    int curve_folds = 0;
    int depth_min = 1, depth_max = 7, degree_min = 1, degree_max = 8;
    double curve_theta = 0.05, curve_theta_rel = 0.1, curve_reg = 0.01;
    long long curve_samples = 10000;
    uint64_t curve_seed = 0;
    int curve_pca = 3;
    bool curve_pca_train = false;
    double curve_tol = 0.01, curve_jump = 0.05;
    auto* curve = app.add_subcommand("curve", "Build a Rashomon curve over a hierarchy");
    add_dataset_flags(curve, curve_data);
    curve->add_option("--folds", curve_folds, "Fold count (0 = size rule: 10 over 200 rows, else 5)")
        ->capture_default_str();
    curve->add_option("--min-depth", depth_min, "First tree depth")->capture_default_str();
    curve->add_option("--max-depth", depth_max, "Last tree depth")->capture_default_str();
    curve->add_option("--min-degree", degree_min, "First polynomial degree")
        ->capture_default_str();
    curve->add_option("--max-degree", degree_max, "Last polynomial degree")
        ->capture_default_str();
    curve->add_option("--theta", curve_theta, "Absolute Rashomon parameter (classification)")
        ->capture_default_str();
    curve->add_option("--theta-rel", curve_theta_rel,
                      "Relative Rashomon parameter (regression: theta = r * train risk)")
        ->capture_default_str();
    curve->add_option("--reg", curve_reg, "Ridge regularization constant")->capture_default_str();
    curve->add_option("--samples,-k", curve_samples, "Tree samples per depth and fold")
        ->capture_default_str();
    curve->add_option("--pca", curve_pca, "Leading components for the regression hierarchy "
                                          "(0 = off)")
        ->capture_default_str();
    curve->add_flag("--pca-train-only", curve_pca_train,
                    "Fit the PCA projection on training folds only");
    curve->add_option("--seed", curve_seed, "RNG seed")->capture_default_str();
    curve->add_option("--tolerance", curve_tol, "Lexicographic elbow risk tolerance")
        ->capture_default_str();
    curve->add_option("--jump-threshold", curve_jump, "Risk-jump elbow threshold")
        ->capture_default_str();
    add_output_flags(curve, curve_out);
    curve->callback([&] {
        rr_dataset* d = open_dataset(curve_data, curve_seed);
        const bool regression = curve_data.task == "regression" || curve_data.synth == "wave";
        rr_curve* c = nullptr;
        if (regression) {
            check(rr_build_ridge_curve(d, curve_folds, degree_min, degree_max, curve_reg,
                                       curve_theta_rel, curve_pca, curve_pca_train ? 1 : 0,
                                       curve_seed, &c),
                  "curve");
        } else {
            check(rr_build_tree_curve(d, curve_folds, depth_min, depth_max, curve_theta,
                                      curve_samples, curve_seed, &c),
                  "curve");
        }
        char* out = nullptr;
        if (curve_out.format == "csv") {
            check(rr_curve_to_csv(c, &out), "curve csv");
            std::string text = out;
            if (!text.empty() && text.back() == '\n') text.pop_back();
            emit(curve_out, text);
        } else {
            check(rr_curve_to_json(c, curve_tol, curve_jump, &out), "curve json");
            emit_json(curve_out, json::parse(out));
        }
        rr_string_free(out);
        rr_curve_free(c);
        rr_dataset_free(d);
    });

    // ---------------------------------------------------------------- elbow
    std::string elbow_curve_path, elbow_rule = "maximin", elbow_combiner = "lexicographic";
    double elbow_param = -1.0;
    OutputOptions elbow_out;
    auto* elbow = app.add_subcommand("elbow", "Select an elbow from a saved curve");
    elbow->add_option("--curve", elbow_curve_path, "Curve JSON produced by the curve subcommand")
        ->required();
    elbow->add_option("--rule", elbow_rule, "maximin, geometric or risk-jump")
        ->check(CLI::IsMember({"maximin", "geometric", "risk-jump"}))
        ->capture_default_str();
    elbow->add_option("--combiner", elbow_combiner,
                      "maximin combiner: lexicographic, product or weighted-sum")
        ->check(CLI::IsMember({"lexicographic", "product", "weighted-sum"}))
        ->capture_default_str();
    elbow->add_option("--param", elbow_param,
                      "Rule parameter: risk tolerance, accuracy weight or jump threshold");
    add_output_flags(elbow, elbow_out);
    elbow->callback([&] {
        std::ifstream in(elbow_curve_path);
        if (!in) {
            std::cerr << "error: cannot read " << elbow_curve_path << "\n";
            std::exit(kExitComputation);
        }
        const std::string text((std::istreambuf_iterator<char>(in)),
                               std::istreambuf_iterator<char>());
        rr_curve* c = nullptr;
        check(rr_curve_from_json(text.c_str(), &c), "parse curve");

        rr_elbow_rule rule = RR_ELBOW_MAXIMIN;
        double param = elbow_param;
        if (elbow_rule == "geometric") rule = RR_ELBOW_GEOMETRIC;
        if (elbow_rule == "risk-jump") {
            rule = RR_ELBOW_RISK_JUMP;
            if (param < 0.0) param = 0.05;
        } else if (param < 0.0) {
            param = elbow_combiner == "weighted-sum" ? 0.5 : 0.01;
        }
        rr_combiner comb = RR_COMBINER_LEXICOGRAPHIC;
        if (elbow_combiner == "product") comb = RR_COMBINER_PRODUCT;
        if (elbow_combiner == "weighted-sum") comb = RR_COMBINER_WEIGHTED_SUM;

        char* label = nullptr;
        check(rr_curve_elbow(c, rule, comb, param, &label), "elbow");
        emit_json(elbow_out, json{{"rule", elbow_rule}, {"elbow", label}});
        rr_string_free(label);
        rr_curve_free(c);
    });

    // ---------------------------------------------------------------- ridge-volume
    DatasetArgs ridge_data;
    ridge_data.task = "regression";
    OutputOptions ridge_out;
    double ridge_reg = 0.0, ridge_theta = -1.0, ridge_theta_rel = -1.0;
    int ridge_pca = 0, ridge_degree = 0;
    auto* ridge = app.add_subcommand("ridge-volume",
                                     "Closed-form Rashomon volume for ridge regression");
    add_dataset_flags(ridge, ridge_data, true);
    ridge->add_option("--reg", ridge_reg, "Regularization constant C")->capture_default_str();
    auto* abs_opt = ridge->add_option("--theta", ridge_theta, "Absolute Rashomon parameter");
    auto* rel_opt = ridge->add_option("--theta-rel", ridge_theta_rel,
                                      "Relative parameter: theta = r * train risk");
    abs_opt->excludes(rel_opt);
    ridge->add_option("--pca", ridge_pca, "Project onto the leading components first (0 = off)")
        ->capture_default_str();
    ridge->add_option("--degree", ridge_degree,
                      "Polynomial feature expansion before fitting (0 = off)")
        ->capture_default_str();
    add_output_flags(ridge, ridge_out);
    ridge->callback([&] {
        if (ridge_theta < 0.0 && ridge_theta_rel < 0.0) {
            std::cerr << "error: ridge-volume needs --theta or --theta-rel\n";
            std::exit(kExitUsage);
        }
        rr_dataset* d = open_dataset(ridge_data, 0);
        if (ridge_pca > 0) {
            rr_dataset* reduced = nullptr;
            check(rr_dataset_pca(d, ridge_pca, &reduced), "pca");
            rr_dataset_free(d);
            d = reduced;
        }
        if (ridge_degree > 0) {
            rr_dataset* expanded = nullptr;
            check(rr_dataset_polynomial(d, ridge_degree, &expanded), "polynomial");
            rr_dataset_free(d);
            d = expanded;
        }
        const bool relative = ridge_theta_rel >= 0.0;
        char* out = nullptr;
        check(rr_ridge_report(d, ridge_reg, relative ? ridge_theta_rel : ridge_theta,
                              relative ? 1 : 0, &out),
              "ridge");
        emit_json(ridge_out, json::parse(out));
        rr_string_free(out);
        rr_dataset_free(d);
    });

    // ---------------------------------------------------------------- svm1-bound
    DatasetArgs svm_data;
    OutputOptions svm_out;
    double svm_theta = 0.1, svm_reg = 1.0, svm_clip = 1e6;
    auto* svm = app.add_subcommand("svm1-bound",
                                   "Cross-polytope volume lower bound for the 1-norm SVM");
    add_dataset_flags(svm, svm_data, true);
    svm->add_option("--theta", svm_theta, "Rashomon parameter")->capture_default_str();
    svm->add_option("--reg", svm_reg, "L1 regularization weight")->capture_default_str();
    svm->add_option("--clip-radius", svm_clip, "Cap for flat directions")->capture_default_str();
    add_output_flags(svm, svm_out);
    svm->callback([&] {
        rr_dataset* d = open_dataset(svm_data, 0);
        char* out = nullptr;
        check(rr_svm1_bound(d, svm_reg, svm_theta, svm_clip, &out), "svm1");
        emit_json(svm_out, json::parse(out));
        rr_string_free(out);
        rr_dataset_free(d);
    });

    // ---------------------------------------------------------------- sample-size
    double ss_t = 0.0, ss_alpha = 0.05;
    OutputOptions ss_out;
    auto* ss = app.add_subcommand("sample-size",
                                  "Hypothesis draws needed for a target confidence interval");
    ss->add_option("--t", ss_t, "Interval half width")->required();
    ss->add_option("--alpha", ss_alpha, "Confidence parameter")->capture_default_str();
    add_output_flags(ss, ss_out);
    ss->callback([&] {
        long long k = 0;
        check(rr_hoeffding_sample_size(ss_t, ss_alpha, &k), "sample-size");
        if (ss_out.format == "plain")
            emit(ss_out, std::to_string(k));
        else
            emit_json(ss_out, json{{"k", k}, {"t", ss_t}, {"alpha", ss_alpha}});
    });

    // ---------------------------------------------------------------- pattern-ratio
    DatasetArgs pat_data;
    OutputOptions pat_out;
    int pat_depth = 1;
    double pat_theta = 0.05;
    std::string pat_zeta = "sign";
    std::size_t pat_cap = 100000;
    auto* pat = app.add_subcommand("pattern-ratio",
                                   "Exact pattern tally over an enumerated tree space");
    add_dataset_flags(pat, pat_data, true);
    pat->add_option("--depth", pat_depth, "Tree depth")->capture_default_str();
    pat->add_option("--theta", pat_theta, "Rashomon parameter")->capture_default_str();
    pat->add_option("--zeta", pat_zeta, "Pattern function: sign or loss")
        ->check(CLI::IsMember({"sign", "loss"}))
        ->capture_default_str();
    pat->add_option("--cap", pat_cap, "Enumeration size cap")->capture_default_str();
    add_output_flags(pat, pat_out);
    pat->callback([&] {
        rr_dataset* d = open_dataset(pat_data, 0);
        char* out = nullptr;
        check(rr_pattern_ratio(d, pat_depth, pat_theta, pat_zeta.c_str(), pat_cap, &out),
              "pattern-ratio");
        emit_json(pat_out, json::parse(out));
        rr_string_free(out);
        rr_dataset_free(d);
    });

    // ---------------------------------------------------------------- diversity
    DatasetArgs div_data;
    OutputOptions div_out;
    int div_depth = 3;
    double div_theta = 0.05;
    long long div_samples = 1000;
    uint64_t div_seed = 0;
    std::string div_scope = "in-set";
    auto* div = app.add_subcommand("diversity",
                                   "Average Hamming distance across sampled tree predictions");
    add_dataset_flags(div, div_data, true);
    div->add_option("--depth", div_depth, "Tree depth")->capture_default_str();
    div->add_option("--theta", div_theta, "Rashomon parameter")->capture_default_str();
    div->add_option("--samples,-k", div_samples, "Trees to sample")->capture_default_str();
    div->add_option("--seed", div_seed, "RNG seed")->capture_default_str();
    div->add_option("--scope", div_scope, "in-set or all")
        ->check(CLI::IsMember({"in-set", "all"}))
        ->capture_default_str();
    add_output_flags(div, div_out);
    div->callback([&] {
        rr_dataset* d = open_dataset(div_data, div_seed);
        char* out = nullptr;
        check(rr_prediction_diversity(d, div_depth, div_theta, div_samples, div_seed,
                                      div_scope.c_str(), &out),
              "diversity");
        emit_json(div_out, json::parse(out));
        rr_string_free(out);
        rr_dataset_free(d);
    });

    // ---------------------------------------------------------------- bounds
    auto* bounds = app.add_subcommand("bounds", "Finite-class bound calculators");
    bounds->require_subcommand(1);

    struct BoundCtx {
        double gamma = 0.0, b = 1.0, epsilon = 0.05, delta = 0.0, theta = 0.0;
        double rademacher = 0.0, lipschitz = 0.0, c = 2.0, two_delta = 0.0, ratio = 0.0;
        double confidence = 0.99;
        long long f1 = 1, f2 = 1, rset = 0, n = 100;
        int t = 1;
        std::string variant = "existence-i", metric = "l2", points_path;
        OutputOptions out;
    };
    auto ctx = std::make_shared<BoundCtx>();

    auto* anchored = bounds->add_subcommand("anchored-rhs",
                                            "Anchored finite-class bound right-hand side");
    anchored->add_option("--gamma", ctx->gamma)->capture_default_str();
    anchored->add_option("--b", ctx->b)->capture_default_str();
    anchored->add_option("--f1", ctx->f1, "Reference class size")->required();
    anchored->add_option("--epsilon", ctx->epsilon)->capture_default_str();
    anchored->add_option("--n", ctx->n)->required();
    add_output_flags(anchored, ctx->out);
    anchored->callback([ctx] {
        double v = 0.0;
        check(rr_bound_anchored_rhs(ctx->gamma, ctx->b, ctx->f1, ctx->epsilon, ctx->n, &v),
              "anchored-rhs");
        emit_json(ctx->out, json{{"value", v}});
    });

    auto* approx = bounds->add_subcommand("approximating-rhs",
                                          "Approximating-set bound right-hand side");
    approx->add_option("--gamma", ctx->gamma)->capture_default_str();
    approx->add_option("--b", ctx->b)->capture_default_str();
    approx->add_option("--epsilon", ctx->epsilon)->capture_default_str();
    approx->add_option("--n", ctx->n)->required();
    add_output_flags(approx, ctx->out);
    approx->callback([ctx] {
        double v = 0.0;
        check(rr_bound_approximating_set_rhs(ctx->gamma, ctx->b, ctx->epsilon, ctx->n, &v),
              "approximating-rhs");
        emit_json(ctx->out, json{{"value", v}});
    });

    auto* subp = bounds->add_subcommand("subclass-probability",
                                        "Chance a sampled reference class hits the set");
    subp->add_option("--f2", ctx->f2)->required();
    subp->add_option("--f1", ctx->f1)->required();
    subp->add_option("--rset", ctx->rset)->required();
    add_output_flags(subp, ctx->out);
    subp->callback([ctx] {
        double v = 0.0;
        check(rr_bound_subclass_probability(ctx->f2, ctx->f1, ctx->rset, &v),
              "subclass-probability");
        emit_json(ctx->out, json{{"value", v}});
    });

    auto* mcs = bounds->add_subcommand("min-class-size",
                                       "Smallest reference class for a target confidence");
    mcs->add_option("--f2", ctx->f2)->required();
    mcs->add_option("--ratio", ctx->ratio, "Rashomon ratio of the large space")->required();
    mcs->add_option("--confidence", ctx->confidence)->capture_default_str();
    add_output_flags(mcs, ctx->out);
    mcs->callback([ctx] {
        long long v = 0;
        check(rr_bound_min_class_size(ctx->f2, ctx->ratio, ctx->confidence, &v),
              "min-class-size");
        if (ctx->out.format == "plain")
            emit(ctx->out, std::to_string(v));
        else
            emit_json(ctx->out, json{{"min_class_size", v}});
    });

    auto* thr = bounds->add_subcommand("ratio-threshold",
                                       "Ratio needed for one in-set draw at confidence 1-eps");
    thr->add_option("--f1", ctx->f1)->required();
    thr->add_option("--epsilon", ctx->epsilon)->capture_default_str();
    add_output_flags(thr, ctx->out);
    thr->callback([ctx] {
        double v = 0.0;
        check(rr_bound_ratio_threshold(ctx->f1, ctx->epsilon, &v), "ratio-threshold");
        emit_json(ctx->out, json{{"value", v}});
    });

    auto* memb = bounds->add_subcommand("membership-probability",
                                        "Empirical-to-true anchored membership probability");
    memb->add_option("--n", ctx->n)->required();
    memb->add_option("--epsilon", ctx->epsilon)->capture_default_str();
    memb->add_option("--b", ctx->b)->capture_default_str();
    add_output_flags(memb, ctx->out);
    memb->callback([ctx] {
        double v = 0.0;
        check(rr_bound_membership_probability(ctx->n, ctx->epsilon, ctx->b, &v),
              "membership-probability");
        emit_json(ctx->out, json{{"value", v}});
    });

    auto* plim = bounds->add_subcommand("pattern-limit",
                                        "Large-space pattern ratio limit and entropy bounds");
    plim->add_option("--n", ctx->n)->required();
    plim->add_option("--theta", ctx->theta)->required();
    add_output_flags(plim, ctx->out);
    plim->callback([ctx] {
        double limit = 0.0, lo = 0.0, hi = 0.0;
        const bool in_range = ctx->theta > 0.0 && ctx->theta <= 0.5;
        check(rr_bound_pattern_limit(ctx->n, ctx->theta, &limit,
                                     in_range ? &lo : nullptr, in_range ? &hi : nullptr),
              "pattern-limit");
        json j{{"limit", limit}};
        if (in_range) j["entropy_bounds"] = {{"lower", lo}, {"upper", hi}};
        emit_json(ctx->out, j);
    });

    auto* lip = bounds->add_subcommand("lipschitz-rhs",
                                       "Smoothness-based generalization right-hand side");
    lip->add_option("--variant", ctx->variant,
                    "existence-i, existence-ii, multiple or reduced-complexity")
        ->check(CLI::IsMember({"existence-i", "existence-ii", "multiple",
                               "reduced-complexity"}))
        ->capture_default_str();
    lip->add_option("--lipschitz", ctx->lipschitz, "Lipschitz constant K")->required();
    lip->add_option("--rademacher", ctx->rademacher, "Rademacher complexity of the simple class")
        ->required();
    lip->add_option("--b", ctx->b)->capture_default_str();
    lip->add_option("--n", ctx->n)->required();
    lip->add_option("--epsilon", ctx->epsilon)->capture_default_str();
    lip->add_option("--delta", ctx->delta, "Approximation radius")->capture_default_str();
    lip->add_option("--theta", ctx->theta)->capture_default_str();
    add_output_flags(lip, ctx->out);
    lip->callback([ctx] {
        rr_lipschitz_variant v = RR_LIPSCHITZ_EXISTENCE_I;
        if (ctx->variant == "existence-ii") v = RR_LIPSCHITZ_EXISTENCE_II;
        if (ctx->variant == "multiple") v = RR_LIPSCHITZ_MULTIPLE;
        if (ctx->variant == "reduced-complexity") v = RR_LIPSCHITZ_REDUCED_COMPLEXITY;
        double rhs = 0.0, radius = -1.0;
        check(rr_bound_lipschitz_rhs(ctx->lipschitz, ctx->rademacher, ctx->b, ctx->n,
                                     ctx->epsilon, ctx->delta, ctx->theta, v, &rhs, &radius),
              "lipschitz-rhs");
        json j{{"value", rhs}};
        if (v == RR_LIPSCHITZ_EXISTENCE_I && radius >= 0.0) j["companion_radius"] = radius;
        emit_json(ctx->out, j);
    });

    auto* growth = bounds->add_subcommand("growth-count",
                                          "Implied Rashomon set size under hierarchy growth");
    growth->add_option("--c", ctx->c, "Growth constant (> 1)")->required();
    growth->add_option("--t", ctx->t, "Hierarchy length")->required();
    add_output_flags(growth, ctx->out);
    growth->callback([ctx] {
        double v = 0.0;
        check(rr_bound_growth_count(ctx->c, ctx->t, &v), "growth-count");
        emit_json(ctx->out, json{{"value", v}});
    });

    auto* pack = bounds->add_subcommand("packing-count",
                                        "Greedy packing lower bound over a point list");
    pack->add_option("--points", ctx->points_path,
                     "JSON file holding an array of equal-length numeric arrays")
        ->required();
    pack->add_option("--two-delta", ctx->two_delta, "Required separation")->required();
    pack->add_option("--metric", ctx->metric, "l1, l2 or hamming")
        ->check(CLI::IsMember({"l1", "l2", "hamming"}))
        ->capture_default_str();
    add_output_flags(pack, ctx->out);
    pack->callback([ctx] {
        std::ifstream in(ctx->points_path);
        if (!in) {
            std::cerr << "error: cannot read " << ctx->points_path << "\n";
            std::exit(kExitComputation);
        }
        json parsed;
        try {
            in >> parsed;
        } catch (const std::exception& e) {
            std::cerr << "error: bad points file: " << e.what() << "\n";
            std::exit(kExitComputation);
        }
        std::vector<double> flat;
        size_t dim = 0;
        for (const auto& row : parsed) {
            if (dim == 0) dim = row.size();
            if (row.size() != dim || dim == 0) {
                std::cerr << "error: points must be non-empty arrays of one length\n";
                std::exit(kExitComputation);
            }
            for (const auto& v : row) flat.push_back(v.get<double>());
        }
        rr_metric m = RR_METRIC_L2;
        if (ctx->metric == "l1") m = RR_METRIC_L1;
        if (ctx->metric == "hamming") m = RR_METRIC_HAMMING;
        long long count = 0;
        check(rr_bound_packing_count(flat.data(), parsed.size(), dim, ctx->two_delta, m,
                                     &count),
              "packing-count");
        emit_json(ctx->out, json{{"count", count}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitUsage;
    }
    return kExitOk;
}
