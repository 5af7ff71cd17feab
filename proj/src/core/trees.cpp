#include "core/trees.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <stdexcept>

namespace rashomon {

namespace {

void check_depth(int depth) {
    if (depth < 1 || depth > 20) throw std::invalid_argument("tree depth must be in [1, 20]");
}

int majority(long long pos, long long neg) { return pos >= neg ? 1 : -1; }  // ties toward +1

}  // namespace

std::vector<int> predictions(const DecisionTree& t, const Dataset& d) {
    const auto n = static_cast<Eigen::Index>(d.rows());
    std::vector<int> out(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = t.predict(d.features, i);
    return out;
}

double empirical_risk(const DecisionTree& t, const Dataset& d) {
    const auto n = static_cast<Eigen::Index>(d.rows());
    long long wrong = 0;
    for (Eigen::Index i = 0; i < n; ++i)
        if (t.predict(d.features, i) != static_cast<int>(d.labels[i])) ++wrong;
    return static_cast<double>(wrong) / static_cast<double>(n);
}

namespace {

struct GiniSplit {
    bool found = false;
    int feature = 0;
    double threshold = 0.5;
};

double gini(long long pos, long long neg) {
    const double total = static_cast<double>(pos + neg);
    if (total == 0.0) return 0.0;
    const double fp = static_cast<double>(pos) / total;
    const double fn = static_cast<double>(neg) / total;
    return 1.0 - fp * fp - fn * fn;
}

// Best (feature, midpoint threshold) by weighted Gini impurity; ties go to
// the lowest feature index then the lowest threshold.
GiniSplit best_gini_split(const Dataset& d, const std::vector<int>& rows) {
    GiniSplit best;
    double best_impurity = std::numeric_limits<double>::infinity();
    const auto total = static_cast<double>(rows.size());

    for (std::size_t f = 0; f < d.cols(); ++f) {
        std::vector<std::pair<double, int>> vals;  // (value, label)
        vals.reserve(rows.size());
        for (int r : rows)
            vals.emplace_back(d.features(r, static_cast<Eigen::Index>(f)),
                              static_cast<int>(d.labels[r]));
        std::sort(vals.begin(), vals.end());

        long long pos_left = 0, neg_left = 0, pos_right = 0, neg_right = 0;
        for (const auto& [v, y] : vals) (y > 0 ? pos_right : neg_right)++;

        for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
            (vals[i].second > 0 ? pos_left : neg_left)++;
            (vals[i].second > 0 ? pos_right : neg_right)--;
            if (vals[i].first == vals[i + 1].first) continue;  // not a boundary
            const double threshold = vals[i].first + 0.5 * (vals[i + 1].first - vals[i].first);
            const double nl = static_cast<double>(i + 1);
            const double impurity = (nl * gini(pos_left, neg_left) +
                                     (total - nl) * gini(pos_right, neg_right)) / total;
            if (impurity < best_impurity - 1e-15 ||
                (std::abs(impurity - best_impurity) <= 1e-15 &&
                 (!best.found || static_cast<int>(f) < best.feature ||
                  (static_cast<int>(f) == best.feature && threshold < best.threshold)))) {
                best_impurity = impurity;
                best.found = true;
                best.feature = static_cast<int>(f);
                best.threshold = threshold;
            }
        }
    }
    return best;
}

// fills the whole subtree under `node` with placeholder splits and a
// constant leaf label
void fill_constant(DecisionTree& t, int node, int label) {
    const int internal = static_cast<int>(t.splits.size());
    if (node >= internal) {
        t.leaves[static_cast<std::size_t>(node - internal)] = label;
        return;
    }
    t.splits[static_cast<std::size_t>(node)] = SplitNode{0, 0.5};
    fill_constant(t, 2 * node + 1, label);
    fill_constant(t, 2 * node + 2, label);
}

void cart_grow(const Dataset& d, const std::vector<int>& rows, DecisionTree& t, int node) {
    const int internal = static_cast<int>(t.splits.size());
    long long pos = 0, neg = 0;
    for (int r : rows) (d.labels[r] > 0 ? pos : neg)++;
    const int label = majority(pos, neg);

    if (node >= internal) {
        t.leaves[static_cast<std::size_t>(node - internal)] = label;
        return;
    }

    GiniSplit split;
    const bool pure = (pos == 0 || neg == 0);
    if (!pure) split = best_gini_split(d, rows);

    if (pure || !split.found) {
        fill_constant(t, node, label);
        return;
    }

    t.splits[static_cast<std::size_t>(node)] = SplitNode{split.feature, split.threshold};
    std::vector<int> left, right;
    for (int r : rows)
        (d.features(r, split.feature) <= split.threshold ? left : right).push_back(r);
    cart_grow(d, left, t, 2 * node + 1);
    cart_grow(d, right, t, 2 * node + 2);
}

}  // namespace

DecisionTree cart_fit(const Dataset& d, int depth) {
    check_depth(depth);
    if (d.task != Task::classification)
        throw std::invalid_argument("cart_fit requires a classification dataset");
    DecisionTree t;
    t.depth = depth;
    t.splits.assign((1u << depth) - 1, SplitNode{0, 0.5});
    t.leaves.assign(1u << depth, 1);
    std::vector<int> rows(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) rows[i] = static_cast<int>(i);
    cart_grow(d, rows, t, 0);
    return t;
}

namespace {

DecisionTree random_structure(const Dataset& d, int depth, RngStream& rng) {
    DecisionTree t;
    t.depth = depth;
    const std::size_t internal = (1u << depth) - 1;
    t.splits.resize(internal);
    t.leaves.assign(1u << depth, 1);
    for (std::size_t i = 0; i < internal; ++i) {
        const int f = static_cast<int>(rng.uniform_index(d.cols()));
        const double thr =
            d.feature_kinds[static_cast<std::size_t>(f)] == FeatureKind::binary ? 0.5
                                                                                : rng.real01_open();
        t.splits[i] = SplitNode{f, thr};
    }
    return t;
}

// Counts of (pos, neg) training rows reaching every node of the tree.
void route_counts(const DecisionTree& t, const Dataset& d,
                  std::vector<long long>& pos, std::vector<long long>& neg) {
    const std::size_t internal = t.splits.size();
    const std::size_t total_nodes = internal + t.leaves.size();
    pos.assign(total_nodes, 0);
    neg.assign(total_nodes, 0);
    const auto n = static_cast<Eigen::Index>(d.rows());
    for (Eigen::Index i = 0; i < n; ++i) {
        std::size_t node = 0;
        const bool is_pos = d.labels[i] > 0;
        while (true) {
            (is_pos ? pos : neg)[node]++;
            if (node >= internal) break;
            const SplitNode& s = t.splits[node];
            node = 2 * node + (d.features(i, s.feature) <= s.threshold ? 1 : 2);
        }
    }
}

}  // namespace

namespace {

// risk of a labeled tree straight from the per-leaf class counts
double risk_from_counts(const DecisionTree& t, const std::vector<long long>& pos,
                        const std::vector<long long>& neg, std::size_t n) {
    const std::size_t internal = t.splits.size();
    long long wrong = 0;
    for (std::size_t leaf = 0; leaf < t.leaves.size(); ++leaf)
        wrong += t.leaves[leaf] > 0 ? neg[internal + leaf] : pos[internal + leaf];
    return static_cast<double>(wrong) / static_cast<double>(n);
}

}  // namespace

SampledHypothesis sample_proposal_tree(const Dataset& d, int depth, RngStream& rng) {
    check_depth(depth);
    if (d.task != Task::classification)
        throw std::invalid_argument("proposal sampling requires a classification dataset");
    SampledHypothesis h;
    h.tree = random_structure(d, depth, rng);

    thread_local std::vector<long long> pos, neg;
    route_counts(h.tree, d, pos, neg);
    const std::size_t internal = h.tree.splits.size();
    for (std::size_t leaf = 0; leaf < h.tree.leaves.size(); ++leaf) {
        std::size_t node = internal + leaf;
        // nearest ancestor (possibly the leaf itself) that any row passes through
        while (node > 0 && pos[node] + neg[node] == 0) node = (node - 1) / 2;
        h.tree.leaves[leaf] = majority(pos[node], neg[node]);
    }
    h.weight = proposal_importance_weight(depth);
    h.empirical_risk = risk_from_counts(h.tree, pos, neg, d.rows());
    return h;
}

SampledHypothesis sample_target_tree(const Dataset& d, int depth, RngStream& rng) {
    check_depth(depth);
    if (d.task != Task::classification)
        throw std::invalid_argument("target sampling requires a classification dataset");
    SampledHypothesis h;
    h.tree = random_structure(d, depth, rng);
    for (auto& leaf : h.tree.leaves) leaf = (rng.u64() & 1u) ? 1 : -1;
    h.weight = 1.0;
    thread_local std::vector<long long> pos, neg;
    route_counts(h.tree, d, pos, neg);
    h.empirical_risk = risk_from_counts(h.tree, pos, neg, d.rows());
    return h;
}

double proposal_importance_weight(int depth) {
    check_depth(depth);
    // 2^(-2^depth); subnormal below depth 10, zero past depth 10
    return std::ldexp(1.0, -(1 << depth));
}

double proposal_importance_log10_weight(int depth) {
    check_depth(depth);
    return -static_cast<double>(1 << depth) * std::log10(2.0);
}

nlohmann::json tree_to_json(const DecisionTree& t) {
    nlohmann::json splits = nlohmann::json::array();
    for (const auto& s : t.splits) splits.push_back({{"feature", s.feature}, {"threshold", s.threshold}});
    return {{"depth", t.depth}, {"splits", splits}, {"leaves", t.leaves}};
}

DecisionTree tree_from_json(const nlohmann::json& j) {
    DecisionTree t;
    t.depth = j.at("depth").get<int>();
    check_depth(t.depth);
    for (const auto& s : j.at("splits"))
        t.splits.push_back(SplitNode{s.at("feature").get<int>(), s.at("threshold").get<double>()});
    t.leaves = j.at("leaves").get<std::vector<int>>();
    if (t.splits.size() != (1u << t.depth) - 1 || t.leaves.size() != (1u << t.depth))
        throw std::invalid_argument("tree json: node counts do not match the depth");
    for (int leaf : t.leaves)
        if (leaf != -1 && leaf != 1) throw std::invalid_argument("tree json: leaves must be -1 or +1");
    return t;
}

bool enumerate_tree_space(const Dataset& d, int depth, std::size_t cap,
                          std::vector<DecisionTree>& out) {
    check_depth(depth);
    // candidate thresholds per feature: 0.5 for binary, value midpoints otherwise
    std::vector<std::vector<double>> cand(d.cols());
    for (std::size_t f = 0; f < d.cols(); ++f) {
        if (d.feature_kinds[f] == FeatureKind::binary) {
            cand[f] = {0.5};
            continue;
        }
        std::vector<double> vals(d.rows());
        for (std::size_t i = 0; i < d.rows(); ++i)
            vals[i] = d.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f));
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (std::size_t i = 0; i + 1 < vals.size(); ++i)
            cand[f].push_back(vals[i] + 0.5 * (vals[i + 1] - vals[i]));
        if (cand[f].empty()) cand[f] = {0.5};
    }

    std::size_t split_options = 0;
    for (const auto& c : cand) split_options += c.size();
    const std::size_t internal = (1u << depth) - 1;
    const std::size_t leaf_count = 1u << depth;
    if (leaf_count > 25) return false;  // labelings alone exceed any sane cap

    double size = std::pow(static_cast<double>(split_options), static_cast<double>(internal)) *
                  std::pow(2.0, static_cast<double>(leaf_count));
    if (!(size <= static_cast<double>(cap))) return false;

    // flatten the (feature, threshold) choices
    std::vector<SplitNode> options;
    for (std::size_t f = 0; f < d.cols(); ++f)
        for (double thr : cand[f]) options.push_back(SplitNode{static_cast<int>(f), thr});

    out.clear();
    out.reserve(static_cast<std::size_t>(size));
    std::vector<std::size_t> split_idx(internal, 0);
    while (true) {
        DecisionTree base;
        base.depth = depth;
        base.splits.resize(internal);
        for (std::size_t i = 0; i < internal; ++i) base.splits[i] = options[split_idx[i]];
        for (std::size_t mask = 0; mask < (1u << leaf_count); ++mask) {
            base.leaves.assign(leaf_count, -1);
            for (std::size_t b = 0; b < leaf_count; ++b)
                if (mask & (1u << b)) base.leaves[b] = 1;
            out.push_back(base);
        }
        // odometer over split choices
        std::size_t pos = 0;
        while (pos < internal && ++split_idx[pos] == options.size()) split_idx[pos++] = 0;
        if (pos == internal) break;
    }
    return true;
}

}  // namespace rashomon
