#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "core/dataset.hpp"
#include "core/rng.hpp"

namespace rashomon {

struct SplitNode {
    int feature = 0;
    double threshold = 0.5;
};

// Complete binary decision tree of a fixed depth: node i has children
// 2i+1 and 2i+2, the 2^depth - 1 internal nodes precede the 2^depth leaves.
// Rows route left when feature value <= threshold.
struct DecisionTree {
    int depth = 1;
    std::vector<SplitNode> splits;  // 2^depth - 1, heap order
    std::vector<int> leaves;        // 2^depth entries of -1 / +1

    int predict(const Eigen::MatrixXd& features, Eigen::Index row) const {
        int node = 0;
        const int internal = static_cast<int>(splits.size());
        while (node < internal) {
            const SplitNode& s = splits[static_cast<std::size_t>(node)];
            node = 2 * node + (features(row, s.feature) <= s.threshold ? 1 : 2);
        }
        return leaves[static_cast<std::size_t>(node - internal)];
    }
};

struct SampledHypothesis {
    DecisionTree tree;
    double weight = 1.0;         // importance weight, 1 for target draws
    double empirical_risk = 0.0;
};

std::vector<int> predictions(const DecisionTree& t, const Dataset& d);

// 0-1 loss: fraction of rows whose prediction disagrees with the label.
double empirical_risk(const DecisionTree& t, const Dataset& d);

// Greedy Gini tree grown to exactly `depth`. Pure nodes (or nodes with no
// usable split) become constant-label subtrees; otherwise the best split is
// taken even when the impurity reduction is zero, ties broken by lowest
// feature index, then lowest threshold. Deterministic.
DecisionTree cart_fit(const Dataset& d, int depth);

// Proposal draw: uniform random split features, thresholds fixed at 0.5 for
// binary features and uniform in (0,1) otherwise; leaves take the majority
// label of the training rows they receive (ties toward +1), empty leaves
// inherit from the nearest ancestor that sees data. Weight (1/2)^(2^depth).
SampledHypothesis sample_proposal_tree(const Dataset& d, int depth, RngStream& rng);

// Target draw: same random structure, leaf labels uniform in {-1,+1}, weight 1.
SampledHypothesis sample_target_tree(const Dataset& d, int depth, RngStream& rng);

// (1/2)^(2^depth); exact for every depth the tree sampler accepts.
double proposal_importance_weight(int depth);
double proposal_importance_log10_weight(int depth);

nlohmann::json tree_to_json(const DecisionTree& t);
DecisionTree tree_from_json(const nlohmann::json& j);

// Every tree of the given depth over per-feature threshold candidates
// (0.5 for binary features, value midpoints otherwise) with every leaf
// labeling. Returns false without filling `out` if the space exceeds `cap`.
bool enumerate_tree_space(const Dataset& d, int depth, std::size_t cap,
                          std::vector<DecisionTree>& out);

}  // namespace rashomon
