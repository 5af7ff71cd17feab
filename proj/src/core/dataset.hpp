#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

namespace rashomon {

enum class Task { classification, regression };
enum class FeatureKind { binary, real };

// Feature matrix normalized to the unit cube, plus labels.
// Classification labels live in {-1,+1}; regression targets are kept raw.
// Immutable after construction; safe to share across threads.
struct Dataset {
    Eigen::MatrixXd features;               // n x p, every entry in [0,1]
    Eigen::VectorXd labels;                 // length n
    std::vector<FeatureKind> feature_kinds; // per column
    std::vector<std::string> feature_names;
    Task task = Task::classification;
    std::string name;
    // recorded label mapping for classification (lexicographic: first -> -1)
    std::string negative_label, positive_label;

    std::size_t rows() const { return static_cast<std::size_t>(features.rows()); }
    std::size_t cols() const { return static_cast<std::size_t>(features.cols()); }
};

struct FoldPlan {
    int fold_count = 0;
    std::vector<int> assignments;  // length n, values in [0, fold_count)
    std::uint64_t seed = 0;
};

// Builds a dataset from raw (un-normalized) values. Columns are min-max
// normalized to [0,1]; constant columns map to 0. Columns whose normalized
// values all lie in {0,1} are flagged binary.
Dataset make_dataset(const Eigen::MatrixXd& raw_features, const Eigen::VectorXd& labels,
                     Task task, std::string name = "");

// Loads a CSV file (UTF-8, comma separated, header row). The label column is
// selected by name or by 0-based index. Rows containing empty cells are
// dropped. Classification labels are mapped lexicographically to {-1,+1}.
// Throws std::runtime_error / std::invalid_argument on the documented error
// conditions (unreadable file, non-numeric feature cell, fewer than two
// distinct classification labels, empty dataset after filtering).
Dataset load_csv(const std::string& path, const std::string& label_column, Task task);

// Paper-style default: ten folds above 200 points, five otherwise.
int default_fold_count(std::size_t n);

// Deterministic fold assignment. Stratified by label in classification mode
// when every class has at least fold_count members, plain shuffle otherwise.
// Fold sizes differ by at most one either way.
FoldPlan make_folds(const Dataset& d, int fold_count, std::uint64_t seed);

// Projects onto the k leading right singular vectors of the column-centered
// feature matrix, then re-normalizes each projection to [0,1].
// `fit_rows`: optional subset of row indices used to fit the projection
// (all rows are transformed either way); empty means fit on all rows.
Dataset pca_top_k(const Dataset& d, int k, const std::vector<int>& fit_rows = {});

// All monomials of total degree 1..degree over the input columns, in graded
// lexicographic order. No constant column is emitted. Values stay in [0,1]
// because the inputs live in the unit cube.
Dataset polynomial_features(const Dataset& d, int degree);

// C(p+degree, degree) - 1, the polynomial_features column count.
long long polynomial_column_count(int p, int degree);

}  // namespace rashomon
