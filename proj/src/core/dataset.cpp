#include "core/dataset.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "core/rng.hpp"

namespace rashomon {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    try {
        std::size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

void normalize_columns(Eigen::MatrixXd& m, std::vector<FeatureKind>& kinds) {
    const auto n = m.rows();
    const auto p = m.cols();
    kinds.assign(static_cast<std::size_t>(p), FeatureKind::real);
    for (Eigen::Index j = 0; j < p; ++j) {
        const double lo = m.col(j).minCoeff();
        const double hi = m.col(j).maxCoeff();
        if (hi > lo) {
            m.col(j) = (m.col(j).array() - lo) / (hi - lo);
        } else {
            m.col(j).setZero();  // constant column maps to 0
        }
        bool binary = true;
        for (Eigen::Index i = 0; i < n && binary; ++i) {
            const double v = m(i, j);
            binary = (v == 0.0 || v == 1.0);
        }
        if (binary) kinds[static_cast<std::size_t>(j)] = FeatureKind::binary;
    }
}

}  // namespace

Dataset make_dataset(const Eigen::MatrixXd& raw_features, const Eigen::VectorXd& labels,
                     Task task, std::string name) {
    if (raw_features.rows() < 1 || raw_features.cols() < 1)
        throw std::invalid_argument("dataset needs at least one row and one column");
    if (labels.size() != raw_features.rows())
        throw std::invalid_argument("labels length must equal the number of rows");
    if (task == Task::classification) {
        for (Eigen::Index i = 0; i < labels.size(); ++i)
            if (labels[i] != -1.0 && labels[i] != 1.0)
                throw std::invalid_argument("classification labels must be -1 or +1");
    }
    Dataset d;
    d.features = raw_features;
    d.labels = labels;
    d.task = task;
    d.name = std::move(name);
    normalize_columns(d.features, d.feature_kinds);
    d.feature_names.resize(d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) d.feature_names[j] = "x" + std::to_string(j + 1);
    return d;
}

Dataset load_csv(const std::string& path, const std::string& label_column, Task task) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty file: " + path);
    if (!line.empty() && line.front() == '\xEF') line = line.substr(3);  // strip UTF-8 BOM
    const std::vector<std::string> header = split_csv_line(line);
    if (header.empty()) throw std::runtime_error("missing header row in " + path);

    // resolve label column by name first, then as a 0-based index
    int label_idx = -1;
    for (std::size_t j = 0; j < header.size(); ++j)
        if (header[j] == label_column) { label_idx = static_cast<int>(j); break; }
    if (label_idx < 0) {
        double v;
        if (parse_double(label_column, v) && v >= 0 && v < static_cast<double>(header.size()) &&
            v == std::floor(v))
            label_idx = static_cast<int>(v);
    }
    if (label_idx < 0)
        throw std::invalid_argument("label column '" + label_column + "' not found in " + path);

    const std::size_t p = header.size() - 1;
    if (p == 0) throw std::runtime_error("no feature columns in " + path);

    std::vector<std::vector<double>> rows;
    std::vector<std::string> raw_labels;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                     " has " + std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(header.size()));
        bool missing = false;
        for (const auto& c : cells)
            if (c.empty()) { missing = true; break; }
        if (missing) continue;  // drop records with missing values

        std::vector<double> row;
        row.reserve(p);
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (static_cast<int>(j) == label_idx) continue;
            double v;
            if (!parse_double(cells[j], v))
                throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                                         ": non-numeric feature cell '" + cells[j] + "'");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
        raw_labels.push_back(cells[static_cast<std::size_t>(label_idx)]);
    }
    if (rows.empty()) throw std::runtime_error(path + ": empty dataset after filtering");

    const std::size_t n = rows.size();
    Eigen::MatrixXd features(n, p);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];

    Eigen::VectorXd labels(n);
    std::string neg, pos;
    if (task == Task::classification) {
        std::set<std::string> distinct(raw_labels.begin(), raw_labels.end());
        if (distinct.size() < 2)
            throw std::runtime_error(path + ": fewer than 2 distinct labels in classification mode");
        if (distinct.size() > 2)
            throw std::runtime_error(path + ": more than 2 distinct labels; binary classification only");
        neg = *distinct.begin();
        pos = *std::next(distinct.begin());
        for (std::size_t i = 0; i < n; ++i) labels[static_cast<Eigen::Index>(i)] = (raw_labels[i] == neg) ? -1.0 : 1.0;
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double v;
            if (!parse_double(raw_labels[i], v))
                throw std::runtime_error(path + ": non-numeric regression target '" + raw_labels[i] + "'");
            labels[static_cast<Eigen::Index>(i)] = v;
        }
    }

    Dataset d = make_dataset(features, labels, task, path);
    d.feature_names.clear();
    for (std::size_t j = 0; j < header.size(); ++j)
        if (static_cast<int>(j) != label_idx) d.feature_names.push_back(header[j]);
    d.negative_label = neg;
    d.positive_label = pos;
    return d;
}

int default_fold_count(std::size_t n) { return n > 200 ? 10 : 5; }

FoldPlan make_folds(const Dataset& d, int fold_count, std::uint64_t seed) {
    const std::size_t n = d.rows();
    if (fold_count < 1 || static_cast<std::size_t>(fold_count) > n)
        throw std::invalid_argument("fold_count must be in [1, n]");

    FoldPlan plan;
    plan.fold_count = fold_count;
    plan.seed = seed;
    plan.assignments.assign(n, 0);

    RngStream rng = RngStream::substream(seed, streams::folds, 0);

    auto shuffled = [&](std::vector<int> idx) {
        for (std::size_t i = idx.size(); i > 1; --i)
            std::swap(idx[i - 1], idx[rng.uniform_index(i)]);
        return idx;
    };

    bool stratify = false;
    if (d.task == Task::classification) {
        std::size_t n_neg = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (d.labels[static_cast<Eigen::Index>(i)] < 0) ++n_neg;
        stratify = n_neg >= static_cast<std::size_t>(fold_count) &&
                   (n - n_neg) >= static_cast<std::size_t>(fold_count);
    }

    // Deal a single shuffled sequence round-robin; with stratification the
    // sequence is grouped by class so each fold gets a balanced share of
    // each class while global fold sizes still differ by at most one.
    std::vector<int> order;
    order.reserve(n);
    if (stratify) {
        std::vector<int> neg, pos;
        for (std::size_t i = 0; i < n; ++i)
            (d.labels[static_cast<Eigen::Index>(i)] < 0 ? neg : pos).push_back(static_cast<int>(i));
        for (int i : shuffled(neg)) order.push_back(i);
        for (int i : shuffled(pos)) order.push_back(i);
    } else {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        order = shuffled(all);
    }
    for (std::size_t j = 0; j < order.size(); ++j)
        plan.assignments[static_cast<std::size_t>(order[j])] = static_cast<int>(j % static_cast<std::size_t>(fold_count));
    return plan;
}

Dataset pca_top_k(const Dataset& d, int k, const std::vector<int>& fit_rows) {
    const auto p = static_cast<int>(d.cols());
    if (k < 1 || k > p) throw std::invalid_argument("pca: k must be in [1, p]");

    Eigen::MatrixXd fit;
    if (fit_rows.empty()) {
        fit = d.features;
    } else {
        fit.resize(static_cast<Eigen::Index>(fit_rows.size()), p);
        for (std::size_t i = 0; i < fit_rows.size(); ++i)
            fit.row(static_cast<Eigen::Index>(i)) = d.features.row(fit_rows[i]);
    }
    const Eigen::RowVectorXd mean = fit.colwise().mean();
    const Eigen::MatrixXd centered = fit.rowwise() - mean;

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    const double tol = static_cast<double>(std::max(centered.rows(), centered.cols())) * sv[0] * 1e-12;
    if (k > sv.size() || sv[k - 1] <= tol)
        throw std::runtime_error("pca: requested k exceeds the numerical rank of the data");

    const Eigen::MatrixXd proj = (d.features.rowwise() - mean) * svd.matrixV().leftCols(k);

    Eigen::VectorXd labels = d.labels;
    Dataset out = make_dataset(proj, labels, d.task, d.name + ":pca" + std::to_string(k));
    out.negative_label = d.negative_label;
    out.positive_label = d.positive_label;
    for (int j = 0; j < k; ++j) out.feature_names[static_cast<std::size_t>(j)] = "pc" + std::to_string(j + 1);
    return out;
}

long long polynomial_column_count(int p, int degree) {
    // C(p+degree, degree) - 1, computed incrementally to dodge overflow for
    // the sizes the guard allows
    long long c = 1;
    for (int i = 1; i <= degree; ++i) {
        c = c * (p + i) / i;
        if (c > (1LL << 40)) return c;  // already far beyond the column guard
    }
    return c - 1;
}

namespace {
void enumerate_monomials(int p, int degree, std::vector<int>& expo, int pos, int remaining,
                         std::vector<std::vector<int>>& out) {
    if (pos == p - 1) {
        expo[static_cast<std::size_t>(pos)] = remaining;
        out.push_back(expo);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        expo[static_cast<std::size_t>(pos)] = e;
        enumerate_monomials(p, degree, expo, pos + 1, remaining - e, out);
    }
}
}  // namespace

Dataset polynomial_features(const Dataset& d, int degree) {
    if (degree < 1) throw std::invalid_argument("polynomial degree must be >= 1");
    const int p = static_cast<int>(d.cols());
    const long long cols = polynomial_column_count(p, degree);
    if (cols > 1000000) throw std::runtime_error("polynomial expansion exceeds 10^6 columns");

    // graded lexicographic: total degree 1..degree, then lexicographic
    // within a degree (leading exponents first)
    std::vector<std::vector<int>> monomials;
    for (int total = 1; total <= degree; ++total) {
        std::vector<int> expo(static_cast<std::size_t>(p), 0);
        enumerate_monomials(p, total, expo, 0, total, monomials);
    }

    const auto n = static_cast<Eigen::Index>(d.rows());
    Eigen::MatrixXd out(n, static_cast<Eigen::Index>(monomials.size()));
    std::vector<std::string> names;
    names.reserve(monomials.size());
    for (std::size_t m = 0; m < monomials.size(); ++m) {
        Eigen::VectorXd col = Eigen::VectorXd::Ones(n);
        std::string name;
        for (int j = 0; j < p; ++j) {
            const int e = monomials[m][static_cast<std::size_t>(j)];
            for (int rep = 0; rep < e; ++rep) col = col.cwiseProduct(d.features.col(j));
            if (e > 0) {
                name += d.feature_names[static_cast<std::size_t>(j)];
                if (e > 1) name += "^" + std::to_string(e);
            }
        }
        out.col(static_cast<Eigen::Index>(m)) = col;
        names.push_back(name);
    }

    // keep raw monomial values: inputs live in [0,1], so products do too
    Dataset res;
    res.features = out;
    res.labels = d.labels;
    res.task = d.task;
    res.name = d.name + ":poly" + std::to_string(degree);
    res.feature_names = names;
    res.negative_label = d.negative_label;
    res.positive_label = d.positive_label;
    res.feature_kinds.assign(monomials.size(), FeatureKind::real);
    for (std::size_t j = 0; j < monomials.size(); ++j) {
        bool binary = true;
        for (Eigen::Index i = 0; i < n && binary; ++i) {
            const double v = out(i, static_cast<Eigen::Index>(j));
            binary = (v == 0.0 || v == 1.0);
        }
        if (binary) res.feature_kinds[j] = FeatureKind::binary;
    }
    return res;
}

}  // namespace rashomon
