#pragma once

#include <Eigen/Dense>
#include <vector>

#include "core/dataset.hpp"

namespace rashomon {

// Closed-form Rashomon volume inputs for ridge / least squares: the singular
// values of the feature matrix, the regularization constant, and theta.
struct RidgeSpec {
    std::vector<double> singular_values;
    double reg = 0.0;    // C
    double theta = 0.0;
    int dim = 0;         // p

    void validate() const;
};

struct RidgeFit {
    Eigen::VectorXd w_hat;
    Eigen::MatrixXd gram;  // X^T X + C I, symmetric positive definite
};

// Unique minimizer of (Xw - Y)^T (Xw - Y) + C w^T w.
// Throws when the gram matrix is singular (C = 0 with rank-deficient X).
RidgeFit ridge_fit(const Dataset& d, double reg);

// Penalized sum-of-squares risk of a coefficient vector (the loss the
// Rashomon threshold is measured in). Unnormalized sum form.
double ridge_risk_sum(const Dataset& d, const Eigen::VectorXd& w, double reg);

// log of the p-ball coefficient pi^(p/2) theta^(p/2) / Gamma(p/2 + 1).
double log_ellipsoid_coefficient(double theta, int p);

// Exact ellipsoid volume: coefficient times prod 1/sqrt(sigma_i^2 + C).
// Throws when a zero singular value meets C = 0 (the volume diverges).
double ridge_volume(const RidgeSpec& spec);
double ridge_log10_volume(const RidgeSpec& spec);

// Inclusive membership test (w - w_hat)^T gram (w - w_hat) <= theta.
bool ellipsoid_contains(const Eigen::VectorXd& w, const RidgeFit& fit, double theta);

// theta placing w_interest on the ellipsoid boundary: delta^T gram delta.
double theta_from_direction(const RidgeFit& fit, const Eigen::VectorXd& w_interest);

// Singular values of the feature matrix.
std::vector<double> singular_values(const Dataset& d);

enum class RidgeBoundKind { frobenius, second_derivative, unit_sphere };

// Volume lower bounds that avoid the singular values:
//   frobenius:          2K/(F + pC); fro_or_delta supplies F, which is tight
//                       exactly when it equals sum sigma_i^2 (the squared
//                       Frobenius norm) and p = 2
//   second_derivative:  2K/(sqrt(p(delta/2 - C)) + pC); fro_or_delta supplies
//                       delta, a bound on every diagonal second derivative of
//                       the penalized risk (requires delta >= 2C)
//   unit_sphere:        2K/(sqrt(n) + pC); rows of X on the unit sphere
// Each evaluates its stated formula; the comparison against the exact volume
// holds when 2 * prod sqrt(sigma_i^2 + C) does not exceed the denominator.
double ridge_volume_lower_bound(const RidgeSpec& spec, RidgeBoundKind kind, double fro_or_delta,
                                long long n);

}  // namespace rashomon
