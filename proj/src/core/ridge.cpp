#include "core/ridge.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

namespace rashomon {

void RidgeSpec::validate() const {
    if (dim < 1) throw std::invalid_argument("ridge: dimension must be positive");
    if (static_cast<int>(singular_values.size()) != dim)
        throw std::invalid_argument("ridge: need one singular value per dimension");
    if (reg < 0.0) throw std::invalid_argument("ridge: regularization must be nonnegative");
    if (theta <= 0.0) throw std::invalid_argument("ridge: theta must be positive");
    for (double s : singular_values)
        if (s < 0.0) throw std::invalid_argument("ridge: singular values must be nonnegative");
    if (reg == 0.0) {
        for (double s : singular_values)
            if (s == 0.0)
                throw std::runtime_error(
                    "ridge: zero singular value with C = 0, the volume diverges");
    }
}

RidgeFit ridge_fit(const Dataset& d, double reg) {
    if (reg < 0.0) throw std::invalid_argument("ridge: regularization must be nonnegative");
    const Eigen::MatrixXd& X = d.features;
    RidgeFit fit;
    fit.gram = X.transpose() * X;
    fit.gram.diagonal().array() += reg;

    Eigen::LDLT<Eigen::MatrixXd> ldlt(fit.gram);
    const double cond_floor = fit.gram.diagonal().maxCoeff() * 1e-12;
    if (ldlt.info() != Eigen::Success || !ldlt.isPositive() ||
        ldlt.vectorD().minCoeff() <= cond_floor)
        throw std::runtime_error("ridge: gram matrix is singular (C = 0 with dependent columns)");

    const Eigen::VectorXd xty = X.transpose() * d.labels;
    fit.w_hat = ldlt.solve(xty);
    // one refinement pass keeps the residual gradient near machine precision
    fit.w_hat += ldlt.solve(xty - fit.gram * fit.w_hat);

    const double scale = std::max(1.0, xty.cwiseAbs().maxCoeff());
    const double resid = (fit.gram * fit.w_hat - xty).cwiseAbs().maxCoeff();
    if (resid > 1e-8 * scale)
        throw std::runtime_error("ridge: normal-equation residual exceeded tolerance");
    return fit;
}

double ridge_risk_sum(const Dataset& d, const Eigen::VectorXd& w, double reg) {
    const Eigen::VectorXd r = d.features * w - d.labels;
    return r.squaredNorm() + reg * w.squaredNorm();
}

double log_ellipsoid_coefficient(double theta, int p) {
    if (theta <= 0.0) throw std::invalid_argument("theta must be positive");
    if (p < 1) throw std::invalid_argument("dimension must be positive");
    const double half_p = 0.5 * static_cast<double>(p);
    return half_p * (std::log(M_PI) + std::log(theta)) - std::lgamma(half_p + 1.0);
}

namespace {
double log_volume(const RidgeSpec& spec) {
    spec.validate();
    double log_v = log_ellipsoid_coefficient(spec.theta, spec.dim);
    for (double s : spec.singular_values) log_v -= 0.5 * std::log(s * s + spec.reg);
    return log_v;
}
}  // namespace

double ridge_volume(const RidgeSpec& spec) { return std::exp(log_volume(spec)); }

double ridge_log10_volume(const RidgeSpec& spec) { return log_volume(spec) / std::log(10.0); }

bool ellipsoid_contains(const Eigen::VectorXd& w, const RidgeFit& fit, double theta) {
    if (w.size() != fit.w_hat.size()) throw std::invalid_argument("dimension mismatch");
    if (theta < 0.0) throw std::invalid_argument("theta must be nonnegative");
    const Eigen::VectorXd delta = w - fit.w_hat;
    return delta.dot(fit.gram * delta) <= theta;
}

double theta_from_direction(const RidgeFit& fit, const Eigen::VectorXd& w_interest) {
    if (w_interest.size() != fit.w_hat.size()) throw std::invalid_argument("dimension mismatch");
    const Eigen::VectorXd delta = w_interest - fit.w_hat;
    return delta.dot(fit.gram * delta);
}

std::vector<double> singular_values(const Dataset& d) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d.features);
    std::vector<double> out(static_cast<std::size_t>(svd.singularValues().size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = svd.singularValues()[static_cast<Eigen::Index>(i)];
    // pad with zeros when n < p so every dimension carries a value
    while (out.size() < d.cols()) out.push_back(0.0);
    return out;
}

double ridge_volume_lower_bound(const RidgeSpec& spec, RidgeBoundKind kind, double fro_or_delta,
                                long long n) {
    spec.validate();
    const double p = static_cast<double>(spec.dim);
    const double coef = 2.0 * std::exp(log_ellipsoid_coefficient(spec.theta, spec.dim));
    switch (kind) {
        case RidgeBoundKind::frobenius: {
            if (fro_or_delta <= 0.0)
                throw std::invalid_argument("frobenius bound parameter must be positive");
            return coef / (fro_or_delta + p * spec.reg);
        }
        case RidgeBoundKind::second_derivative: {
            const double delta = fro_or_delta;
            if (delta < 2.0 * spec.reg)
                throw std::invalid_argument("second-derivative bound requires delta >= 2C");
            return coef / (std::sqrt(p * (delta / 2.0 - spec.reg)) + p * spec.reg);
        }
        case RidgeBoundKind::unit_sphere: {
            if (n < 1) throw std::invalid_argument("unit-sphere bound requires n >= 1");
            return coef / (std::sqrt(static_cast<double>(n)) + p * spec.reg);
        }
    }
    throw std::invalid_argument("unknown bound kind");
}

}  // namespace rashomon
