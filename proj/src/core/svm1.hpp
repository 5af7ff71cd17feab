#pragma once

#include <Eigen/Dense>

#include "core/dataset.hpp"

namespace rashomon {

// Sum of hinge losses max(0, 1 - y_i w^T x_i) over the dataset.
double hinge_loss_sum(const Dataset& d, const Eigen::VectorXd& w);

struct Svm1Fit {
    Eigen::VectorXd w;       // the 1-norm SVM center
    double objective = 0.0;  // reg * ||w||_1 + hinge sum
    bool converged = false;
    int sweeps = 0;
};

// Minimizes reg * ||w||_1 + sum hinge by cyclic coordinate descent with exact
// piecewise-linear line minimization per coordinate. Flat optimal segments
// resolve to the endpoint with the lower hinge sum, then the lower |w_j|.
// Fully deterministic (zero start, fixed sweep order). A fit that stops at
// the sweep cap is returned with converged = false and the achieved
// objective rather than thrown away.
Svm1Fit svm1_fit(const Dataset& d, double reg_weight, int max_sweeps = 200,
                 double rel_tol = 1e-6);

struct CrossPolytopeBound {
    Eigen::VectorXd center;
    double half_diagonal = 0.0;       // delta
    double volume_lower_bound = 0.0;  // 2^p delta^p / p!
    double log10_volume = 0.0;
    bool clipped = false;             // delta hit the configured box radius
};

// Largest cross-polytope centered at `center` whose 2p vertices all keep the
// hinge sum within loss(center) + theta; delta is found by bisection (the
// convex loss attains its polytope maximum at a vertex). Flat instances are
// clipped at clip_radius and flagged.
CrossPolytopeBound inscribed_cross_polytope(const Dataset& d, const Eigen::VectorXd& center,
                                            double theta, double clip_radius = 1e6);

}  // namespace rashomon
