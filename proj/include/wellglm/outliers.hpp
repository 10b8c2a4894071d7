#pragma once

#include <Eigen/Dense>

#include <vector>

namespace wellglm {

/// Mahalanobis screen of the rows of an n x p block.
struct OutlierScreen {
    Eigen::VectorXd center;
    /// Sample covariance with the (n - 1) denominator, before any ridge.
    Eigen::MatrixXd covariance;
    Eigen::VectorXd distances;
    /// True when the covariance was numerically singular and a ridge of
    /// 1e-8 * trace(S) / p was added before inversion.
    bool regularized = false;
    double cutoff = 0.0;
    std::vector<bool> flags;

    long flagged() const;
};

/// d_i = sqrt((x_i - xbar)' S^{-1} (x_i - xbar)).
/// Throws ShapeError unless n > p, and RankError when S stays singular after
/// the ridge (the message names the constant columns).
OutlierScreen mahalanobis(const Eigen::MatrixXd& data);

/// cutoff = sqrt(chi-square quantile at 1 - alpha with p degrees of freedom).
double mahalanobis_cutoff(double alpha, int dof);

/// Fills cutoff and flags (distance > cutoff). Returns the flags.
const std::vector<bool>& flag_outliers(OutlierScreen& screen, double alpha);

}  // namespace wellglm
