#pragma once

#include <Eigen/Dense>

#include <vector>

namespace wellglm {

/// Relative tolerance for declaring a design column linearly dependent.
inline constexpr double kRankTolerance = 1e-10;

struct WeightedLSSolution {
    /// Length m; entries for dropped columns are exactly zero.
    Eigen::VectorXd coefficients;
    /// (D^T W D)^{-1} restricted to the retained columns and embedded in an
    /// m x m matrix whose dropped rows and columns are zero.
    Eigen::MatrixXd xtwx_inverse;
    std::vector<int> retained_columns;
    std::vector<int> dropped_columns;
    /// No residual degrees of freedom: rank equals the number of rows with
    /// positive weight.
    bool saturated = false;

    int rank() const { return static_cast<int>(retained_columns.size()); }
    bool aliased(int column) const;
};

/// Minimizes sum_i w_i (z_i - D_i beta)^2 by Householder QR of sqrt(W) D.
///
/// Columns are visited left to right; a column whose norm after projecting
/// out the earlier retained columns falls below kRankTolerance times its own
/// norm is dropped, so of two identical columns the later one loses.
WeightedLSSolution weighted_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                                          const Eigen::VectorXd& weights);

/// Solves A x = b for symmetric positive-definite A by Cholesky.
/// Throws NotPositiveDefiniteError on a non-positive pivot.
Eigen::VectorXd solve_spd(const Eigen::MatrixXd& a, const Eigen::VectorXd& b);

}  // namespace wellglm
