#include "wellglm/linalg.hpp"

#include "wellglm/error.hpp"

#include <algorithm>
#include <cmath>

namespace wellglm {

bool WeightedLSSolution::aliased(int column) const {
    return std::find(dropped_columns.begin(), dropped_columns.end(), column) != dropped_columns.end();
}

WeightedLSSolution weighted_least_squares(const Eigen::MatrixXd& design, const Eigen::VectorXd& response,
                                          const Eigen::VectorXd& weights) {
    const Eigen::Index n = design.rows();
    const Eigen::Index m = design.cols();
    if (n == 0) throw EmptyDatasetError("least squares on an empty design");
    if (response.size() != n || weights.size() != n) {
        throw ShapeError("least squares: design, response and weights disagree in length");
    }
    Eigen::Index positive = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(weights[i]) || weights[i] < 0.0) {
            throw DomainError("least squares: weight " + std::to_string(i) + " is negative or not finite");
        }
        if (weights[i] > 0.0) ++positive;
    }
    if (positive == 0) throw DegenerateWeightsError("least squares: all weights are zero");

    const Eigen::VectorXd root_w = weights.cwiseSqrt();
    Eigen::MatrixXd a = root_w.asDiagonal() * design;
    Eigen::VectorXd b = root_w.cwiseProduct(response);
    const Eigen::VectorXd col_norms = a.colwise().norm();

    WeightedLSSolution sol;
    Eigen::VectorXd workspace(std::max<Eigen::Index>(m, 1));
    Eigen::Index k = 0;
    for (Eigen::Index c = 0; c < m; ++c) {
        const double residual_norm = k < n ? a.col(c).tail(n - k).norm() : 0.0;
        if (!(col_norms[c] > 0.0) || residual_norm <= kRankTolerance * col_norms[c]) {
            sol.dropped_columns.push_back(static_cast<int>(c));
            continue;
        }
        auto pivot = a.col(c).tail(n - k);
        double tau = 0.0;
        double beta = 0.0;
        pivot.makeHouseholderInPlace(tau, beta);
        pivot(0) = beta;
        const auto essential = a.col(c).tail(n - k - 1);
        for (Eigen::Index rest = c + 1; rest < m; ++rest) {
            a.col(rest).tail(n - k).applyHouseholderOnTheLeft(essential, tau, workspace.data());
        }
        b.tail(n - k).applyHouseholderOnTheLeft(essential, tau, workspace.data());
        sol.retained_columns.push_back(static_cast<int>(c));
        ++k;
    }

    sol.coefficients = Eigen::VectorXd::Zero(m);
    sol.xtwx_inverse = Eigen::MatrixXd::Zero(m, m);
    sol.saturated = k >= positive;
    if (k == 0) return sol;

    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(k, k);
    for (Eigen::Index j = 0; j < k; ++j) {
        const auto col = sol.retained_columns[static_cast<std::size_t>(j)];
        r.col(j).head(j + 1) = a.col(col).head(j + 1);
    }
    const auto upper = r.triangularView<Eigen::Upper>();
    const Eigen::VectorXd coef = upper.solve(b.head(k));
    const Eigen::MatrixXd r_inv = upper.solve(Eigen::MatrixXd::Identity(k, k));
    const Eigen::MatrixXd inv = r_inv * r_inv.transpose();

    for (Eigen::Index i = 0; i < k; ++i) {
        const auto ci = sol.retained_columns[static_cast<std::size_t>(i)];
        sol.coefficients[ci] = coef[i];
        for (Eigen::Index j = 0; j < k; ++j) {
            sol.xtwx_inverse(ci, sol.retained_columns[static_cast<std::size_t>(j)]) = inv(i, j);
        }
    }
    return sol;
}

Eigen::VectorXd solve_spd(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
    if (a.rows() != a.cols() || a.rows() != b.size()) throw ShapeError("solve_spd: dimension mismatch");
    Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) {
        throw NotPositiveDefiniteError("solve_spd: matrix is not positive definite");
    }
    return llt.solve(b);
}

}  // namespace wellglm
