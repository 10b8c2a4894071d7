#pragma once

// Reference computations used only by tests. None of these route through the
// library's solvers.

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

/// Solves (D'D) beta = D'y by Gauss-Jordan elimination with partial
/// pivoting, accumulated in long double.
inline Eigen::VectorXd normal_equations(const Eigen::MatrixXd& d, const Eigen::VectorXd& y) {
    const auto n = d.rows();
    const auto m = d.cols();
    std::vector<std::vector<long double>> a(static_cast<std::size_t>(m),
                                            std::vector<long double>(static_cast<std::size_t>(m + 1), 0.0L));
    for (Eigen::Index r = 0; r < m; ++r) {
        for (Eigen::Index c = 0; c < m; ++c) {
            long double s = 0.0L;
            for (Eigen::Index i = 0; i < n; ++i) s += static_cast<long double>(d(i, r)) * d(i, c);
            a[r][c] = s;
        }
        long double s = 0.0L;
        for (Eigen::Index i = 0; i < n; ++i) s += static_cast<long double>(d(i, r)) * y[i];
        a[r][m] = s;
    }
    for (Eigen::Index col = 0; col < m; ++col) {
        Eigen::Index piv = col;
        for (Eigen::Index r = col + 1; r < m; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        }
        std::swap(a[col], a[piv]);
        for (Eigen::Index r = 0; r < m; ++r) {
            if (r == col) continue;
            const long double f = a[r][col] / a[col][col];
            for (Eigen::Index c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    Eigen::VectorXd beta(m);
    for (Eigen::Index r = 0; r < m; ++r) beta[r] = static_cast<double>(a[r][m] / a[r][r]);
    return beta;
}

inline double poisson_loglik2(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double b0, double b1) {
    double ll = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double eta = b0 + b1 * x[i];
        ll += y[i] * eta - std::exp(eta);
    }
    return ll;
}

/// Maximizes the two-coefficient Poisson log-likelihood by repeated dense
/// grid search, shrinking the window around the incumbent each round.
inline std::pair<double, double> poisson_grid_mle(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                                                  double c0 = 0.0, double c1 = 0.0, double half = 4.0) {
    constexpr int steps = 40;
    double best0 = c0;
    double best1 = c1;
    double best = poisson_loglik2(x, y, best0, best1);
    while (half > 1e-10) {
        const double g0 = best0;
        const double g1 = best1;
        for (int i = -steps; i <= steps; ++i) {
            for (int j = -steps; j <= steps; ++j) {
                const double b0 = g0 + half * i / steps;
                const double b1 = g1 + half * j / steps;
                const double ll = poisson_loglik2(x, y, b0, b1);
                if (ll > best) {
                    best = ll;
                    best0 = b0;
                    best1 = b1;
                }
            }
        }
        half *= 0.25;
    }
    return {best0, best1};
}

/// Standard Normal quantile by bisection on 0.5 * erfc(-x / sqrt 2).
inline double normal_quantile(double prob) {
    double lo = -40.0;
    double hi = 40.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (0.5 * std::erfc(-mid / std::sqrt(2.0)) < prob) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Mahalanobis distances with S^{-1} formed by explicit Gauss-Jordan inversion.
inline Eigen::VectorXd mahalanobis(const Eigen::MatrixXd& x) {
    const auto n = x.rows();
    const auto p = x.cols();
    Eigen::VectorXd mean = x.colwise().mean().transpose();
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd c = x.row(i).transpose() - mean;
        s += c * c.transpose();
    }
    s /= static_cast<double>(n - 1);
    Eigen::MatrixXd aug(p, 2 * p);
    aug << s, Eigen::MatrixXd::Identity(p, p);
    for (Eigen::Index col = 0; col < p; ++col) {
        Eigen::Index piv = col;
        for (Eigen::Index r = col + 1; r < p; ++r) {
            if (std::fabs(aug(r, col)) > std::fabs(aug(piv, col))) piv = r;
        }
        aug.row(col).swap(aug.row(piv));
        aug.row(col) /= aug(col, col);
        for (Eigen::Index r = 0; r < p; ++r) {
            if (r != col) aug.row(r) -= aug(r, col) * aug.row(col);
        }
    }
    const Eigen::MatrixXd inv = aug.rightCols(p);
    Eigen::VectorXd d(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        Eigen::VectorXd c = x.row(i).transpose() - mean;
        d[i] = std::sqrt(c.dot(inv * c));
    }
    return d;
}

/// Random n x p matrix with independent N(0, 1) entries.
inline Eigen::MatrixXd random_matrix(std::mt19937_64& rng, Eigen::Index n, Eigen::Index p) {
    std::normal_distribution<double> z;
    Eigen::MatrixXd m(n, p);
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = z(rng);
    return m;
}

}  // namespace oracle
