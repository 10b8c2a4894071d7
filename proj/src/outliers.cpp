#include "wellglm/outliers.hpp"

#include "wellglm/error.hpp"
#include "wellglm/special.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace wellglm {

long OutlierScreen::flagged() const {
    return static_cast<long>(std::count(flags.begin(), flags.end(), true));
}

OutlierScreen mahalanobis(const Eigen::MatrixXd& data) {
    const auto n = data.rows();
    const auto p = data.cols();
    if (p == 0) throw ShapeError("Mahalanobis screen needs at least one column");
    if (n <= p) {
        throw ShapeError("Mahalanobis screen needs more rows than columns (n=" + std::to_string(n) +
                         ", p=" + std::to_string(p) + ")");
    }
    if (!data.allFinite()) throw DomainError("Mahalanobis screen input contains missing values");

    OutlierScreen s;
    s.center = data.colwise().mean().transpose();
    const Eigen::MatrixXd centered = data.rowwise() - s.center.transpose();
    s.covariance = centered.transpose() * centered / static_cast<double>(n - 1);

    // Reciprocal condition estimate from the Cholesky factor's diagonal.
    auto usable = [](const Eigen::LLT<Eigen::MatrixXd>& llt) {
        if (llt.info() != Eigen::Success) return false;
        const auto diag = llt.matrixLLT().diagonal();
        return diag.minCoeff() > 1e-7 * diag.maxCoeff();
    };
    Eigen::LLT<Eigen::MatrixXd> llt(s.covariance);
    if (!usable(llt)) {
        const double trace = s.covariance.trace();
        Eigen::MatrixXd ridged = s.covariance;
        ridged.diagonal().array() += 1e-8 * trace / static_cast<double>(p);
        llt.compute(ridged);
        s.regularized = true;
        if (!(trace > 0.0) || llt.info() != Eigen::Success) {
            std::string cols;
            for (Eigen::Index j = 0; j < p; ++j) {
                if (!(s.covariance(j, j) > 0.0)) cols += (cols.empty() ? "" : ", ") + std::to_string(j);
            }
            throw RankError("Mahalanobis covariance is singular after regularization; constant columns: " +
                            (cols.empty() ? std::string("none") : cols));
        }
    }
    const Eigen::MatrixXd whitened = llt.matrixL().solve(centered.transpose());
    s.distances = whitened.colwise().norm().transpose();
    return s;
}

double mahalanobis_cutoff(double alpha, int dof) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("outlier alpha must lie in (0, 1)");
    return std::sqrt(chi_square_quantile(1.0 - alpha, dof));
}

const std::vector<bool>& flag_outliers(OutlierScreen& screen, double alpha) {
    screen.cutoff = mahalanobis_cutoff(alpha, static_cast<int>(screen.center.size()));
    screen.flags.assign(static_cast<std::size_t>(screen.distances.size()), false);
    for (Eigen::Index i = 0; i < screen.distances.size(); ++i) {
        screen.flags[static_cast<std::size_t>(i)] = screen.distances[i] > screen.cutoff;
    }
    return screen.flags;
}

}  // namespace wellglm
