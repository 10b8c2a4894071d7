#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wellglm {

/// y - yhat, elementwise.
Eigen::VectorXd residuals(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat);

/// Maximum-likelihood Normal fit of a residual vector with asymptotic
/// standard errors se_mu = sigma / sqrt(n), se_sigma = sigma / sqrt(2n).
struct NormalFit {
    double location_mu = 0.0;
    double dispersion_sigma = 0.0;
    double se_mu = 0.0;
    double se_sigma = 0.0;
    long n = 0;
};

/// Throws DegenerateDistributionError for n < 2 or zero spread.
NormalFit fit_normal(const Eigen::VectorXd& eps);

struct HistogramBin {
    double left = 0.0;
    double right = 0.0;
    long count = 0;
    /// Fitted Normal density at the bin midpoint; NaN when the residuals
    /// have no spread.
    double normal_density = 0.0;
};

/// Equal-width bins over [min, max]; the top edge is closed. A zero-width
/// range collapses to a single bin.
std::vector<HistogramBin> histogram(const Eigen::VectorXd& eps, int bin_count);

struct ResidualReport {
    Eigen::VectorXd residuals;
    NormalFit fit;
    std::vector<HistogramBin> histogram;
};

ResidualReport residual_report(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat, int bin_count);

struct ScatterData {
    std::vector<std::pair<double, double>> pairs;  // (predicted, actual)
    double line_min = 0.0;
    double line_max = 0.0;
};

ScatterData scatter_data(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat);

struct SeriesTable {
    std::vector<std::string> model_names;
    std::vector<std::int64_t> day;
    Eigen::VectorXd actual;
    Eigen::MatrixXd predicted;  // rows x models

    std::string render_csv() const;
};

/// Production-vs-day table with one predicted column per model, optionally
/// restricted to days in [day_min, day_max].
SeriesTable series_data(const std::vector<std::int64_t>& day, const Eigen::VectorXd& y,
                        const std::vector<std::string>& model_names,
                        const std::vector<Eigen::VectorXd>& yhat_per_model,
                        std::optional<std::int64_t> day_min = std::nullopt,
                        std::optional<std::int64_t> day_max = std::nullopt);

std::string render_histogram_csv(const std::vector<HistogramBin>& bins);
std::string render_scatter_csv(const ScatterData& data);

}  // namespace wellglm
