#include "wellglm/residuals.hpp"

#include "wellglm/dataset.hpp"
#include "wellglm/error.hpp"
#include "wellglm/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace wellglm {

Eigen::VectorXd residuals(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat) {
    if (y.size() != yhat.size()) throw ShapeError("residuals: observed and predicted lengths differ");
    return y - yhat;
}

NormalFit fit_normal(const Eigen::VectorXd& eps) {
    const auto n = eps.size();
    if (n < 2) throw DegenerateDistributionError("Normal fit needs at least two residuals");
    NormalFit f;
    f.n = static_cast<long>(n);
    f.location_mu = eps.mean();
    f.dispersion_sigma = std::sqrt((eps.array() - f.location_mu).square().sum() / static_cast<double>(n));
    if (!(f.dispersion_sigma > 0.0)) throw DegenerateDistributionError("Normal fit: residuals have zero spread");
    f.se_mu = f.dispersion_sigma / std::sqrt(static_cast<double>(n));
    f.se_sigma = f.dispersion_sigma / std::sqrt(2.0 * static_cast<double>(n));
    return f;
}

std::vector<HistogramBin> histogram(const Eigen::VectorXd& eps, int bin_count) {
    if (bin_count < 1) throw ConfigError("histogram needs at least one bin");
    if (eps.size() == 0) throw EmptyDatasetError("histogram of an empty vector");
    const double lo = eps.minCoeff();
    const double hi = eps.maxCoeff();

    double mu = eps.mean();
    double sigma = std::sqrt((eps.array() - mu).square().sum() / static_cast<double>(eps.size()));
    auto density = [&](double x) {
        return sigma > 0.0 ? normal_pdf(x, mu, sigma) : std::numeric_limits<double>::quiet_NaN();
    };

    if (!(hi > lo)) {
        return {HistogramBin{lo, hi, static_cast<long>(eps.size()), density(lo)}};
    }
    const double width = (hi - lo) / bin_count;
    std::vector<HistogramBin> bins(static_cast<std::size_t>(bin_count));
    for (int b = 0; b < bin_count; ++b) {
        auto& bin = bins[static_cast<std::size_t>(b)];
        bin.left = lo + b * width;
        bin.right = b + 1 == bin_count ? hi : lo + (b + 1) * width;
        bin.normal_density = density(0.5 * (bin.left + bin.right));
    }
    for (double e : eps) {
        auto b = static_cast<int>(std::floor((e - lo) / width));
        b = std::clamp(b, 0, bin_count - 1);
        ++bins[static_cast<std::size_t>(b)].count;
    }
    return bins;
}

ResidualReport residual_report(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat, int bin_count) {
    ResidualReport r;
    r.residuals = residuals(y, yhat);
    r.fit = fit_normal(r.residuals);
    r.histogram = histogram(r.residuals, bin_count);
    return r;
}

ScatterData scatter_data(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat) {
    if (y.size() != yhat.size()) throw ShapeError("scatter: observed and predicted lengths differ");
    ScatterData s;
    s.pairs.reserve(static_cast<std::size_t>(y.size()));
    for (Eigen::Index i = 0; i < y.size(); ++i) s.pairs.emplace_back(yhat[i], y[i]);
    if (y.size() > 0) {
        s.line_min = std::min(y.minCoeff(), yhat.minCoeff());
        s.line_max = std::max(y.maxCoeff(), yhat.maxCoeff());
    }
    return s;
}

SeriesTable series_data(const std::vector<std::int64_t>& day, const Eigen::VectorXd& y,
                        const std::vector<std::string>& model_names,
                        const std::vector<Eigen::VectorXd>& yhat_per_model, std::optional<std::int64_t> day_min,
                        std::optional<std::int64_t> day_max) {
    const auto n = static_cast<Eigen::Index>(day.size());
    if (y.size() != n || model_names.size() != yhat_per_model.size()) {
        throw ShapeError("series: inputs are not aligned");
    }
    for (const auto& p : yhat_per_model) {
        if (p.size() != n) throw ShapeError("series: prediction length differs from day axis");
    }
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto d = day[static_cast<std::size_t>(i)];
        if ((!day_min || d >= *day_min) && (!day_max || d <= *day_max)) keep.push_back(i);
    }
    SeriesTable t;
    t.model_names = model_names;
    const auto rows = static_cast<Eigen::Index>(keep.size());
    const auto models = static_cast<Eigen::Index>(model_names.size());
    t.actual.resize(rows);
    t.predicted.resize(rows, models);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto i = keep[static_cast<std::size_t>(r)];
        t.day.push_back(day[static_cast<std::size_t>(i)]);
        t.actual[r] = y[i];
        for (Eigen::Index m = 0; m < models; ++m) t.predicted(r, m) = yhat_per_model[static_cast<std::size_t>(m)][i];
    }
    return t;
}

std::string SeriesTable::render_csv() const {
    std::ostringstream out;
    out << "day,actual";
    for (const auto& m : model_names) out << ',' << m;
    out << '\n';
    for (Eigen::Index r = 0; r < actual.size(); ++r) {
        out << day[static_cast<std::size_t>(r)] << ',' << format_number(actual[r]);
        for (Eigen::Index m = 0; m < predicted.cols(); ++m) out << ',' << format_number(predicted(r, m));
        out << '\n';
    }
    return out.str();
}

std::string render_histogram_csv(const std::vector<HistogramBin>& bins) {
    std::ostringstream out;
    out << "bin_left,bin_right,count,normal_density\n";
    for (const auto& b : bins) {
        out << format_number(b.left) << ',' << format_number(b.right) << ',' << b.count << ','
            << format_number(b.normal_density) << '\n';
    }
    return out.str();
}

std::string render_scatter_csv(const ScatterData& data) {
    std::ostringstream out;
    out << "predicted,actual\n";
    for (const auto& [pred, act] : data.pairs) out << format_number(pred) << ',' << format_number(act) << '\n';
    return out.str();
}

}  // namespace wellglm
