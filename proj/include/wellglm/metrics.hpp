#pragma once

#include "wellglm/dataset.hpp"
#include "wellglm/glm.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wellglm {

/// 1 - SSE / SST. Throws UndefinedVarianceError when y is constant and
/// ShapeError on a length mismatch.
double rsquare(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat);
/// Root average squared error.
double rase(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat);
/// Average absolute error.
double aae(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat);

struct FitMeasures {
    std::optional<double> rsquare;  // empty when y has zero variance
    double rase = 0.0;
    double aae = 0.0;
    long freq = 0;
};

FitMeasures measure_fit(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat);

/// The four-model grid in display order.
enum class ModelKind { Normal1, Normal2, Poisson1, Poisson2 };

inline constexpr ModelKind kModelGrid[] = {ModelKind::Normal1, ModelKind::Normal2, ModelKind::Poisson1,
                                           ModelKind::Poisson2};

/// "Normal-1DG", "Normal-2DG", "Poisson-1DG", "Poisson-2DG".
std::string_view to_string(ModelKind kind);
ModelKind parse_model_kind(std::string_view text);
ModelKind model_kind(Family family, int degree);
Family family_of(ModelKind kind);
int degree_of(ModelKind kind);

/// Row label in the comparison layout, e.g. "Fluid GLM OLS 2DG Poly".
std::string display_name(Response response, ModelKind kind);

struct ComparisonRow {
    std::string well_id;
    Response response = Response::Fluid;
    ModelKind model = ModelKind::Normal1;
    FitMeasures measures;
};

struct FitRecord {
    std::string well_id;
    Response response;
    ModelKind model;
    Eigen::VectorXd y;
    Eigen::VectorXd yhat;
};

/// Rows grouped per well (first-appearance order), fluid before gas, models
/// in kModelGrid order. Throws ValidationError on a duplicate cell.
struct ComparisonTable {
    std::vector<ComparisonRow> rows;

    /// Side-by-side fluid and gas blocks per well.
    std::string render_text() const;
    /// Header `well,response,model,rsquare,rase,aae,freq`.
    std::string render_csv() const;
};

ComparisonTable build_comparison(const std::vector<FitRecord>& fits);

}  // namespace wellglm
