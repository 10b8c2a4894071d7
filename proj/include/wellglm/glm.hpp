#pragma once

#include "wellglm/features.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wellglm {

enum class Family {
    NormalIdentity,  // yhat = D beta
    PoissonLog,      // yhat = exp(D beta)
};

std::string_view to_string(Family f);
/// Accepts "normal-identity" / "poisson-log"; throws ParseError otherwise.
Family parse_family(std::string_view tag);

struct FittedModel {
    Family family = Family::NormalIdentity;
    FeatureSpec spec;
    Eigen::VectorXd beta;        // intercept first, then design_terms order
    Eigen::MatrixXd covariance;  // zero rows/columns for aliased terms
    std::vector<bool> aliased;
    long n_obs = 0;
    /// OLS: SSE / (n - rank). Poisson: fixed at 1.
    double dispersion = 1.0;
    bool converged = false;
    int iterations = 0;
    double log_likelihood = 0.0;
    /// Free-form string tags carried through serialization (well, response).
    std::map<std::string, std::string> metadata;

    std::vector<Term> terms() const { return design_terms(spec.predictors(), spec.degree); }
};

struct IrlsOptions {
    double tolerance = 1e-8;  // on max |delta beta_j|
    int max_iterations = 100;
    double eta_clamp = 30.0;
};

/// Ordinary least squares. Throws EmptyDatasetError for n < 2 and
/// DegenerateDesignError when every column is dependent.
FittedModel fit_ols(const DesignMatrix& design, const Eigen::VectorXd& y, const FeatureSpec& spec);

/// Poisson log-link maximum likelihood by iteratively reweighted least
/// squares with step halving.
///
/// Starts from beta = 0 except beta_0 = ln(max(mean(y), 1e-8)). Each step
/// solves the weighted problem with w = exp(eta) and working response
/// z = eta + (y - exp(eta)) / exp(eta). A model that hits the iteration cap
/// is returned with converged == false.
///
/// Throws DomainError for negative or non-finite y, and DivergenceError
/// for an all-zero response or when eta still exceeds the clamp at the
/// final iterate.
FittedModel fit_poisson_irls(const DesignMatrix& design, const Eigen::VectorXd& y, const FeatureSpec& spec,
                             const IrlsOptions& options = {});

/// Fits `family` on `temps` expanded with `spec`.
FittedModel fit(Family family, const Eigen::MatrixXd& temps, const Eigen::VectorXd& y, const FeatureSpec& spec);

/// Linear predictor D beta for a pre-built design.
Eigen::VectorXd linear_predictor(const FittedModel& model, const DesignMatrix& design);

/// Mean response for a pre-built design. Poisson outputs are floored at the
/// smallest positive normal double so they stay strictly positive.
Eigen::VectorXd predict_design(const FittedModel& model, const DesignMatrix& design);

/// Expands `temps` with the model's stored spec (including its centering
/// means) and returns the mean response.
Eigen::VectorXd predict(const FittedModel& model, const Eigen::MatrixXd& temps);

double poisson_log_likelihood(const Eigen::VectorXd& y, const Eigen::VectorXd& eta);

struct EffectEntry {
    Term term;
    std::string label;
    double estimate = 0.0;
    double std_error = 0.0;
    double z = 0.0;
    /// Two-sided Normal tail. Underflows to 0 when log_worth exceeds ~300;
    /// log_worth is then evaluated asymptotically and stays finite.
    double p_value = 1.0;
    double log_worth = 0.0;
    bool aliased = false;
};

struct EffectSummary {
    /// Non-intercept terms by descending log_worth, ties by label.
    std::vector<EffectEntry> ranked;
    /// Retained terms whose standard error is zero; not ranked.
    std::vector<EffectEntry> degenerate;
};

/// -log10(p).
double log_worth(double p_value);

/// Per-coefficient Wald z tests.
EffectSummary wald_effects(const FittedModel& model);

/// JSON model document. Non-finite numbers are written as the strings
/// "nan", "inf" and "-inf".
std::string serialize_model(const FittedModel& model);

/// Throws ParseError for malformed text or unknown tags and ValidationError
/// for structurally inconsistent documents.
FittedModel deserialize_model(std::string_view document);

}  // namespace wellglm
