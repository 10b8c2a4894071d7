#include "wellglm/glm.hpp"

#include "wellglm/error.hpp"
#include "wellglm/linalg.hpp"
#include "wellglm/special.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace wellglm {

using nlohmann::json;

std::string_view to_string(Family f) {
    return f == Family::NormalIdentity ? "normal-identity" : "poisson-log";
}

Family parse_family(std::string_view tag) {
    if (tag == "normal-identity") return Family::NormalIdentity;
    if (tag == "poisson-log") return Family::PoissonLog;
    throw ParseError("unknown family tag '" + std::string(tag) + "'");
}

namespace {

void check_design(const DesignMatrix& design, const Eigen::VectorXd& y, const FeatureSpec& spec) {
    spec.validate();
    if (design.rows() != y.size()) throw ShapeError("design rows and response length differ");
    if (design.cols() != design_width(spec.predictors(), spec.degree)) {
        throw ShapeError("design width does not match the feature spec");
    }
}

std::vector<bool> aliased_mask(const WeightedLSSolution& sol, Eigen::Index m) {
    std::vector<bool> mask(static_cast<std::size_t>(m), false);
    for (int c : sol.dropped_columns) mask[static_cast<std::size_t>(c)] = true;
    return mask;
}

}  // namespace

FittedModel fit_ols(const DesignMatrix& design, const Eigen::VectorXd& y, const FeatureSpec& spec) {
    check_design(design, y, spec);
    const auto n = y.size();
    if (n < 2) throw EmptyDatasetError("OLS needs at least two observations");
    if (!y.allFinite()) throw DomainError("OLS response contains non-finite values");

    const auto sol = weighted_least_squares(design.values, y, Eigen::VectorXd::Ones(n));
    if (sol.rank() == 0) throw DegenerateDesignError("OLS: every design column was dropped");

    FittedModel model;
    model.family = Family::NormalIdentity;
    model.spec = spec;
    model.beta = sol.coefficients;
    model.aliased = aliased_mask(sol, design.cols());
    model.n_obs = static_cast<long>(n);

    const Eigen::VectorXd resid = y - design.values * model.beta;
    const double sse = resid.squaredNorm();
    const auto dof = n - sol.rank();
    model.dispersion = dof > 0 ? sse / static_cast<double>(dof) : 0.0;
    model.covariance = model.dispersion * sol.xtwx_inverse;
    model.converged = true;
    model.iterations = 1;
    const double sigma2 = sse / static_cast<double>(n);
    model.log_likelihood = sigma2 > 0.0
                               ? -0.5 * static_cast<double>(n) * (std::log(2.0 * std::numbers::pi * sigma2) + 1.0)
                               : std::numeric_limits<double>::infinity();
    return model;
}

double poisson_log_likelihood(const Eigen::VectorXd& y, const Eigen::VectorXd& eta) {
    double ll = 0.0;
    for (Eigen::Index i = 0; i < y.size(); ++i) {
        ll += y[i] * eta[i] - std::exp(eta[i]) - std::lgamma(y[i] + 1.0);
    }
    return ll;
}

FittedModel fit_poisson_irls(const DesignMatrix& design, const Eigen::VectorXd& y, const FeatureSpec& spec,
                             const IrlsOptions& options) {
    check_design(design, y, spec);
    const auto n = y.size();
    if (n == 0) throw EmptyDatasetError("Poisson fit on an empty dataset");
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!std::isfinite(y[i]) || y[i] < 0.0) {
            throw DomainError("Poisson response at row " + std::to_string(i) + " is negative or not finite");
        }
    }
    if ((y.array() == 0.0).all()) {
        throw DivergenceError("Poisson response is identically zero; the MLE lies on the boundary (lambda -> 0)");
    }

    const auto& d = design.values;
    const auto m = d.cols();
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);
    beta[0] = std::log(std::max(y.mean(), 1e-8));

    auto working_step = [&](const Eigen::VectorXd& b) {
        const Eigen::VectorXd eta = (d * b).cwiseMin(options.eta_clamp);
        const Eigen::VectorXd mu = eta.array().exp().matrix();
        const Eigen::VectorXd z = eta + (y - mu).cwiseQuotient(mu);
        return weighted_least_squares(d, z, mu);
    };

    FittedModel model;
    model.family = Family::PoissonLog;
    model.spec = spec;
    model.n_obs = static_cast<long>(n);
    model.dispersion = 1.0;

    double ll = poisson_log_likelihood(y, d * beta);
    int iter = 0;
    bool converged = false;
    while (iter < options.max_iterations) {
        ++iter;
        Eigen::VectorXd next = working_step(beta).coefficients;
        double next_ll = poisson_log_likelihood(y, d * next);
        // Step halving guards against overshoot from a poor starting point.
        for (int half = 0; half < 30 && !(std::isfinite(next_ll) && next_ll >= ll - 1e-10 * std::abs(ll));
             ++half) {
            next = 0.5 * (beta + next);
            next_ll = poisson_log_likelihood(y, d * next);
        }
        if (!next.allFinite()) throw DivergenceError("IRLS produced non-finite coefficients");
        const double delta = (next - beta).cwiseAbs().maxCoeff();
        beta = next;
        ll = next_ll;
        if (delta < options.tolerance) {
            converged = true;
            break;
        }
    }

    const Eigen::VectorXd eta = d * beta;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (!(eta[i] <= options.eta_clamp)) {
            throw DivergenceError("IRLS diverged: linear predictor at row " + std::to_string(i) + " is " +
                                  std::to_string(eta[i]) + ", above the overflow guard");
        }
    }
    const auto final_sol = working_step(beta);
    model.beta = beta;
    model.aliased = aliased_mask(final_sol, m);
    model.covariance = final_sol.xtwx_inverse;
    model.converged = converged;
    model.iterations = iter;
    model.log_likelihood = ll;
    return model;
}

FittedModel fit(Family family, const Eigen::MatrixXd& temps, const Eigen::VectorXd& y, const FeatureSpec& spec) {
    const auto design = expand(temps, spec);
    return family == Family::NormalIdentity ? fit_ols(design, y, spec) : fit_poisson_irls(design, y, spec);
}

Eigen::VectorXd linear_predictor(const FittedModel& model, const DesignMatrix& design) {
    if (design.cols() != model.beta.size()) throw ShapeError("design width does not match model coefficients");
    return design.values * model.beta;
}

Eigen::VectorXd predict_design(const FittedModel& model, const DesignMatrix& design) {
    Eigen::VectorXd eta = linear_predictor(model, design);
    if (model.family == Family::NormalIdentity) return eta;
    const double smallest = std::numeric_limits<double>::min();
    return eta.unaryExpr([smallest](double e) { return std::max(std::exp(e), smallest); });
}

Eigen::VectorXd predict(const FittedModel& model, const Eigen::MatrixXd& temps) {
    return predict_design(model, expand(temps, model.spec));
}

double log_worth(double p_value) { return -std::log10(p_value); }

EffectSummary wald_effects(const FittedModel& model) {
    EffectSummary out;
    const auto terms = model.terms();
    for (std::size_t c = 1; c < terms.size(); ++c) {
        const auto ci = static_cast<Eigen::Index>(c);
        EffectEntry e;
        e.term = terms[c];
        e.label = term_label(e.term, model.spec.predictor_labels);
        e.estimate = model.beta[ci];
        if (model.aliased[c]) {
            e.aliased = true;
            out.ranked.push_back(std::move(e));
            continue;
        }
        const double var = model.covariance(ci, ci);
        e.std_error = var > 0.0 ? std::sqrt(var) : 0.0;
        if (!(e.std_error > 0.0) || !std::isfinite(e.std_error)) {
            out.degenerate.push_back(std::move(e));
            continue;
        }
        e.z = e.estimate / e.std_error;
        e.p_value = std::erfc(std::abs(e.z) / std::numbers::sqrt2);
        e.log_worth = e.p_value > 1e-300 ? log_worth(e.p_value) : two_sided_normal_log_worth(e.z);
        if (e.p_value >= 1.0) {
            e.p_value = 1.0;
            e.log_worth = 0.0;
        }
        out.ranked.push_back(std::move(e));
    }
    std::stable_sort(out.ranked.begin(), out.ranked.end(), [](const EffectEntry& a, const EffectEntry& b) {
        if (a.log_worth != b.log_worth) return a.log_worth > b.log_worth;
        return a.label < b.label;
    });
    return out;
}

namespace {

constexpr int kModelFormatVersion = 1;

json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double read_number(const json& j, const std::string& where) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
        if (s == "inf") return std::numeric_limits<double>::infinity();
        if (s == "-inf") return -std::numeric_limits<double>::infinity();
    }
    throw ParseError("model document: " + where + " is not a number");
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("model document: missing field '" + where + key + "'");
    return *it;
}

}  // namespace

std::string serialize_model(const FittedModel& model) {
    nlohmann::ordered_json doc;
    doc["format"] = "wellglm-model";
    doc["format_version"] = kModelFormatVersion;
    doc["metadata"] = model.metadata;
    doc["family"] = std::string(to_string(model.family));
    nlohmann::ordered_json spec;
    spec["degree"] = model.spec.degree;
    spec["predictor_labels"] = model.spec.predictor_labels;
    if (model.spec.degree == 2) {
        json means = json::array();
        for (double mu : model.spec.centering_means) means.push_back(number(mu));
        spec["centering_means"] = means;
    }
    doc["spec"] = spec;
    json terms = json::array();
    for (const auto& t : model.terms()) terms.push_back(term_label(t, model.spec.predictor_labels));
    doc["terms"] = terms;
    json beta = json::array();
    for (double b : model.beta) beta.push_back(number(b));
    doc["beta"] = beta;
    doc["aliased"] = model.aliased;
    json cov = json::array();
    for (Eigen::Index i = 0; i < model.covariance.rows(); ++i) {
        for (Eigen::Index j = 0; j < model.covariance.cols(); ++j) cov.push_back(number(model.covariance(i, j)));
    }
    doc["covariance"] = cov;
    doc["n_obs"] = model.n_obs;
    doc["dispersion"] = number(model.dispersion);
    doc["convergence"] = {{"converged", model.converged}, {"iterations", model.iterations}};
    doc["log_likelihood"] = number(model.log_likelihood);
    doc["residual_sigma_estimator"] = "mle";
    return doc.dump(2) + "\n";
}

FittedModel deserialize_model(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document.begin(), document.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw ParseError("model document: top level is not an object");
        if (field(doc, "format", "").get<std::string>() != "wellglm-model") {
            throw ParseError("model document: unexpected format tag");
        }
        if (field(doc, "format_version", "").get<int>() != kModelFormatVersion) {
            throw ParseError("model document: unsupported format_version");
        }
        FittedModel m;
        m.family = parse_family(field(doc, "family", "").get<std::string>());
        if (auto it = doc.find("metadata"); it != doc.end()) {
            m.metadata = it->get<std::map<std::string, std::string>>();
        }
        const auto& spec = field(doc, "spec", "");
        m.spec.degree = field(spec, "degree", "spec.").get<int>();
        m.spec.predictor_labels = field(spec, "predictor_labels", "spec.").get<std::vector<std::string>>();
        if (auto it = spec.find("centering_means"); it != spec.end()) {
            for (const auto& v : *it) m.spec.centering_means.push_back(read_number(v, "spec.centering_means"));
        }
        m.spec.validate();

        const auto terms = m.terms();
        const auto width = static_cast<Eigen::Index>(terms.size());
        const auto labels = field(doc, "terms", "").get<std::vector<std::string>>();
        if (labels.size() != terms.size()) throw ValidationError("model document: term list has wrong length");
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (labels[i] != term_label(terms[i], m.spec.predictor_labels)) {
                throw ValidationError("model document: term " + std::to_string(i) + " is '" + labels[i] +
                                      "', expected '" + term_label(terms[i], m.spec.predictor_labels) + "'");
            }
        }
        const auto& beta = field(doc, "beta", "");
        if (static_cast<Eigen::Index>(beta.size()) != width) {
            throw ValidationError("model document: beta has wrong length");
        }
        m.beta.resize(width);
        for (Eigen::Index i = 0; i < width; ++i) m.beta[i] = read_number(beta[static_cast<std::size_t>(i)], "beta");
        m.aliased = field(doc, "aliased", "").get<std::vector<bool>>();
        if (static_cast<Eigen::Index>(m.aliased.size()) != width) {
            throw ValidationError("model document: aliased mask has wrong length");
        }
        const auto& cov = field(doc, "covariance", "");
        if (static_cast<Eigen::Index>(cov.size()) != width * width) {
            throw ValidationError("model document: covariance has wrong size");
        }
        m.covariance.resize(width, width);
        for (Eigen::Index i = 0; i < width; ++i) {
            for (Eigen::Index j = 0; j < width; ++j) {
                m.covariance(i, j) = read_number(cov[static_cast<std::size_t>(i * width + j)], "covariance");
            }
        }
        m.n_obs = field(doc, "n_obs", "").get<long>();
        m.dispersion = read_number(field(doc, "dispersion", ""), "dispersion");
        const auto& conv = field(doc, "convergence", "");
        m.converged = field(conv, "converged", "convergence.").get<bool>();
        m.iterations = field(conv, "iterations", "convergence.").get<int>();
        m.log_likelihood = read_number(field(doc, "log_likelihood", ""), "log_likelihood");
        return m;
    } catch (const json::exception& e) {
        throw ParseError(std::string("model document: ") + e.what());
    }
}

}  // namespace wellglm
