#include "wellglm/features.hpp"

#include "wellglm/error.hpp"

#include <cmath>

namespace wellglm {

void FeatureSpec::validate() const {
    if (degree != 1 && degree != 2) {
        throw ValidationError("feature degree must be 1 or 2, got " + std::to_string(degree));
    }
    if (predictor_labels.empty()) throw ValidationError("feature spec has no predictors");
    if (degree == 2 && centering_means.size() != predictor_labels.size()) {
        throw ValidationError("degree-2 feature spec needs one centering mean per predictor");
    }
    if (degree == 1 && !centering_means.empty()) {
        throw ValidationError("degree-1 feature spec must not carry centering means");
    }
    for (double m : centering_means) {
        if (!std::isfinite(m)) throw ValidationError("centering mean is not finite");
    }
}

FeatureSpec FeatureSpec::linear(std::vector<std::string> labels) {
    return {1, std::move(labels), {}};
}

FeatureSpec FeatureSpec::quadratic(std::vector<std::string> labels, std::vector<double> means) {
    return {2, std::move(labels), std::move(means)};
}

int design_width(int predictors, int degree) {
    if (degree == 1) return 1 + predictors;
    return 1 + 2 * predictors + predictors * (predictors - 1) / 2;
}

std::vector<Term> design_terms(int predictors, int degree) {
    std::vector<Term> terms;
    terms.reserve(static_cast<std::size_t>(design_width(predictors, degree)));
    terms.push_back(Term::intercept());
    for (int j = 0; j < predictors; ++j) terms.push_back(Term::main(j));
    if (degree == 2) {
        for (int j = 0; j < predictors; ++j) {
            for (int k = j + 1; k < predictors; ++k) terms.push_back(Term::interaction(j, k));
        }
        for (int j = 0; j < predictors; ++j) terms.push_back(Term::square(j));
    }
    return terms;
}

std::vector<double> compute_centering_means(const Eigen::MatrixXd& temps) {
    if (temps.rows() == 0) throw EmptyDatasetError("cannot compute centering means of an empty matrix");
    Eigen::VectorXd means = temps.colwise().mean();
    return {means.data(), means.data() + means.size()};
}

DesignMatrix expand(const Eigen::MatrixXd& temps, const FeatureSpec& spec) {
    spec.validate();
    const int p = spec.predictors();
    if (temps.cols() != p) {
        throw ShapeError("design expansion expects " + std::to_string(p) + " predictor columns, got " +
                         std::to_string(temps.cols()));
    }
    DesignMatrix d;
    d.column_terms = design_terms(p, spec.degree);
    const auto n = temps.rows();
    d.values.resize(n, static_cast<Eigen::Index>(d.column_terms.size()));

    Eigen::MatrixXd centered;
    if (spec.degree == 2) {
        Eigen::Map<const Eigen::RowVectorXd> mu(spec.centering_means.data(), p);
        centered = temps.rowwise() - mu;
    }
    for (std::size_t c = 0; c < d.column_terms.size(); ++c) {
        const auto col = static_cast<Eigen::Index>(c);
        const Term& t = d.column_terms[c];
        switch (t.kind) {
            case Term::Kind::Intercept:
                d.values.col(col).setOnes();
                break;
            case Term::Kind::Main:
                d.values.col(col) = temps.col(t.first);
                break;
            case Term::Kind::Interaction:
                d.values.col(col) = centered.col(t.first).cwiseProduct(centered.col(t.second));
                break;
            case Term::Kind::Square:
                d.values.col(col) = centered.col(t.first).cwiseAbs2();
                break;
        }
    }
    return d;
}

std::string term_label(const Term& term, const std::vector<std::string>& labels) {
    auto name = [&](int j) -> const std::string& {
        if (j < 0 || static_cast<std::size_t>(j) >= labels.size()) {
            throw ShapeError("term references predictor " + std::to_string(j) + " out of range");
        }
        return labels[static_cast<std::size_t>(j)];
    };
    switch (term.kind) {
        case Term::Kind::Intercept:
            return "Intercept";
        case Term::Kind::Main:
            return name(term.first);
        case Term::Kind::Interaction:
            return name(term.first) + "*" + name(term.second);
        case Term::Kind::Square:
            return name(term.first) + "*" + name(term.first);
    }
    return {};
}

}  // namespace wellglm
