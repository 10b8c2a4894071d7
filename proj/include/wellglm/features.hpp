#pragma once

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace wellglm {

/// One column of a polynomial design.
struct Term {
    enum class Kind { Intercept, Main, Interaction, Square };

    Kind kind = Kind::Intercept;
    int first = -1;   // predictor index for Main/Interaction/Square
    int second = -1;  // Interaction only, first < second

    static Term intercept() { return {}; }
    static Term main(int j) { return {Kind::Main, j, -1}; }
    static Term interaction(int j, int k) { return {Kind::Interaction, j, k}; }
    static Term square(int j) { return {Kind::Square, j, -1}; }

    friend bool operator==(const Term&, const Term&) = default;
};

/// Degree-1 (intercept + raw main effects) or degree-2 (additionally
/// centered two-way interactions and centered squares) basis description.
///
/// Centering means live here so a stored model reproduces its basis on new
/// data without the training rows.
struct FeatureSpec {
    int degree = 1;
    std::vector<std::string> predictor_labels;
    /// One mean per predictor when degree == 2, empty otherwise.
    std::vector<double> centering_means;

    int predictors() const { return static_cast<int>(predictor_labels.size()); }

    /// Throws ValidationError on an invalid degree or means/labels mismatch.
    void validate() const;

    static FeatureSpec linear(std::vector<std::string> labels);
    static FeatureSpec quadratic(std::vector<std::string> labels, std::vector<double> means);
};

struct DesignMatrix {
    Eigen::MatrixXd values;
    std::vector<Term> column_terms;

    Eigen::Index rows() const { return values.rows(); }
    Eigen::Index cols() const { return values.cols(); }
};

/// Column layout: intercept, mains in label order, interactions in
/// lexicographic (j, k) order, squares in label order.
std::vector<Term> design_terms(int predictors, int degree);

/// 1 + p for degree 1, 1 + 2p + p(p-1)/2 for degree 2.
int design_width(int predictors, int degree);

/// Column means of the fitting rows. Throws EmptyDatasetError for n == 0.
std::vector<double> compute_centering_means(const Eigen::MatrixXd& temps);

/// Materializes the basis. Throws ShapeError when the column count differs
/// from the spec's predictor count.
DesignMatrix expand(const Eigen::MatrixXd& temps, const FeatureSpec& spec);

/// "Intercept", "<label>", "<a>*<b>", or "<a>*<a>".
std::string term_label(const Term& term, const std::vector<std::string>& labels);

}  // namespace wellglm
