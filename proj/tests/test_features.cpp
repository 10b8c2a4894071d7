#include <doctest.h>

#include "wellglm/error.hpp"
#include "wellglm/features.hpp"

#include "oracles.hpp"

using namespace wellglm;

TEST_SUITE("features") {

TEST_CASE("centering means") {
    Eigen::MatrixXd a(3, 1);
    a << 1, 2, 3;
    CHECK(compute_centering_means(a) == std::vector<double>{2.0});
    Eigen::MatrixXd b(2, 2);
    b << 1, 3, 2, 4;
    CHECK(compute_centering_means(b) == std::vector<double>{1.5, 3.5});
    Eigen::MatrixXd c = Eigen::MatrixXd::Constant(2, 1, 5.0);
    CHECK(compute_centering_means(c) == std::vector<double>{5.0});
    CHECK_THROWS_AS(compute_centering_means(Eigen::MatrixXd(0, 2)), EmptyDatasetError);
}

TEST_CASE("design widths") {
    CHECK(design_width(1, 1) == 2);
    CHECK(design_width(2, 2) == 6);
    CHECK(design_width(17, 2) == 171);
    CHECK(design_width(20, 2) == 231);
    for (int p = 1; p < 25; ++p) {
        CHECK(design_terms(p, 2).size() == static_cast<std::size_t>(1 + p + p * (p - 1) / 2 + p));
        CHECK(design_terms(p, 1).size() == static_cast<std::size_t>(1 + p));
    }
}

TEST_CASE("hand expansion of one row") {
    Eigen::MatrixXd x(1, 2);
    x << 3, 5;
    const auto d = expand(x, FeatureSpec::quadratic({"a", "b"}, {2, 4}));
    REQUIRE(d.cols() == 6);
    Eigen::RowVectorXd expected(6);
    expected << 1, 3, 5, 1, 1, 1;
    CHECK(d.values.row(0) == expected);
    CHECK(d.column_terms[3] == Term::interaction(0, 1));
    CHECK(d.column_terms[4] == Term::square(0));

    const auto lin = expand(Eigen::MatrixXd::Constant(4, 1, 2.0), FeatureSpec::linear({"x"}));
    CHECK(lin.cols() == 2);
}

TEST_CASE("degree-2 columns follow their definitions") {
    std::mt19937_64 rng(11);
    const Eigen::MatrixXd x = oracle::random_matrix(rng, 30, 4) * 50.0 + Eigen::MatrixXd::Constant(30, 4, 400.0);
    const auto means = compute_centering_means(x);
    const auto d2 = expand(x, FeatureSpec::quadratic({"a", "b", "c", "d"}, means));
    const auto d1 = expand(x, FeatureSpec::linear({"a", "b", "c", "d"}));
    CHECK(d2.values.leftCols(5) == d1.values);
    CHECK((d2.values.col(0).array() == 1.0).all());
    for (std::size_t c = 0; c < d2.column_terms.size(); ++c) {
        const auto& t = d2.column_terms[c];
        const auto col = d2.values.col(static_cast<Eigen::Index>(c));
        if (t.kind == Term::Kind::Interaction) {
            Eigen::VectorXd want = (x.col(t.first).array() - means[t.first]) * (x.col(t.second).array() - means[t.second]);
            CHECK((col - want).cwiseAbs().maxCoeff() == 0.0);
            CHECK(t.first < t.second);
        } else if (t.kind == Term::Kind::Square) {
            CHECK(col.minCoeff() >= 0.0);
        }
    }
}

TEST_CASE("expand rejects mismatched specs") {
    CHECK_THROWS_AS(expand(Eigen::MatrixXd::Zero(3, 2), FeatureSpec::linear({"a"})), ShapeError);
    CHECK_THROWS_AS(expand(Eigen::MatrixXd::Zero(3, 2), FeatureSpec::quadratic({"a", "b"}, {})), ValidationError);
    FeatureSpec bad{3, {"a"}, {}};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("term labels") {
    std::vector<std::string> labels;
    for (int i = 1; i <= 20; ++i) labels.push_back("THERMOCOUPLE " + std::to_string(i));
    CHECK(term_label(Term::interaction(7, 11), labels) == "THERMOCOUPLE 8*THERMOCOUPLE 12");
    CHECK(term_label(Term::square(5), labels) == "THERMOCOUPLE 6*THERMOCOUPLE 6");
    CHECK(term_label(Term::main(0), labels) == "THERMOCOUPLE 1");
    CHECK(term_label(Term::intercept(), labels) == "Intercept");
}

}
