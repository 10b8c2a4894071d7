#include <doctest.h>

#include "wellglm/error.hpp"
#include "wellglm/outliers.hpp"
#include "wellglm/special.hpp"

#include "oracles.hpp"

#include <algorithm>

using namespace wellglm;

TEST_SUITE("outliers") {

TEST_CASE("univariate distance is the z-score") {
    const Eigen::VectorXd x = (Eigen::VectorXd(5) << 1, 2, 4, 8, 16).finished();
    const auto s = mahalanobis(x);
    const double mean = x.mean();
    const double sd = std::sqrt((x.array() - mean).square().sum() / 4.0);
    for (Eigen::Index i = 0; i < 5; ++i) CHECK(s.distances[i] == doctest::Approx(std::abs(x[i] - mean) / sd));
}

TEST_CASE("the far corner point has the largest distance") {
    Eigen::MatrixXd x(5, 2);
    x << 0, 0, 0, 2, 2, 0, 2, 2, 10, 10;
    const auto s = mahalanobis(x);
    const auto ref = oracle::mahalanobis(x);
    CHECK((s.distances - ref).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::Index arg = 0;
    s.distances.maxCoeff(&arg);
    CHECK(arg == 4);
    for (Eigen::Index i = 0; i < 4; ++i) CHECK(s.distances[i] < s.distances[4]);
}

TEST_CASE("sum of squared distances identity") {
    std::mt19937_64 rng(21);
    for (int rep = 0; rep < 10; ++rep) {
        const Eigen::MatrixXd x = oracle::random_matrix(rng, 60, 4);
        const auto s = mahalanobis(x);
        CHECK(s.distances.squaredNorm() == doctest::Approx(4.0 * 59.0).epsilon(1e-12));
        CHECK(s.covariance.isApprox(s.covariance.transpose()));
        CHECK((s.distances - oracle::mahalanobis(x)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("ranking survives per-column rescaling") {
    std::mt19937_64 rng(22);
    Eigen::MatrixXd x = oracle::random_matrix(rng, 40, 3);
    const auto base = mahalanobis(x).distances;
    x.col(0) *= 1000.0;
    x.col(2) *= 0.001;
    const auto scaled = mahalanobis(x).distances;
    std::vector<int> a(40), b(40);
    for (int i = 0; i < 40; ++i) a[i] = b[i] = i;
    std::sort(a.begin(), a.end(), [&](int i, int j) { return base[i] < base[j]; });
    std::sort(b.begin(), b.end(), [&](int i, int j) { return scaled[i] < scaled[j]; });
    CHECK(a == b);
}

TEST_CASE("flagging and cutoffs") {
    CHECK(mahalanobis_cutoff(0.05, 1) == doctest::Approx(oracle::normal_quantile(0.975)).epsilon(1e-10));
    CHECK(std::abs(mahalanobis_cutoff(0.05, 1) - 1.959964) < 1e-5);

    std::mt19937_64 rng(23);
    const Eigen::MatrixXd x = oracle::random_matrix(rng, 200, 2);
    auto s = mahalanobis(x);
    flag_outliers(s, 1.0 - 1e-12);
    CHECK(s.flagged() == 200);
    flag_outliers(s, 1e-12);
    CHECK(s.flagged() == 0);
    flag_outliers(s, 0.2);
    for (Eigen::Index i = 0; i < 200; ++i) CHECK(s.flags[i] == (s.distances[i] > s.cutoff));
    CHECK_THROWS_AS(flag_outliers(s, 0.0), ConfigError);
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(mahalanobis(Eigen::MatrixXd::Zero(2, 2)), ShapeError);

    // Exactly collinear columns are rescued by the ridge.
    std::mt19937_64 rng(24);
    Eigen::MatrixXd x(30, 2);
    x.col(0) = oracle::random_matrix(rng, 30, 1).col(0);
    x.col(1) = 2.0 * x.col(0);
    const auto s = mahalanobis(x);
    CHECK(s.regularized);
    CHECK(s.distances.allFinite());

    CHECK_THROWS_WITH_AS(mahalanobis(Eigen::MatrixXd::Constant(10, 2, 3.0)), doctest::Contains("0, 1"), RankError);
}

}
