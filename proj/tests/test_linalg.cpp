#include <doctest.h>

#include "wellglm/error.hpp"
#include "wellglm/linalg.hpp"

#include "oracles.hpp"

using namespace wellglm;

TEST_SUITE("linalg") {

TEST_CASE("identity and exact-line systems") {
    auto sol = weighted_least_squares(Eigen::MatrixXd::Identity(2, 2), Eigen::Vector2d(3, 4), Eigen::Vector2d(1, 1));
    CHECK(sol.coefficients[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(sol.coefficients[1] == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(sol.dropped_columns.empty());

    Eigen::MatrixXd d(3, 2);
    d << 1, 1, 1, 2, 1, 3;
    sol = weighted_least_squares(d, Eigen::Vector3d(1, 2, 3), Eigen::Vector3d::Ones());
    CHECK(std::abs(sol.coefficients[0]) < 1e-14);
    CHECK(sol.coefficients[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("duplicated column is dropped, later column loses") {
    std::mt19937_64 rng(3);
    Eigen::MatrixXd base = oracle::random_matrix(rng, 20, 3);
    base.col(0).setOnes();
    Eigen::MatrixXd dup(20, 4);
    dup << base.leftCols(2), base.col(1), base.col(2);
    const Eigen::VectorXd y = oracle::random_matrix(rng, 20, 1).col(0);

    const auto sol = weighted_least_squares(dup, y, Eigen::VectorXd::Ones(20));
    CHECK(sol.dropped_columns == std::vector<int>{2});
    CHECK(sol.retained_columns == std::vector<int>{0, 1, 3});
    CHECK(sol.coefficients[2] == 0.0);
    CHECK(sol.aliased(2));
    CHECK(sol.xtwx_inverse.row(2).isZero(0.0));

    const Eigen::VectorXd reduced = oracle::normal_equations(base, y);
    const Eigen::VectorXd fitted_ref = base * reduced;
    const Eigen::VectorXd fitted = dup * sol.coefficients;
    CHECK((fitted - fitted_ref).cwiseAbs().maxCoeff() < 1e-10);

    // Swapping which copy comes first leaves fitted values alone.
    Eigen::MatrixXd swapped(20, 4);
    swapped << base.col(0), base.col(2), base.col(1), base.col(1);
    const auto sol2 = weighted_least_squares(swapped, y, Eigen::VectorXd::Ones(20));
    CHECK(sol2.dropped_columns == std::vector<int>{3});
    CHECK(((swapped * sol2.coefficients) - fitted).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("weighted solve matches the normal-equations oracle") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(0.1, 3.0);
    for (int rep = 0; rep < 25; ++rep) {
        Eigen::MatrixXd d = oracle::random_matrix(rng, 40, 5);
        d.col(0).setOnes();
        const Eigen::VectorXd y = oracle::random_matrix(rng, 40, 1).col(0);
        Eigen::VectorXd w(40);
        for (auto& v : w) v = unif(rng);
        const Eigen::VectorXd root = w.cwiseSqrt();
        const Eigen::VectorXd ref = oracle::normal_equations(root.asDiagonal() * d, root.cwiseProduct(y));
        const auto sol = weighted_least_squares(d, y, w);
        CHECK((sol.coefficients - ref).cwiseAbs().maxCoeff() < 1e-10);
        const Eigen::MatrixXd xtwx = d.transpose() * w.asDiagonal() * d;
        CHECK((xtwx * sol.xtwx_inverse - Eigen::MatrixXd::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("zero weights and saturation") {
    Eigen::MatrixXd d(3, 2);
    d << 1, 0, 1, 1, 1, 2;
    CHECK_THROWS_AS(weighted_least_squares(d, Eigen::Vector3d(1, 2, 3), Eigen::Vector3d::Zero()),
                    DegenerateWeightsError);
    CHECK_THROWS_AS(weighted_least_squares(d, Eigen::Vector3d(1, 2, 3), Eigen::Vector3d(1, -1, 1)), DomainError);

    Eigen::MatrixXd wide(2, 3);
    wide << 1, 2, 3, 1, 5, 7;
    const auto sol = weighted_least_squares(wide, Eigen::Vector2d(1, 2), Eigen::Vector2d(1, 1));
    CHECK(sol.rank() == 2);
    CHECK(sol.dropped_columns == std::vector<int>{2});
    CHECK(((wide * sol.coefficients) - Eigen::Vector2d(1, 2)).norm() < 1e-12);
    CHECK(sol.saturated);

    // One zero-weight row leaves a single effective observation for two columns.
    const auto sat = weighted_least_squares(d.topRows(2), Eigen::Vector2d(1, 2), Eigen::Vector2d(1, 0));
    CHECK(sat.saturated);
}

TEST_CASE("solve_spd") {
    const Eigen::Vector3d b(1, -2, 3);
    CHECK(solve_spd(Eigen::Matrix3d::Identity(), b) == b);
    Eigen::Matrix2d a;
    a << 4, 0, 0, 9;
    const auto x = solve_spd(a, Eigen::Vector2d(8, 27));
    CHECK(x[0] == doctest::Approx(2.0));
    CHECK(x[1] == doctest::Approx(3.0));

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const Eigen::MatrixXd m = oracle::random_matrix(rng, 5, 5);
        const Eigen::MatrixXd spd = m.transpose() * m + Eigen::MatrixXd::Identity(5, 5);
        const Eigen::VectorXd rhs = oracle::random_matrix(rng, 5, 1).col(0);
        const auto sol = solve_spd(spd, rhs);
        CHECK((spd * sol - rhs).norm() / rhs.norm() <= 1e-10);
    }
    Eigen::Matrix2d indefinite;
    indefinite << 1, 2, 2, 1;
    CHECK_THROWS_AS(solve_spd(indefinite, Eigen::Vector2d(1, 1)), NotPositiveDefiniteError);
}

}
