#include <doctest.h>

#include "wellglm/error.hpp"
#include "wellglm/residuals.hpp"
#include "wellglm/simulate.hpp"

#include <cmath>
#include <numbers>

using namespace wellglm;

TEST_SUITE("residuals") {

TEST_CASE("residual vector") {
    CHECK(residuals(Eigen::Vector2d(5, 3), Eigen::Vector2d(4, 4)) == Eigen::Vector2d(1, -1));
    CHECK(residuals(Eigen::Vector2d(5, 3), Eigen::Vector2d(5, 3)).isZero(0.0));
    CHECK_THROWS_AS(residuals(Eigen::Vector2d(5, 3), Eigen::Vector3d(5, 3, 1)), ShapeError);
}

TEST_CASE("two-point Normal fit") {
    const auto f = fit_normal(Eigen::Vector2d(-1, 1));
    CHECK(f.location_mu == 0.0);
    CHECK(f.dispersion_sigma == 1.0);
    CHECK(f.se_mu == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(f.se_sigma == doctest::Approx(0.5));
    CHECK_THROWS_AS(fit_normal(Eigen::VectorXd::Ones(1)), DegenerateDistributionError);
    CHECK_THROWS_AS(fit_normal(Eigen::VectorXd::Ones(5)), DegenerateDistributionError);
}

TEST_CASE("seeded Normal sample recovers its parameters") {
    Xoshiro256 rng(12345);
    Eigen::VectorXd eps(10000);
    for (auto& e : eps) e = 2.0 * rng.normal();
    const auto f = fit_normal(eps);
    CHECK(std::abs(f.location_mu) < 0.1);
    CHECK(std::abs(f.dispersion_sigma - 2.0) < 0.1);
    CHECK(f.se_mu * std::sqrt(10000.0) == doctest::Approx(f.dispersion_sigma).epsilon(1e-15));
    CHECK(f.se_sigma * std::sqrt(20000.0) == doctest::Approx(f.dispersion_sigma).epsilon(1e-15));

    const auto bins = histogram(eps, 20);
    long total = 0;
    for (const auto& b : bins) total += b.count;
    CHECK(total == 10000);
    for (std::size_t i = 1; i < bins.size(); ++i) CHECK(bins[i].left == bins[i - 1].right);
}

TEST_CASE("histogram bins") {
    const auto bins = histogram(Eigen::Vector4d(0, 1, 2, 3), 2);
    REQUIRE(bins.size() == 2);
    CHECK(bins[0].count == 2);
    CHECK(bins[1].count == 2);
    CHECK(bins[0].left == 0.0);
    CHECK(bins[1].right == 3.0);

    // Symmetric data: the middle bin is centred on the mean, so its overlay
    // sits at the Normal mode.
    const Eigen::VectorXd sym = (Eigen::VectorXd(5) << -2, -1, 0, 1, 2).finished();
    const auto mid = histogram(sym, 3)[1];
    const double sigma = std::sqrt(2.0);
    CHECK(mid.normal_density == doctest::Approx(1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi))));

    const auto flat = histogram(Eigen::VectorXd::Constant(7, 3.0), 10);
    REQUIRE(flat.size() == 1);
    CHECK(flat[0].count == 7);
    CHECK(std::isnan(flat[0].normal_density));
    CHECK_THROWS_AS(histogram(sym, 0), ConfigError);
}

TEST_CASE("scatter and series tables") {
    const Eigen::Vector3d y(1, 2, 3);
    const auto s = scatter_data(y, y);
    for (const auto& [pred, act] : s.pairs) CHECK(pred == act);
    CHECK(s.line_min == 1.0);
    CHECK(s.line_max == 3.0);

    const std::vector<std::int64_t> days{10, 11, 12};
    const auto t = series_data(days, y, {"A", "B"}, {y, y * 2.0});
    CHECK(t.day.size() == 3);
    CHECK(t.predicted.cols() == 2);
    const auto csv = t.render_csv();
    CHECK(csv.rfind("day,actual,A,B\n10,1,1,2\n", 0) == 0);

    std::vector<std::int64_t> long_days;
    for (std::int64_t d = 1300; d < 1700; ++d) long_days.push_back(d);
    const Eigen::VectorXd ly = Eigen::VectorXd::LinSpaced(400, 0, 1);
    const auto window = series_data(long_days, ly, {"m"}, {ly}, 1350, 1600);
    CHECK(window.day.front() == 1350);
    CHECK(window.day.back() == 1600);
    CHECK(window.day.size() == 251);

    CHECK_THROWS_AS(series_data(days, y, {"A"}, {Eigen::Vector2d(1, 2)}), ShapeError);
}

}
