#pragma once

#include "wellglm/dataset.hpp"
#include "wellglm/features.hpp"
#include "wellglm/glm.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace wellglm {

/// xoshiro256** (Blackman & Vigna) seeded through SplitMix64. Fixed by
/// constants so that seeded datasets are reproducible across platforms and
/// language ports.
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256(std::uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return ~result_type{0}; }
    result_type operator()();

    /// [0, 1) with 53 random bits.
    double uniform();
    /// (0, 1).
    double uniform_open();
    /// Standard Normal via Box-Muller; consumes two uniforms per call.
    double normal();
    /// Inversion for lambda < 30, rounded Normal approximation above.
    std::int64_t poisson(double lambda);

private:
    std::uint64_t s_[4];
};

/// SplitMix64 step; advances `state` and returns the mixed output.
std::uint64_t splitmix64(std::uint64_t& state);

struct TemperatureModel {
    double base = 380.0;        // deg C
    double ramp = 0.05;         // deg C per day, may be negative
    double noise_std = 6.0;     // deg C
    double sensor_spread = 60.0;  // std of per-sensor base offsets
    double wave_amplitude = 45.0;  // slow per-sensor oscillation
};

struct SimSpec {
    std::uint64_t seed = 1;
    int n_rows = 1000;
    int p = 4;
    Family true_family = Family::PoissonLog;
    int true_degree = 1;
    /// Fluid truth; length design_width(p, true_degree).
    Eigen::VectorXd true_beta;
    /// Gas truth; when empty the gas column is left missing.
    Eigen::VectorXd gas_beta;
    TemperatureModel temp_model;
    double response_noise_sigma = 1.0;  // Normal family only
    /// Gas noise for the Normal family; negative means "same as fluid".
    double gas_noise_sigma = -1.0;
    /// Fraction of gas cells blanked at random, to mimic per-response gaps.
    double gas_missing_fraction = 0.0;
    std::string well_id = "SIM01";
    std::int64_t first_day = 1;

    void validate() const;
};

/// Upper bound on exp(eta) accepted for Poisson sampling.
inline constexpr double kMaxPoissonMean = 1e8;

struct SimTruth {
    Family family = Family::PoissonLog;
    /// Degree-2 truths centre on the means of the generated temperatures.
    FeatureSpec spec;
    Eigen::VectorXd fluid_beta;
    Eigen::VectorXd gas_beta;
    Eigen::VectorXd fluid_eta;
    Eigen::VectorXd gas_eta;
};

struct SimulatedWell {
    WellSeries series;
    SimTruth truth;
};

/// Temperature block only; the same draw simulate_well uses.
Eigen::MatrixXd simulate_temperatures(const SimSpec& spec);

/// Deterministic given spec.seed. Temperatures are smooth ramps plus a
/// per-sensor oscillation and noise, clipped to [0, 700]. Throws SpecError
/// for invalid specs or when exp(eta) exceeds kMaxPoissonMean.
SimulatedWell simulate_well(const SimSpec& spec);

/// Draws a coefficient vector for the design of `temps` under `spec`:
/// random directions, rescaled so that eta has mean `level` and maximum
/// absolute deviation `halfwidth` over the rows.
Eigen::VectorXd draw_truth(const Eigen::MatrixXd& temps, const FeatureSpec& spec, double level, double halfwidth,
                           std::uint64_t seed);

/// The feature spec simulate_well uses for a given temperature block.
FeatureSpec truth_spec(const Eigen::MatrixXd& temps, int degree);

std::string serialize_truth(const SimTruth& truth, const std::string& well_id);

}  // namespace wellglm
