#include "wellglm/simulate.hpp"

#include "wellglm/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace wellglm {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {
constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
    std::uint64_t state = seed;
    for (auto& word : s_) word = splitmix64(state);
}

Xoshiro256::result_type Xoshiro256::operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256::uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

double Xoshiro256::uniform_open() { return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53; }

double Xoshiro256::normal() {
    const double u1 = uniform_open();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::int64_t Xoshiro256::poisson(double lambda) {
    if (!(lambda >= 0.0)) throw DomainError("Poisson sampler needs a non-negative mean");
    if (lambda == 0.0) return 0;
    if (lambda < 30.0) {
        const double u = uniform();
        double p = std::exp(-lambda);
        double cdf = p;
        std::int64_t k = 0;
        while (u > cdf && k < 1000) {
            ++k;
            p *= lambda / static_cast<double>(k);
            cdf += p;
        }
        return k;
    }
    const double draw = std::floor(lambda + std::sqrt(lambda) * normal() + 0.5);
    return static_cast<std::int64_t>(std::max(0.0, draw));
}

void SimSpec::validate() const {
    if (n_rows < 1) throw SpecError("simulation needs at least one row");
    if (p < 1) throw SpecError("simulation needs at least one thermocouple");
    if (true_degree != 1 && true_degree != 2) throw SpecError("true_degree must be 1 or 2");
    const auto width = design_width(p, true_degree);
    if (true_beta.size() != width) {
        throw SpecError("true_beta has length " + std::to_string(true_beta.size()) + ", expected " +
                        std::to_string(width));
    }
    if (gas_beta.size() != 0 && gas_beta.size() != width) throw SpecError("gas_beta has the wrong length");
    if (!(response_noise_sigma >= 0.0)) throw SpecError("response_noise_sigma must be non-negative");
    if (!(gas_missing_fraction >= 0.0 && gas_missing_fraction < 1.0)) {
        throw SpecError("gas_missing_fraction must lie in [0, 1)");
    }
}

Eigen::MatrixXd simulate_temperatures(const SimSpec& spec) {
    if (spec.n_rows < 1 || spec.p < 1) throw SpecError("simulation needs positive n_rows and p");
    Xoshiro256 rng(spec.seed);
    const auto& tm = spec.temp_model;
    struct Sensor {
        double base, ramp, phase, period;
    };
    std::vector<Sensor> sensors(static_cast<std::size_t>(spec.p));
    for (auto& s : sensors) {
        s.base = tm.base + tm.sensor_spread * rng.normal();
        s.ramp = tm.ramp * (0.5 + rng.uniform());
        s.phase = 2.0 * std::numbers::pi * rng.uniform();
        s.period = 150.0 + 450.0 * rng.uniform();
    }
    Eigen::MatrixXd temps(spec.n_rows, spec.p);
    for (int i = 0; i < spec.n_rows; ++i) {
        const double t = static_cast<double>(i);
        for (int j = 0; j < spec.p; ++j) {
            const auto& s = sensors[static_cast<std::size_t>(j)];
            const double v = s.base + s.ramp * t +
                             tm.wave_amplitude * std::sin(2.0 * std::numbers::pi * t / s.period + s.phase) +
                             tm.noise_std * rng.normal();
            temps(i, j) = std::clamp(v, 0.0, 700.0);
        }
    }
    return temps;
}

FeatureSpec truth_spec(const Eigen::MatrixXd& temps, int degree) {
    std::vector<std::string> labels;
    for (Eigen::Index j = 0; j < temps.cols(); ++j) labels.push_back("THERMOCOUPLE " + std::to_string(j + 1));
    if (degree == 1) return FeatureSpec::linear(std::move(labels));
    return FeatureSpec::quadratic(std::move(labels), compute_centering_means(temps));
}

Eigen::VectorXd draw_truth(const Eigen::MatrixXd& temps, const FeatureSpec& spec, double level, double halfwidth,
                           std::uint64_t seed) {
    const auto design = expand(temps, spec);
    const auto m = design.cols();
    Xoshiro256 rng(seed);
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(m);
    for (Eigen::Index c = 1; c < m; ++c) {
        const auto col = design.values.col(c);
        const double sd = std::sqrt((col.array() - col.mean()).square().mean());
        const double u = rng.normal();
        beta[c] = sd > 0.0 ? u / sd : 0.0;
    }
    Eigen::VectorXd eta = design.values * beta;
    const double mean = eta.mean();
    const double spread = (eta.array() - mean).abs().maxCoeff();
    const double scale = spread > 0.0 ? halfwidth / spread : 0.0;
    beta *= scale;
    beta[0] = level - scale * mean;
    return beta;
}

SimulatedWell simulate_well(const SimSpec& spec) {
    spec.validate();
    SimulatedWell out;
    const Eigen::MatrixXd temps = simulate_temperatures(spec);
    auto& truth = out.truth;
    truth.family = spec.true_family;
    truth.spec = truth_spec(temps, spec.true_degree);
    truth.fluid_beta = spec.true_beta;
    truth.gas_beta = spec.gas_beta;
    const auto design = expand(temps, truth.spec);
    truth.fluid_eta = design.values * spec.true_beta;
    if (spec.gas_beta.size() > 0) truth.gas_eta = design.values * spec.gas_beta;

    // Responses draw from a stream independent of the temperature stream.
    std::uint64_t mix = spec.seed ^ 0xA5A5A5A5DEADBEEFULL;
    Xoshiro256 rng(splitmix64(mix));
    auto sample = [&](const Eigen::VectorXd& eta, const char* which, double sigma) {
        Eigen::VectorXd y(eta.size());
        for (Eigen::Index i = 0; i < eta.size(); ++i) {
            if (spec.true_family == Family::NormalIdentity) {
                y[i] = sigma > 0.0 ? eta[i] + sigma * rng.normal() : eta[i];
            } else {
                const double lambda = std::exp(eta[i]);
                if (!(lambda <= kMaxPoissonMean)) {
                    throw SpecError(std::string(which) + " truth gives exp(eta) above the sampling cap at row " +
                                    std::to_string(i) + "; use smaller coefficients");
                }
                y[i] = static_cast<double>(rng.poisson(lambda));
            }
        }
        return y;
    };

    auto& s = out.series;
    s.well_id = spec.well_id;
    s.temps = temps;
    s.temp_labels = truth.spec.predictor_labels;
    s.day.resize(static_cast<std::size_t>(spec.n_rows));
    for (int i = 0; i < spec.n_rows; ++i) s.day[static_cast<std::size_t>(i)] = spec.first_day + i;
    s.fluid_prod = sample(truth.fluid_eta, "fluid", spec.response_noise_sigma);
    if (spec.gas_beta.size() > 0) {
        s.gas_prod = sample(truth.gas_eta, "gas",
                            spec.gas_noise_sigma < 0.0 ? spec.response_noise_sigma : spec.gas_noise_sigma);
        if (spec.gas_missing_fraction > 0.0) {
            for (Eigen::Index i = 0; i < s.gas_prod.size(); ++i) {
                if (rng.uniform() < spec.gas_missing_fraction) s.gas_prod[i] = kMissing;
            }
        }
    } else {
        s.gas_prod = Eigen::VectorXd::Constant(spec.n_rows, kMissing);
    }
    return out;
}

std::string serialize_truth(const SimTruth& truth, const std::string& well_id) {
    nlohmann::json doc;
    doc["well"] = well_id;
    doc["family"] = std::string(to_string(truth.family));
    doc["degree"] = truth.spec.degree;
    doc["predictor_labels"] = truth.spec.predictor_labels;
    if (truth.spec.degree == 2) doc["centering_means"] = truth.spec.centering_means;
    std::vector<std::string> terms;
    for (const auto& t : design_terms(truth.spec.predictors(), truth.spec.degree)) {
        terms.push_back(term_label(t, truth.spec.predictor_labels));
    }
    doc["terms"] = terms;
    doc["fluid_beta"] = std::vector<double>(truth.fluid_beta.data(), truth.fluid_beta.data() + truth.fluid_beta.size());
    doc["gas_beta"] = std::vector<double>(truth.gas_beta.data(), truth.gas_beta.data() + truth.gas_beta.size());
    return doc.dump(2);
}

}  // namespace wellglm
