#pragma once

#include "wellglm/dataset.hpp"
#include "wellglm/glm.hpp"
#include "wellglm/metrics.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wellglm::cli {

/// Effective settings for one invocation, after config file and flags.
struct RunConfig {
    std::string command;
    std::string input;
    std::string out_dir = "wellglm-out";
    std::string model_dir;  // defaults to <out_dir>/models
    Schema schema;

    std::string response = "both";  // fluid | gas | both
    std::string family = "both";    // normal | poisson | both
    std::string degree = "both";    // 1 | 2 | both

    CleaningConfig cleaning;
    bool screen_outliers = true;
    bool screen_responses = false;

    int top_k = 20;
    int bins = 30;
    std::optional<std::int64_t> day_min;
    std::optional<std::int64_t> day_max;
    int jobs = 1;

    // simulate
    std::uint64_t seed = 1;
    int wells = 2;
    int rows = 1500;
    int predictors = 6;
    std::string true_family = "poisson";
    int true_degree = 2;
    double gas_missing = 0.07;
    double temp_ramp = 0.05;

    // split
    double holdout_fraction = 0.2;

    std::vector<Response> responses() const;
    std::vector<ModelKind> models() const;
    std::string models_path() const;

    /// Throws ConfigError on invalid combinations.
    void validate() const;

    /// FNV-1a 64 digest of the command, every non-path setting, and the
    /// bytes of the input file (when one is given).
    std::string digest() const;
};

int cmd_simulate(const RunConfig& cfg);
int cmd_clean(const RunConfig& cfg);
int cmd_fit(const RunConfig& cfg);
int cmd_predict(const RunConfig& cfg);
int cmd_compare(const RunConfig& cfg);
int cmd_effects(const RunConfig& cfg);
int cmd_residuals(const RunConfig& cfg);
int cmd_report(const RunConfig& cfg);
int cmd_split(const RunConfig& cfg);

/// File-name-safe form of a well id ("KA01/KP01" -> "KA01_KP01").
std::string slug(const std::string& well_id);

/// "<slug>__<response>__<model>", the stem shared by every per-model file.
std::string model_stem(const std::string& well_id, Response response, ModelKind kind);

}  // namespace wellglm::cli
