#include "commands.hpp"

#include "wellglm/error.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>

namespace {

using wellglm::cli::RunConfig;

/// One line on stderr, key=value pairs first so scripts can split on spaces.
int report_error(const char* category, const std::string& code, const std::string& message, int status) {
    std::string flat = message;
    for (auto& c : flat) {
        if (c == '\n' || c == '\r') c = ' ';
    }
    std::cerr << "error: category=" << category << " code=" << code << " exit=" << status << " message=" << flat
              << "\n";
    return status;
}

void add_shared_options(CLI::App& app, RunConfig& cfg, std::int64_t& day_min, std::int64_t& day_max,
                        std::vector<std::string>& temp_columns) {
    app.add_option("--input", cfg.input, "Input data file (CSV or TSV)");
    app.add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();
    app.add_option("--model-dir", cfg.model_dir, "Model documents directory (default <out-dir>/models)");
    app.add_option("--response", cfg.response, "Response to model")
        ->check(CLI::IsMember({"fluid", "gas", "both"}))
        ->capture_default_str();
    app.add_option("--family", cfg.family, "Model family")
        ->check(CLI::IsMember({"normal", "poisson", "both"}))
        ->capture_default_str();
    app.add_option("--degree", cfg.degree, "Polynomial degree")
        ->check(CLI::IsMember({"1", "2", "both"}))
        ->capture_default_str();
    app.add_option("--temp-cap", cfg.cleaning.temp_cap, "Temperature cap (deg C)")->capture_default_str();
    app.add_option("--outlier-alpha", cfg.cleaning.outlier_alpha, "Mahalanobis screen significance level")
        ->capture_default_str();
    app.add_flag("!--keep-missing", cfg.cleaning.drop_missing, "Keep rows with missing temperatures");
    app.add_flag("!--no-screen", cfg.screen_outliers, "Skip the Mahalanobis outlier screen");
    app.add_flag("--screen-responses", cfg.screen_responses, "Include both responses in the outlier screen");
    app.add_option("--top-k", cfg.top_k, "Effects kept per model (0 keeps all)")->capture_default_str();
    app.add_option("--bins", cfg.bins, "Residual histogram bins")->capture_default_str();
    app.add_option("--day-min", day_min, "First day of the series window");
    app.add_option("--day-max", day_max, "Last day of the series window");
    app.add_option("--jobs", cfg.jobs, "Concurrent fits")->capture_default_str();

    app.add_option("--well-column", cfg.schema.well_column, "Well id column")->capture_default_str();
    app.add_option("--day-column", cfg.schema.day_column, "Day column")->capture_default_str();
    app.add_option("--fluid-column", cfg.schema.fluid_column, "Fluid production column")->capture_default_str();
    app.add_option("--gas-column", cfg.schema.gas_column, "Gas production column")->capture_default_str();
    app.add_option("--temp-prefix", cfg.schema.temp_prefix, "Prefix of thermocouple columns")
        ->capture_default_str();
    app.add_option("--temp-columns", temp_columns, "Explicit thermocouple columns")->delimiter(',');

    app.add_option("--seed", cfg.seed, "Simulation seed")->capture_default_str();
    app.add_option("--wells", cfg.wells, "Simulated wells")->capture_default_str();
    app.add_option("--rows", cfg.rows, "Rows per simulated well")->capture_default_str();
    app.add_option("--predictors", cfg.predictors, "Thermocouples per simulated well")->capture_default_str();
    app.add_option("--true-family", cfg.true_family, "Simulation truth family")
        ->check(CLI::IsMember({"normal", "poisson"}))
        ->capture_default_str();
    app.add_option("--true-degree", cfg.true_degree, "Simulation truth degree")->capture_default_str();
    app.add_option("--gas-missing", cfg.gas_missing, "Fraction of gas cells left blank")->capture_default_str();
    app.add_option("--temp-ramp", cfg.temp_ramp, "Temperature drift per day (negative for a declining well)")
        ->capture_default_str();
    app.add_option("--holdout-fraction", cfg.holdout_fraction, "Trailing fraction held out by split")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    std::int64_t day_min = 0;
    std::int64_t day_max = 0;
    std::vector<std::string> temp_columns;

    CLI::App app{"wellglm: GLM production forecasting from thermocouple data"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Configuration file (TOML or INI); flags override it");
    add_shared_options(app, cfg, day_min, day_max, temp_columns);

    using Handler = std::function<int(const RunConfig&)>;
    const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> commands = {
        {"simulate", {"Generate synthetic wells and their ground truth", wellglm::cli::cmd_simulate}},
        {"clean", {"Cap temperatures, drop incomplete rows, screen outliers", wellglm::cli::cmd_clean}},
        {"fit", {"Fit the model grid for every well and response", wellglm::cli::cmd_fit}},
        {"predict", {"Write per-row predictions for every model", wellglm::cli::cmd_predict}},
        {"compare", {"Measures-of-fit comparison table", wellglm::cli::cmd_compare}},
        {"effects", {"Ranked LogWorth tables", wellglm::cli::cmd_effects}},
        {"residuals", {"Residual distribution, histogram, scatter and series data", wellglm::cli::cmd_residuals}},
        {"report", {"compare + effects + residuals", wellglm::cli::cmd_report}},
        {"split", {"Hold out the trailing days of every well", wellglm::cli::cmd_split}},
    };
    std::map<CLI::App*, Handler> handlers;
    for (const auto& [name, entry] : commands) {
        auto* sub = app.add_subcommand(name, entry.first);
        sub->fallthrough();
        handlers[sub] = entry.second;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("config", "usage", e.what(), 2);
    }

    try {
        auto* chosen = app.get_subcommands().front();
        cfg.command = chosen->get_name();
        if (app.count("--day-min")) cfg.day_min = day_min;
        if (app.count("--day-max")) cfg.day_max = day_max;
        cfg.schema.temp_columns = temp_columns;
        cfg.validate();
        return handlers.at(chosen)(cfg);
    } catch (const wellglm::Error& e) {
        switch (e.category()) {
        case wellglm::ErrorCategory::Config:
            return report_error("config", e.code(), e.what(), 2);
        case wellglm::ErrorCategory::Data:
            return report_error("data", e.code(), e.what(), 3);
        case wellglm::ErrorCategory::Numerical:
            return report_error("numerical", e.code(), e.what(), 4);
        }
    } catch (const std::filesystem::filesystem_error& e) {
        return report_error("config", "filesystem", e.what(), 2);
    } catch (const std::exception& e) {
        return report_error("internal", "unexpected", e.what(), 1);
    }
    return 1;
}
