#include "commands.hpp"

#include "wellglm/error.hpp"
#include "wellglm/features.hpp"
#include "wellglm/outliers.hpp"
#include "wellglm/residuals.hpp"
#include "wellglm/simulate.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace wellglm::cli {

namespace {

constexpr int kFileFormatVersion = 1;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + path.string() + "'");
    out << content;
}

std::string header_line(const RunConfig& cfg) {
    return "# wellglm format=" + std::to_string(kFileFormatVersion) + " command=" + cfg.command +
           " config=" + cfg.digest() + "\n";
}

ojson header_json(const RunConfig& cfg) {
    return ojson{{"generator", "wellglm"},
                 {"format_version", kFileFormatVersion},
                 {"command", cfg.command},
                 {"config", cfg.digest()}};
}

std::vector<WellSeries> load_input(const RunConfig& cfg) {
    if (cfg.input.empty()) throw ConfigError(cfg.command + " needs --input");
    auto wells = load_wells_file(cfg.input, cfg.schema);
    for (const auto& w : wells) w.validate();
    if (wells.empty()) throw EmptyDatasetError("input '" + cfg.input + "' contains no rows");
    return wells;
}

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

/// The (well, response, model) cells that have data, in display order.
struct Cell {
    const WellSeries* well;
    Response response;
    ModelKind kind;
};

std::vector<Cell> grid(const RunConfig& cfg, const std::vector<WellSeries>& wells) {
    std::vector<Cell> cells;
    for (const auto& w : wells) {
        for (auto r : cfg.responses()) {
            for (auto k : cfg.models()) cells.push_back({&w, r, k});
        }
    }
    return cells;
}

fs::path model_path(const RunConfig& cfg, const Cell& c) {
    return fs::path(cfg.models_path()) / (model_stem(c.well->well_id, c.response, c.kind) + ".json");
}

/// Loads every model of the grid that exists on disk.
std::vector<std::pair<Cell, FittedModel>> load_models(const RunConfig& cfg, const std::vector<WellSeries>& wells) {
    std::vector<std::pair<Cell, FittedModel>> out;
    for (const auto& c : grid(cfg, wells)) {
        const auto path = model_path(cfg, c);
        if (!fs::exists(path)) continue;
        auto model = deserialize_model(read_file(path.string()));
        if (model.family != family_of(c.kind) || model.spec.degree != degree_of(c.kind)) {
            throw ValidationError("model file '" + path.string() + "' does not hold a " +
                                  std::string(to_string(c.kind)) + " model");
        }
        out.emplace_back(c, std::move(model));
    }
    if (out.empty()) throw ConfigError("no model documents found under '" + cfg.models_path() + "'");
    return out;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

std::vector<Response> RunConfig::responses() const {
    if (response == "fluid") return {Response::Fluid};
    if (response == "gas") return {Response::Gas};
    return {Response::Fluid, Response::Gas};
}

std::vector<ModelKind> RunConfig::models() const {
    std::vector<ModelKind> out;
    for (auto k : kModelGrid) {
        const bool fam_ok = family == "both" || (family == "normal") == (family_of(k) == Family::NormalIdentity);
        const bool deg_ok = degree == "both" || std::to_string(degree_of(k)) == degree;
        if (fam_ok && deg_ok) out.push_back(k);
    }
    return out;
}

std::string RunConfig::models_path() const {
    return model_dir.empty() ? (fs::path(out_dir) / "models").string() : model_dir;
}

void RunConfig::validate() const {
    cleaning.validate();
    if (top_k < 0) throw ConfigError("--top-k must be >= 0");
    if (bins < 1) throw ConfigError("--bins must be >= 1");
    if (jobs < 1) throw ConfigError("--jobs must be >= 1");
    if (wells < 1 || rows < 2 || predictors < 1) throw ConfigError("simulation sizes must be positive");
    if (true_degree != 1 && true_degree != 2) throw ConfigError("--true-degree must be 1 or 2");
    if (true_family != "normal" && true_family != "poisson") throw ConfigError("--true-family must be normal or poisson");
    if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0)) throw ConfigError("--holdout-fraction must lie in (0, 1)");
    if (!(gas_missing >= 0.0 && gas_missing < 1.0)) throw ConfigError("--gas-missing must lie in [0, 1)");
    if (day_min && day_max && *day_min > *day_max) throw ConfigError("--day-min exceeds --day-max");
    if (models().empty()) throw ConfigError("model grid is empty");
    if (!input.empty() && !fs::exists(input)) throw ConfigError("input '" + input + "' does not exist");
}

std::string RunConfig::digest() const {
    std::ostringstream s;
    s << command << '|' << response << '|' << family << '|' << degree << '|' << format_number(cleaning.temp_cap)
      << '|' << format_number(cleaning.outlier_alpha) << '|' << cleaning.drop_missing << '|' << screen_outliers
      << '|' << screen_responses << '|' << top_k << '|' << bins << '|' << (day_min ? std::to_string(*day_min) : "")
      << '|' << (day_max ? std::to_string(*day_max) : "") << '|' << seed << '|' << wells << '|' << rows << '|'
      << predictors << '|' << true_family << '|' << true_degree << '|' << format_number(gas_missing) << '|'
      << format_number(temp_ramp) << '|' << format_number(holdout_fraction) << '|' << schema.well_column << '|'
      << schema.day_column << '|' << schema.fluid_column << '|' << schema.gas_column << '|' << schema.temp_prefix;
    for (const auto& c : schema.temp_columns) s << '|' << c;
    std::uint64_t h = fnv1a(s.str());
    if (!input.empty() && fs::exists(input)) h = fnv1a(read_file(input), h);
    return "fnv1a64:" + hex64(h);
}

std::string slug(const std::string& well_id) {
    std::string out;
    for (char c : well_id) {
        const bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
        out += ok ? c : '_';
    }
    return out;
}

std::string model_stem(const std::string& well_id, Response response, ModelKind kind) {
    return slug(well_id) + "__" + std::string(to_string(response)) + "__" + std::string(to_string(kind));
}

int cmd_simulate(const RunConfig& cfg) {
    const bool poisson = cfg.true_family == "poisson";
    std::vector<WellSeries> wells;
    ojson truths = ojson::array();
    std::uint64_t state = cfg.seed;
    for (int i = 0; i < cfg.wells; ++i) {
        SimSpec s;
        s.seed = splitmix64(state);
        s.n_rows = cfg.rows;
        s.p = cfg.predictors;
        s.true_family = poisson ? Family::PoissonLog : Family::NormalIdentity;
        s.true_degree = cfg.true_degree;
        s.temp_model.ramp = cfg.temp_ramp;
        s.gas_missing_fraction = cfg.gas_missing;
        char id[32];
        std::snprintf(id, sizeof id, "KA%02d/KP%02d", i + 1, i + 1);
        s.well_id = id;

        const auto temps = simulate_temperatures(s);
        const auto spec = truth_spec(temps, s.true_degree);
        if (poisson) {
            s.true_beta = draw_truth(temps, spec, std::log(30.0), 1.2, s.seed ^ 0x1ULL);
            s.gas_beta = draw_truth(temps, spec, std::log(6000.0), 1.0, s.seed ^ 0x2ULL);
        } else {
            s.true_beta = draw_truth(temps, spec, 30.0, 20.0, s.seed ^ 0x1ULL);
            s.gas_beta = draw_truth(temps, spec, 6000.0, 3000.0, s.seed ^ 0x2ULL);
            s.response_noise_sigma = 4.0;
            s.gas_noise_sigma = 600.0;
        }
        auto sim = simulate_well(s);
        auto truth = ojson::parse(serialize_truth(sim.truth, s.well_id));
        truth["seed"] = s.seed;
        truths.push_back(truth);
        wells.push_back(std::move(sim.series));
    }
    std::ostringstream data;
    data << header_line(cfg);
    write_wells(data, wells);
    const fs::path out(cfg.out_dir);
    write_file(out / "wells.csv", data.str());
    ojson doc{{"header", header_json(cfg)}, {"wells", truths}};
    write_file(out / "truth.json", doc.dump(2) + "\n");
    std::cout << "simulate: wells=" << cfg.wells << " rows=" << cfg.rows << " out=" << (out / "wells.csv").string()
              << "\n";
    return 0;
}

int cmd_clean(const RunConfig& cfg) {
    const auto wells = load_input(cfg);
    std::vector<WellSeries> cleaned;
    ojson per_well = ojson::array();
    std::ostringstream flagged;
    flagged << header_line(cfg) << "well,day,distance,cutoff\n";
    std::size_t total_capped = 0;
    long total_dropped = 0;
    long total_flagged = 0;

    for (const auto& w : wells) {
        auto capped = cap_temperatures(w, cfg.cleaning.temp_cap);
        WellSeries s = std::move(capped.series);
        const long rows_in = static_cast<long>(s.rows());
        long dropped_missing = 0;
        if (cfg.cleaning.drop_missing) {
            std::vector<bool> keep(static_cast<std::size_t>(s.rows()));
            for (Eigen::Index i = 0; i < s.rows(); ++i) keep[static_cast<std::size_t>(i)] = !s.temps.row(i).hasNaN();
            s = select_rows(s, keep);
            dropped_missing = rows_in - static_cast<long>(s.rows());
        }

        ojson screen_info{{"performed", false}};
        long flagged_here = 0;
        if (cfg.screen_outliers) {
            // Rows that can enter the screen: complete temperatures, plus
            // complete responses when those are screened too.
            std::vector<Eigen::Index> idx;
            for (Eigen::Index i = 0; i < s.rows(); ++i) {
                bool ok = !s.temps.row(i).hasNaN();
                if (cfg.screen_responses) ok = ok && !std::isnan(s.fluid_prod[i]) && !std::isnan(s.gas_prod[i]);
                if (ok) idx.push_back(i);
            }
            const auto cols = s.temps.cols() + (cfg.screen_responses ? 2 : 0);
            if (static_cast<Eigen::Index>(idx.size()) > cols) {
                Eigen::MatrixXd block(static_cast<Eigen::Index>(idx.size()), cols);
                for (std::size_t r = 0; r < idx.size(); ++r) {
                    const auto i = idx[r];
                    const auto rr = static_cast<Eigen::Index>(r);
                    block.row(rr).head(s.temps.cols()) = s.temps.row(i);
                    if (cfg.screen_responses) {
                        block(rr, s.temps.cols()) = s.fluid_prod[i];
                        block(rr, s.temps.cols() + 1) = s.gas_prod[i];
                    }
                }
                auto screen = mahalanobis(block);
                flag_outliers(screen, cfg.cleaning.outlier_alpha);
                std::vector<bool> keep(static_cast<std::size_t>(s.rows()), true);
                for (std::size_t r = 0; r < idx.size(); ++r) {
                    if (!screen.flags[r]) continue;
                    const auto i = idx[r];
                    keep[static_cast<std::size_t>(i)] = false;
                    flagged << csv_escape(s.well_id) << ',' << s.day[static_cast<std::size_t>(i)] << ','
                            << format_number(screen.distances[static_cast<Eigen::Index>(r)]) << ','
                            << format_number(screen.cutoff) << '\n';
                }
                flagged_here = screen.flagged();
                s = select_rows(s, keep);
                screen_info = ojson{{"performed", true},
                                    {"columns", cols},
                                    {"rows_screened", idx.size()},
                                    {"cutoff", screen.cutoff},
                                    {"regularized", screen.regularized}};
            }
        }

        auto complete = [&](Response r) {
            long n = 0;
            const auto& y = s.response(r);
            for (Eigen::Index i = 0; i < s.rows(); ++i) {
                if (!std::isnan(y[i]) && y[i] >= 0.0 && !s.temps.row(i).hasNaN()) ++n;
            }
            return n;
        };
        per_well.push_back(ojson{{"well", s.well_id},
                                 {"rows_in", rows_in},
                                 {"cells_capped", capped.cells_modified},
                                 {"rows_dropped_missing_temperature", dropped_missing},
                                 {"outliers_flagged", flagged_here},
                                 {"rows_out", s.rows()},
                                 {"rows_complete_fluid", complete(Response::Fluid)},
                                 {"rows_complete_gas", complete(Response::Gas)},
                                 {"mahalanobis", screen_info}});
        total_capped += capped.cells_modified;
        total_dropped += dropped_missing + flagged_here;
        total_flagged += flagged_here;
        cleaned.push_back(std::move(s));
    }

    const fs::path out(cfg.out_dir);
    std::ostringstream data;
    data << header_line(cfg);
    write_wells(data, cleaned);
    write_file(out / "cleaned.csv", data.str());
    write_file(out / "outliers.csv", flagged.str());
    ojson summary{{"header", header_json(cfg)},
                  {"temp_cap", cfg.cleaning.temp_cap},
                  {"outlier_alpha", cfg.cleaning.outlier_alpha},
                  {"cells_capped", total_capped},
                  {"rows_dropped", total_dropped},
                  {"outliers_flagged", total_flagged},
                  {"wells", per_well}};
    write_file(out / "cleaning_summary.json", summary.dump(2) + "\n");
    std::cout << "clean: cells_capped=" << total_capped << " rows_dropped=" << total_dropped
              << " outliers_flagged=" << total_flagged << "\n";
    return 0;
}

int cmd_fit(const RunConfig& cfg) {
    const auto wells = load_input(cfg);
    const auto cells = grid(cfg, wells);

    struct Job {
        Cell cell;
        std::optional<WellSeries> data;
    };
    std::vector<Job> jobs;
    for (const auto& c : cells) {
        Job j{c, std::nullopt};
        try {
            j.data = drop_incomplete_rows(*c.well, c.response);
        } catch (const EmptyDatasetError& e) {
            std::cerr << "fit: skipping " << model_stem(c.well->well_id, c.response, c.kind) << ": " << e.what()
                      << "\n";
        }
        jobs.push_back(std::move(j));
    }

    auto run = [&](const Job& job) {
        const auto& d = *job.data;
        const int degree = degree_of(job.cell.kind);
        const auto spec = degree == 1 ? FeatureSpec::linear(d.temp_labels)
                                      : FeatureSpec::quadratic(d.temp_labels, compute_centering_means(d.temps));
        auto model = fit(family_of(job.cell.kind), d.temps, d.response(job.cell.response), spec);
        model.metadata["well"] = d.well_id;
        model.metadata["response"] = std::string(to_string(job.cell.response));
        model.metadata["model"] = std::string(to_string(job.cell.kind));
        model.metadata["command"] = cfg.command;
        model.metadata["config"] = cfg.digest();
        return model;
    };

    // Fits are independent; results are written afterwards in grid order.
    std::vector<std::optional<FittedModel>> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    for (std::size_t start = 0; start < jobs.size(); start += static_cast<std::size_t>(cfg.jobs)) {
        const std::size_t end = std::min(jobs.size(), start + static_cast<std::size_t>(cfg.jobs));
        std::vector<std::future<void>> batch;
        for (std::size_t i = start; i < end; ++i) {
            if (!jobs[i].data) continue;
            batch.push_back(std::async(cfg.jobs > 1 ? std::launch::async : std::launch::deferred, [&, i] {
                try {
                    results[i] = run(jobs[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }));
        }
        for (auto& f : batch) f.get();
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }

    int written = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (!results[i]) continue;
        const auto& m = *results[i];
        if (!m.converged) {
            std::cerr << "fit: warning: " << model_stem(jobs[i].cell.well->well_id, jobs[i].cell.response,
                                                        jobs[i].cell.kind)
                      << " did not converge in " << m.iterations << " iterations\n";
        }
        write_file(model_path(cfg, jobs[i].cell), serialize_model(m));
        ++written;
    }
    std::cout << "fit: models=" << written << " dir=" << cfg.models_path() << "\n";
    return 0;
}

int cmd_predict(const RunConfig& cfg) {
    const auto wells = load_input(cfg);
    const auto models = load_models(cfg, wells);
    const fs::path out = fs::path(cfg.out_dir) / "predictions";
    for (const auto& [cell, model] : models) {
        const auto& w = *cell.well;
        std::vector<bool> keep(static_cast<std::size_t>(w.rows()));
        for (Eigen::Index i = 0; i < w.rows(); ++i) keep[static_cast<std::size_t>(i)] = !w.temps.row(i).hasNaN();
        const auto rows = select_rows(w, keep);
        const Eigen::VectorXd yhat = rows.rows() > 0 ? predict(model, rows.temps) : Eigen::VectorXd();
        const auto& y = rows.response(cell.response);
        std::ostringstream csv;
        csv << header_line(cfg) << "well,day,actual,predicted\n";
        for (Eigen::Index i = 0; i < rows.rows(); ++i) {
            csv << csv_escape(w.well_id) << ',' << rows.day[static_cast<std::size_t>(i)] << ','
                << format_number(y[i]) << ',' << format_number(yhat[i]) << '\n';
        }
        write_file(out / (model_stem(w.well_id, cell.response, cell.kind) + ".csv"), csv.str());
    }
    std::cout << "predict: models=" << models.size() << " dir=" << out.string() << "\n";
    return 0;
}

int cmd_compare(const RunConfig& cfg) {
    const auto wells = load_input(cfg);
    const auto models = load_models(cfg, wells);
    std::vector<FitRecord> fits;
    for (const auto& [cell, model] : models) {
        const auto data = drop_incomplete_rows(*cell.well, cell.response);
        fits.push_back({data.well_id, cell.response, cell.kind, data.response(cell.response),
                        predict(model, data.temps)});
    }
    const auto table = build_comparison(fits);
    const fs::path out(cfg.out_dir);
    write_file(out / "comparison.txt", header_line(cfg) + table.render_text());
    write_file(out / "comparison.csv", header_line(cfg) + table.render_csv());
    std::cout << "compare: rows=" << table.rows.size() << " out=" << (out / "comparison.txt").string() << "\n";
    return 0;
}

int cmd_effects(const RunConfig& cfg) {
    const auto wells = load_input(cfg);
    const auto models = load_models(cfg, wells);
    const fs::path out(cfg.out_dir);
    std::ostringstream text;
    text << header_line(cfg);
    bool first = true;
    for (const auto& [cell, model] : models) {
        const auto effects = wald_effects(model);
        const std::size_t limit =
            cfg.top_k == 0 ? effects.ranked.size() : std::min(effects.ranked.size(), static_cast<std::size_t>(cfg.top_k));
        std::ostringstream csv;
        csv << header_line(cfg) << "rank,term,estimate,std_error,z,p_value,log_worth,aliased\n";
        for (std::size_t i = 0; i < limit; ++i) {
            const auto& e = effects.ranked[i];
            csv << i + 1 << ',' << csv_escape(e.label) << ',' << format_number(e.estimate) << ','
                << format_number(e.std_error) << ',' << format_number(e.z) << ',' << format_number(e.p_value) << ','
                << format_number(e.log_worth) << ',' << (e.aliased ? "true" : "false") << '\n';
        }
        for (const auto& e : effects.degenerate) {
            csv << "degenerate," << csv_escape(e.label) << ',' << format_number(e.estimate) << ",0,,,,false\n";
        }
        const auto stem = model_stem(cell.well->well_id, cell.response, cell.kind);
        write_file(out / "effects" / (stem + ".csv"), csv.str());

        if (!first) text << '\n';
        first = false;
        text << "Effect Summary (\"" << cell.well->well_id << "\", " << display_name(cell.response, cell.kind)
             << ")\n";
        char line[256];
        std::snprintf(line, sizeof line, "%-44s %12s %12s\n", "Source", "LogWorth", "PValue");
        text << line;
        for (std::size_t i = 0; i < limit; ++i) {
            const auto& e = effects.ranked[i];
            std::snprintf(line, sizeof line, "%-44s %12.3f %12.5g\n", e.label.c_str(), e.log_worth, e.p_value);
            text << line;
        }
    }
    write_file(out / "effects.txt", text.str());
    std::cout << "effects: models=" << models.size() << " top_k=" << cfg.top_k << "\n";
    return 0;
}

int cmd_residuals(const RunConfig& cfg) {
    const auto wells = load_input(cfg);
    const auto models = load_models(cfg, wells);
    const fs::path out = fs::path(cfg.out_dir) / "residuals";

    struct SeriesAcc {
        const WellSeries* well;
        Response response;
        std::vector<std::string> names;
        std::vector<Eigen::VectorXd> yhat;
    };
    std::vector<SeriesAcc> series;

    for (const auto& [cell, model] : models) {
        const auto data = drop_incomplete_rows(*cell.well, cell.response);
        const Eigen::VectorXd& y = data.response(cell.response);
        const Eigen::VectorXd yhat = predict(model, data.temps);
        const auto report = residual_report(y, yhat, cfg.bins);
        const auto stem = model_stem(cell.well->well_id, cell.response, cell.kind);

        ojson doc{{"header", header_json(cfg)},
                  {"well", cell.well->well_id},
                  {"response", std::string(to_string(cell.response))},
                  {"model", std::string(to_string(cell.kind))},
                  {"n", report.fit.n},
                  {"location_mu", report.fit.location_mu},
                  {"dispersion_sigma", report.fit.dispersion_sigma},
                  {"se_mu", report.fit.se_mu},
                  {"se_sigma", report.fit.se_sigma},
                  {"sigma_estimator", "mle"},
                  {"bins", report.histogram.size()}};
        write_file(out / (stem + "_report.json"), doc.dump(2) + "\n");
        write_file(out / (stem + "_histogram.csv"), header_line(cfg) + render_histogram_csv(report.histogram));
        const auto scatter = scatter_data(y, yhat);
        write_file(out / (stem + "_scatter.csv"), header_line(cfg) + "# identity_line " +
                                                      format_number(scatter.line_min) + " " +
                                                      format_number(scatter.line_max) + "\n" +
                                                      render_scatter_csv(scatter));

        // Series tables are aligned on the response's complete rows.
        SeriesAcc* acc = nullptr;
        for (auto& s : series) {
            if (s.well == cell.well && s.response == cell.response) acc = &s;
        }
        if (!acc) {
            series.push_back({cell.well, cell.response, {}, {}});
            acc = &series.back();
        }
        acc->names.emplace_back(to_string(cell.kind));
        acc->yhat.push_back(yhat);
    }
    for (const auto& s : series) {
        const auto data = drop_incomplete_rows(*s.well, s.response);
        const auto table =
            series_data(data.day, data.response(s.response), s.names, s.yhat, cfg.day_min, cfg.day_max);
        write_file(out / ("series__" + slug(s.well->well_id) + "__" + std::string(to_string(s.response)) + ".csv"),
                   header_line(cfg) + table.render_csv());
    }
    std::cout << "residuals: models=" << models.size() << " dir=" << out.string() << "\n";
    return 0;
}

int cmd_report(const RunConfig& cfg) {
    cmd_compare(cfg);
    cmd_effects(cfg);
    cmd_residuals(cfg);
    return 0;
}

int cmd_split(const RunConfig& cfg) {
    const auto wells = load_input(cfg);
    std::vector<WellSeries> train;
    std::vector<WellSeries> holdout;
    for (const auto& w : wells) {
        const auto n = static_cast<std::size_t>(w.rows());
        const auto n_hold = static_cast<std::size_t>(std::floor(static_cast<double>(n) * cfg.holdout_fraction));
        std::vector<bool> keep_train(n);
        for (std::size_t i = 0; i < n; ++i) keep_train[i] = i < n - n_hold;
        std::vector<bool> keep_hold(n);
        for (std::size_t i = 0; i < n; ++i) keep_hold[i] = !keep_train[i];
        train.push_back(select_rows(w, keep_train));
        holdout.push_back(select_rows(w, keep_hold));
    }
    const fs::path out(cfg.out_dir);
    std::ostringstream a, b;
    a << header_line(cfg);
    write_wells(a, train);
    b << header_line(cfg);
    write_wells(b, holdout);
    write_file(out / "train.csv", a.str());
    write_file(out / "holdout.csv", b.str());
    std::cout << "split: wells=" << wells.size() << " holdout_fraction=" << cfg.holdout_fraction << "\n";
    return 0;
}

}  // namespace wellglm::cli
