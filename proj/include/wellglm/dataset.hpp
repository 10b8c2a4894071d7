#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace wellglm {

/// Missing cells are stored as quiet NaN in both the temperature block and
/// the response vectors.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

enum class Response { Fluid, Gas };

std::string_view to_string(Response r);
Response parse_response(std::string_view text);

/// One well's time-ordered sensor and production record.
///
/// Rows are sorted by strictly increasing `day`. Temperatures are in deg C,
/// production rates in m3/day.
struct WellSeries {
    std::string well_id;
    std::vector<std::int64_t> day;
    Eigen::MatrixXd temps;  // n x p
    std::vector<std::string> temp_labels;
    Eigen::VectorXd fluid_prod;
    Eigen::VectorXd gas_prod;

    Eigen::Index rows() const { return static_cast<Eigen::Index>(day.size()); }
    Eigen::Index predictors() const { return temps.cols(); }
    const Eigen::VectorXd& response(Response r) const {
        return r == Response::Fluid ? fluid_prod : gas_prod;
    }

    /// Throws ShapeError/ValidationError when the row arrays disagree or days
    /// are not strictly increasing.
    void validate() const;
};

struct CleaningConfig {
    double temp_cap = 700.0;
    double outlier_alpha = 0.001;
    bool drop_missing = true;

    void validate() const;
};

/// Column-name mapping for delimited input.
struct Schema {
    std::string well_column = "well";
    std::string day_column = "day";
    /// Empty means the file carries no such response; all values are missing.
    std::string fluid_column = "fluid_prod";
    std::string gas_column = "gas_prod";
    /// Explicit thermocouple columns. When empty, every column whose name
    /// starts with `temp_prefix` is used, in file order.
    std::vector<std::string> temp_columns;
    std::string temp_prefix = "THERMOCOUPLE";
};

/// Reads comma- or tab-delimited text (detected from the header line).
/// Lines beginning with '#' are comments. Returns one series per well id in
/// order of first appearance, each sorted by day.
std::vector<WellSeries> load_wells(std::istream& source, const Schema& schema = {});
std::vector<WellSeries> load_wells_file(const std::string& path, const Schema& schema = {});

/// Writes the format `load_wells` reads with the default schema. Every
/// series must share the same temperature labels.
void write_wells(std::ostream& out, const std::vector<WellSeries>& wells);

struct CapResult {
    WellSeries series;
    std::size_t cells_modified = 0;
};

/// Clamps every temperature to at most `cap`. Missing cells stay missing.
CapResult cap_temperatures(const WellSeries& series, double cap);

/// Drops rows with a missing or negative value in the chosen response, or a
/// missing value in any temperature column. Throws EmptyDatasetError if nothing remains.
WellSeries drop_incomplete_rows(const WellSeries& series, Response response);

/// Keeps the rows whose mask entry is true, preserving order.
WellSeries select_rows(const WellSeries& series, const std::vector<bool>& keep);

/// Shortest text that parses back to the same double; empty for NaN.
std::string format_number(double value);

}  // namespace wellglm
