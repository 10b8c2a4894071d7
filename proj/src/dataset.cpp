#include "wellglm/dataset.hpp"

#include "wellglm/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <unordered_map>

namespace wellglm {

std::string_view to_string(Response r) {
    return r == Response::Fluid ? "fluid" : "gas";
}

Response parse_response(std::string_view text) {
    if (text == "fluid") return Response::Fluid;
    if (text == "gas") return Response::Gas;
    throw ConfigError("unknown response '" + std::string(text) + "' (expected fluid or gas)");
}

void WellSeries::validate() const {
    const auto n = rows();
    if (temps.rows() != n || fluid_prod.size() != n || gas_prod.size() != n) {
        throw ShapeError("well " + well_id + ": row arrays have inconsistent lengths");
    }
    if (static_cast<std::size_t>(temps.cols()) != temp_labels.size()) {
        throw ShapeError("well " + well_id + ": temperature columns do not match labels");
    }
    for (std::size_t i = 1; i < day.size(); ++i) {
        if (day[i] <= day[i - 1]) {
            throw ValidationError("well " + well_id + ": days are not strictly increasing at day " +
                                  std::to_string(day[i]));
        }
    }
}

void CleaningConfig::validate() const {
    if (!(temp_cap > 0.0)) throw ConfigError("temp_cap must be positive");
    if (!(outlier_alpha > 0.0 && outlier_alpha < 1.0)) {
        throw ConfigError("outlier_alpha must lie in (0, 1)");
    }
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == delim) {
            fields.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(trim(cur));
    return fields;
}

double parse_cell(const std::string& text) {
    if (text.empty()) return kMissing;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) return kMissing;
    return v;
}

bool parse_day(const std::string& text, std::int64_t& out) {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

struct PendingRow {
    std::int64_t day;
    double fluid;
    double gas;
    std::vector<double> temps;
};

}  // namespace

std::vector<WellSeries> load_wells(std::istream& source, const Schema& schema) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line[0] == '#') continue;
        have_header = true;
        break;
    }
    if (!have_header) throw SchemaError("input has no header row");

    const char delim = line.find('\t') != std::string::npos ? '\t' : ',';
    const auto header = split_fields(line, delim);
    std::unordered_map<std::string, std::size_t> column;
    for (std::size_t i = 0; i < header.size(); ++i) column.emplace(header[i], i);

    auto require = [&](const std::string& name) {
        auto it = column.find(name);
        if (it == column.end()) throw SchemaError("missing mandatory column '" + name + "'");
        return it->second;
    };
    const std::size_t well_col = require(schema.well_column);
    const std::size_t day_col = require(schema.day_column);
    const std::ptrdiff_t fluid_col =
        schema.fluid_column.empty() ? -1 : static_cast<std::ptrdiff_t>(require(schema.fluid_column));
    const std::ptrdiff_t gas_col =
        schema.gas_column.empty() ? -1 : static_cast<std::ptrdiff_t>(require(schema.gas_column));

    std::vector<std::string> temp_labels;
    std::vector<std::size_t> temp_cols;
    if (!schema.temp_columns.empty()) {
        for (const auto& name : schema.temp_columns) {
            temp_cols.push_back(require(name));
            temp_labels.push_back(name);
        }
    } else {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i].rfind(schema.temp_prefix, 0) == 0) {
                temp_cols.push_back(i);
                temp_labels.push_back(header[i]);
            }
        }
        if (temp_cols.empty()) {
            throw SchemaError("missing mandatory column: no column starts with '" + schema.temp_prefix + "'");
        }
    }

    std::vector<std::string> order;
    std::map<std::string, std::vector<PendingRow>> by_well;
    while (std::getline(source, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty() || line[0] == '#') continue;
        auto fields = split_fields(line, delim);
        fields.resize(std::max(fields.size(), header.size()));

        const std::string& well = fields[well_col];
        if (well.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty well id");
        PendingRow row;
        if (!parse_day(fields[day_col], row.day)) {
            throw ParseError("line " + std::to_string(line_no) + ": unparseable day '" + fields[day_col] + "'");
        }
        row.fluid = fluid_col < 0 ? kMissing : parse_cell(fields[static_cast<std::size_t>(fluid_col)]);
        row.gas = gas_col < 0 ? kMissing : parse_cell(fields[static_cast<std::size_t>(gas_col)]);
        row.temps.reserve(temp_cols.size());
        for (auto c : temp_cols) row.temps.push_back(parse_cell(fields[c]));

        auto [it, inserted] = by_well.try_emplace(well);
        if (inserted) order.push_back(well);
        it->second.push_back(std::move(row));
    }

    std::vector<WellSeries> wells;
    wells.reserve(order.size());
    for (const auto& id : order) {
        auto& rows = by_well[id];
        std::stable_sort(rows.begin(), rows.end(),
                         [](const PendingRow& a, const PendingRow& b) { return a.day < b.day; });
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (rows[i].day == rows[i - 1].day) {
                throw DuplicateRowError("duplicate row for well " + id + " on day " +
                                        std::to_string(rows[i].day));
            }
        }
        WellSeries s;
        s.well_id = id;
        s.temp_labels = temp_labels;
        const auto n = static_cast<Eigen::Index>(rows.size());
        const auto p = static_cast<Eigen::Index>(temp_cols.size());
        s.temps.resize(n, p);
        s.fluid_prod.resize(n);
        s.gas_prod.resize(n);
        s.day.reserve(rows.size());
        for (Eigen::Index i = 0; i < n; ++i) {
            const auto& r = rows[static_cast<std::size_t>(i)];
            s.day.push_back(r.day);
            s.fluid_prod[i] = r.fluid;
            s.gas_prod[i] = r.gas;
            for (Eigen::Index j = 0; j < p; ++j) s.temps(i, j) = r.temps[static_cast<std::size_t>(j)];
        }
        wells.push_back(std::move(s));
    }
    return wells;
}

std::vector<WellSeries> load_wells_file(const std::string& path, const Schema& schema) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file '" + path + "'");
    return load_wells(in, schema);
}

std::string format_number(double value) {
    if (std::isnan(value)) return {};
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_wells(std::ostream& out, const std::vector<WellSeries>& wells) {
    if (wells.empty()) return;
    const auto& labels = wells.front().temp_labels;
    out << "well,day,fluid_prod,gas_prod";
    for (const auto& l : labels) out << ',' << l;
    out << '\n';
    for (const auto& w : wells) {
        if (w.temp_labels != labels) {
            throw ShapeError("write_wells: well " + w.well_id + " has different temperature labels");
        }
        for (Eigen::Index i = 0; i < w.rows(); ++i) {
            out << w.well_id << ',' << w.day[static_cast<std::size_t>(i)] << ','
                << format_number(w.fluid_prod[i]) << ',' << format_number(w.gas_prod[i]);
            for (Eigen::Index j = 0; j < w.temps.cols(); ++j) out << ',' << format_number(w.temps(i, j));
            out << '\n';
        }
    }
}

CapResult cap_temperatures(const WellSeries& series, double cap) {
    if (!(cap > 0.0)) throw ConfigError("temperature cap must be positive");
    CapResult result{series, 0};
    for (Eigen::Index i = 0; i < result.series.temps.size(); ++i) {
        double& t = result.series.temps.data()[i];
        if (t > cap) {
            t = cap;
            ++result.cells_modified;
        }
    }
    return result;
}

WellSeries select_rows(const WellSeries& series, const std::vector<bool>& keep) {
    if (keep.size() != static_cast<std::size_t>(series.rows())) {
        throw ShapeError("row mask length does not match series length");
    }
    std::vector<Eigen::Index> idx;
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i]) idx.push_back(static_cast<Eigen::Index>(i));
    }
    WellSeries out;
    out.well_id = series.well_id;
    out.temp_labels = series.temp_labels;
    const auto m = static_cast<Eigen::Index>(idx.size());
    out.temps.resize(m, series.temps.cols());
    out.fluid_prod.resize(m);
    out.gas_prod.resize(m);
    out.day.reserve(idx.size());
    for (Eigen::Index r = 0; r < m; ++r) {
        const auto i = idx[static_cast<std::size_t>(r)];
        out.day.push_back(series.day[static_cast<std::size_t>(i)]);
        out.temps.row(r) = series.temps.row(i);
        out.fluid_prod[r] = series.fluid_prod[i];
        out.gas_prod[r] = series.gas_prod[i];
    }
    return out;
}

WellSeries drop_incomplete_rows(const WellSeries& series, Response response) {
    const auto& y = series.response(response);
    std::vector<bool> keep(static_cast<std::size_t>(series.rows()));
    for (Eigen::Index i = 0; i < series.rows(); ++i) {
        keep[static_cast<std::size_t>(i)] = !std::isnan(y[i]) && y[i] >= 0.0 && !series.temps.row(i).hasNaN();
    }
    auto out = select_rows(series, keep);
    if (out.rows() == 0) {
        throw EmptyDatasetError("well " + series.well_id + ": no complete rows for " +
                                std::string(to_string(response)) + " response");
    }
    return out;
}

}  // namespace wellglm
