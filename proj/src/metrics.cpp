#include "wellglm/metrics.hpp"

#include "wellglm/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace wellglm {

namespace {

void check_lengths(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat) {
    if (y.size() != yhat.size()) throw ShapeError("metric inputs differ in length");
    if (y.size() == 0) throw EmptyDatasetError("metric on an empty vector");
}

}  // namespace

double rsquare(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat) {
    check_lengths(y, yhat);
    if (y.size() < 2) throw UndefinedVarianceError("R-square needs at least two observations");
    const double sst = (y.array() - y.mean()).square().sum();
    if (!(sst > 0.0)) throw UndefinedVarianceError("R-square undefined: response has zero variance");
    return 1.0 - (y - yhat).squaredNorm() / sst;
}

double rase(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat) {
    check_lengths(y, yhat);
    return std::sqrt((y - yhat).squaredNorm() / static_cast<double>(y.size()));
}

double aae(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat) {
    check_lengths(y, yhat);
    return (y - yhat).cwiseAbs().sum() / static_cast<double>(y.size());
}

FitMeasures measure_fit(const Eigen::VectorXd& y, const Eigen::VectorXd& yhat) {
    FitMeasures m;
    m.rase = rase(y, yhat);
    m.aae = aae(y, yhat);
    m.freq = static_cast<long>(y.size());
    try {
        m.rsquare = rsquare(y, yhat);
    } catch (const UndefinedVarianceError&) {
        m.rsquare.reset();
    }
    return m;
}

std::string_view to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Normal1: return "Normal-1DG";
        case ModelKind::Normal2: return "Normal-2DG";
        case ModelKind::Poisson1: return "Poisson-1DG";
        case ModelKind::Poisson2: return "Poisson-2DG";
    }
    return {};
}

ModelKind parse_model_kind(std::string_view text) {
    for (auto k : kModelGrid) {
        if (to_string(k) == text) return k;
    }
    throw ParseError("unknown model kind '" + std::string(text) + "'");
}

ModelKind model_kind(Family family, int degree) {
    if (family == Family::NormalIdentity) return degree == 1 ? ModelKind::Normal1 : ModelKind::Normal2;
    return degree == 1 ? ModelKind::Poisson1 : ModelKind::Poisson2;
}

Family family_of(ModelKind kind) {
    return kind == ModelKind::Normal1 || kind == ModelKind::Normal2 ? Family::NormalIdentity : Family::PoissonLog;
}

int degree_of(ModelKind kind) { return kind == ModelKind::Normal1 || kind == ModelKind::Poisson1 ? 1 : 2; }

std::string display_name(Response response, ModelKind kind) {
    const bool fluid = response == Response::Fluid;
    std::string name = fluid ? "Fluid GLM " : "GAS GLM ";
    name += family_of(kind) == Family::NormalIdentity ? "OLS " : "Poisson ";
    if (degree_of(kind) == 1) return name + "1DG";
    return name + (fluid ? "2DG Poly" : "2DG Polynomial");
}

ComparisonTable build_comparison(const std::vector<FitRecord>& fits) {
    std::vector<std::string> wells;
    std::map<std::tuple<std::string, int, int>, FitMeasures> cells;
    for (const auto& f : fits) {
        if (std::find(wells.begin(), wells.end(), f.well_id) == wells.end()) wells.push_back(f.well_id);
        auto key = std::make_tuple(f.well_id, static_cast<int>(f.response), static_cast<int>(f.model));
        if (cells.count(key)) {
            throw ValidationError("duplicate comparison cell for well " + f.well_id + ", " +
                                  std::string(to_string(f.response)) + ", " + std::string(to_string(f.model)));
        }
        cells.emplace(std::move(key), measure_fit(f.y, f.yhat));
    }
    ComparisonTable table;
    for (const auto& w : wells) {
        for (auto r : {Response::Fluid, Response::Gas}) {
            for (auto k : kModelGrid) {
                auto it = cells.find(std::make_tuple(w, static_cast<int>(r), static_cast<int>(k)));
                if (it != cells.end()) table.rows.push_back({w, r, k, it->second});
            }
        }
    }
    return table;
}

namespace {

// Five significant digits, never exponent notation.
std::string sig5(double v) {
    if (!std::isfinite(v)) return "n/a";
    int decimals = 4;
    if (v != 0.0) decimals = std::clamp(4 - static_cast<int>(std::floor(std::log10(std::abs(v)))), 0, 12);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

std::string fixed4(const std::optional<double>& v) {
    if (!v) return "n/a";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", *v);
    return buf;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
    if (s.size() >= width) return s;
    return right ? std::string(width - s.size(), ' ') + s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string ComparisonTable::render_text() const {
    constexpr std::size_t name_w = 31;
    constexpr std::size_t num_w = 10;
    constexpr std::size_t freq_w = 7;
    const std::size_t block_w = name_w + 3 * num_w + freq_w;
    const std::string gap = "    ";

    auto row_text = [&](const ComparisonRow* r) -> std::string {
        if (!r) return std::string(block_w, ' ');
        return pad(display_name(r->response, r->model), name_w, false) +
               pad(fixed4(r->measures.rsquare), num_w, true) + pad(sig5(r->measures.rase), num_w, true) +
               pad(sig5(r->measures.aae), num_w, true) + pad(std::to_string(r->measures.freq), freq_w, true);
    };
    const std::string col_head = pad("Predictor", name_w, false) + pad("RSquare", num_w, true) +
                                 pad("RASE", num_w, true) + pad("AAE", num_w, true) + pad("Freq", freq_w, true);

    std::ostringstream out;
    std::vector<std::string> wells;
    for (const auto& r : rows) {
        if (std::find(wells.begin(), wells.end(), r.well_id) == wells.end()) wells.push_back(r.well_id);
    }
    for (std::size_t w = 0; w < wells.size(); ++w) {
        std::vector<const ComparisonRow*> fluid;
        std::vector<const ComparisonRow*> gas;
        for (const auto& r : rows) {
            if (r.well_id != wells[w]) continue;
            (r.response == Response::Fluid ? fluid : gas).push_back(&r);
        }
        if (w > 0) out << '\n';
        out << "Model Comparison (\"" << wells[w] << "\")\n";
        std::string left = fluid.empty() ? std::string(block_w, ' ') : pad("Measures of Fit for Fluid Prod", block_w, false);
        std::string right = gas.empty() ? std::string() : "Measures of Fit for GAS PRODUCTION";
        std::string line = left + gap + right;
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
        line = (fluid.empty() ? std::string(block_w, ' ') : col_head) + gap + (gas.empty() ? "" : col_head);
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << '\n';
        const std::size_t lines = std::max(fluid.size(), gas.size());
        for (std::size_t i = 0; i < lines; ++i) {
            line = row_text(i < fluid.size() ? fluid[i] : nullptr) + gap +
                   (i < gas.size() ? row_text(gas[i]) : std::string());
            line.erase(line.find_last_not_of(' ') + 1);
            out << line << '\n';
        }
    }
    return out.str();
}

std::string ComparisonTable::render_csv() const {
    std::ostringstream out;
    out << "well,response,model,rsquare,rase,aae,freq\n";
    for (const auto& r : rows) {
        out << r.well_id << ',' << to_string(r.response) << ',' << to_string(r.model) << ','
            << (r.measures.rsquare ? format_number(*r.measures.rsquare) : std::string()) << ','
            << format_number(r.measures.rase) << ',' << format_number(r.measures.aae) << ',' << r.measures.freq
            << '\n';
    }
    return out.str();
}

}  // namespace wellglm
