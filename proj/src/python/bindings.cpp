#include "wellglm/dataset.hpp"
#include "wellglm/error.hpp"
#include "wellglm/features.hpp"
#include "wellglm/glm.hpp"
#include "wellglm/metrics.hpp"
#include "wellglm/outliers.hpp"
#include "wellglm/residuals.hpp"
#include "wellglm/simulate.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace wellglm;

namespace {

FeatureSpec make_spec(const Eigen::MatrixXd& temps, int degree, std::vector<std::string> labels) {
    if (labels.empty()) {
        for (Eigen::Index j = 0; j < temps.cols(); ++j) labels.push_back("THERMOCOUPLE " + std::to_string(j + 1));
    }
    if (degree == 1) return FeatureSpec::linear(std::move(labels));
    if (degree == 2) return FeatureSpec::quadratic(std::move(labels), compute_centering_means(temps));
    throw ConfigError("degree must be 1 or 2");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "GLM production forecasting core";

    static py::exception<Error> base(m, "WellglmError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const char* cat = e.category() == ErrorCategory::Config ? "config"
                              : e.category() == ErrorCategory::Data ? "data"
                                                                   : "numerical";
            py::object exc = py::handle(base.ptr())(std::string(e.what()));
            exc.attr("category") = cat;
            exc.attr("code") = e.code();
            PyErr_SetObject(base.ptr(), exc.ptr());
        }
    });

    py::enum_<Response>(m, "Response").value("FLUID", Response::Fluid).value("GAS", Response::Gas);
    py::enum_<Family>(m, "Family")
        .value("NORMAL", Family::NormalIdentity)
        .value("POISSON", Family::PoissonLog);

    py::class_<WellSeries>(m, "WellSeries")
        .def_readonly("well_id", &WellSeries::well_id)
        .def_readonly("day", &WellSeries::day)
        .def_readonly("temps", &WellSeries::temps)
        .def_readonly("temp_labels", &WellSeries::temp_labels)
        .def_readonly("fluid_prod", &WellSeries::fluid_prod)
        .def_readonly("gas_prod", &WellSeries::gas_prod)
        .def("rows", &WellSeries::rows);

    m.def("load_wells", [](const std::string& path) { return load_wells_file(path); }, py::arg("path"));
    m.def("drop_incomplete_rows", &drop_incomplete_rows, py::arg("series"), py::arg("response"));
    m.def(
        "cap_temperatures",
        [](const WellSeries& s, double cap) {
            auto r = cap_temperatures(s, cap);
            return py::make_tuple(r.series, r.cells_modified);
        },
        py::arg("series"), py::arg("cap") = 700.0);

    py::class_<FeatureSpec>(m, "FeatureSpec")
        .def_readonly("degree", &FeatureSpec::degree)
        .def_readonly("predictor_labels", &FeatureSpec::predictor_labels)
        .def_readonly("centering_means", &FeatureSpec::centering_means);
    m.def("feature_spec", &make_spec, py::arg("temps"), py::arg("degree"),
          py::arg("labels") = std::vector<std::string>{});
    m.def(
        "expand", [](const Eigen::MatrixXd& temps, const FeatureSpec& spec) { return expand(temps, spec).values; },
        py::arg("temps"), py::arg("spec"));

    py::class_<FittedModel>(m, "FittedModel")
        .def_readonly("family", &FittedModel::family)
        .def_readonly("spec", &FittedModel::spec)
        .def_readonly("beta", &FittedModel::beta)
        .def_readonly("covariance", &FittedModel::covariance)
        .def_readonly("aliased", &FittedModel::aliased)
        .def_readonly("n_obs", &FittedModel::n_obs)
        .def_readonly("dispersion", &FittedModel::dispersion)
        .def_readonly("converged", &FittedModel::converged)
        .def_readonly("iterations", &FittedModel::iterations)
        .def_readonly("log_likelihood", &FittedModel::log_likelihood)
        .def_property_readonly("term_labels", [](const FittedModel& f) {
            std::vector<std::string> out;
            for (const auto& t : f.terms()) out.push_back(term_label(t, f.spec.predictor_labels));
            return out;
        });

    m.def(
        "fit",
        [](Family family, const Eigen::MatrixXd& temps, const Eigen::VectorXd& y, int degree,
           std::vector<std::string> labels) {
            return fit(family, temps, y, make_spec(temps, degree, std::move(labels)));
        },
        py::arg("family"), py::arg("temps"), py::arg("y"), py::arg("degree") = 1,
        py::arg("labels") = std::vector<std::string>{});
    m.def("predict", &predict, py::arg("model"), py::arg("temps"));
    m.def("serialize_model", &serialize_model, py::arg("model"));
    m.def(
        "deserialize_model", [](const std::string& doc) { return deserialize_model(doc); }, py::arg("document"));

    py::class_<EffectEntry>(m, "EffectEntry")
        .def_readonly("label", &EffectEntry::label)
        .def_readonly("estimate", &EffectEntry::estimate)
        .def_readonly("std_error", &EffectEntry::std_error)
        .def_readonly("z", &EffectEntry::z)
        .def_readonly("p_value", &EffectEntry::p_value)
        .def_readonly("log_worth", &EffectEntry::log_worth)
        .def_readonly("aliased", &EffectEntry::aliased);
    m.def(
        "wald_effects",
        [](const FittedModel& model, int top_k) {
            auto ranked = wald_effects(model).ranked;
            if (top_k > 0 && ranked.size() > static_cast<std::size_t>(top_k)) ranked.resize(top_k);
            return ranked;
        },
        py::arg("model"), py::arg("top_k") = 20);
    m.def("log_worth", &log_worth, py::arg("p_value"));

    m.def("rsquare", &rsquare, py::arg("y"), py::arg("yhat"));
    m.def("rase", &rase, py::arg("y"), py::arg("yhat"));
    m.def("aae", &aae, py::arg("y"), py::arg("yhat"));

    py::class_<NormalFit>(m, "NormalFit")
        .def_readonly("location_mu", &NormalFit::location_mu)
        .def_readonly("dispersion_sigma", &NormalFit::dispersion_sigma)
        .def_readonly("se_mu", &NormalFit::se_mu)
        .def_readonly("se_sigma", &NormalFit::se_sigma)
        .def_readonly("n", &NormalFit::n);
    py::class_<HistogramBin>(m, "HistogramBin")
        .def_readonly("left", &HistogramBin::left)
        .def_readonly("right", &HistogramBin::right)
        .def_readonly("count", &HistogramBin::count)
        .def_readonly("normal_density", &HistogramBin::normal_density);
    py::class_<ResidualReport>(m, "ResidualReport")
        .def_readonly("residuals", &ResidualReport::residuals)
        .def_readonly("fit", &ResidualReport::fit)
        .def_readonly("histogram", &ResidualReport::histogram);
    m.def("residual_report", &residual_report, py::arg("y"), py::arg("yhat"), py::arg("bins") = 30);

    m.def(
        "mahalanobis",
        [](const Eigen::MatrixXd& data, double alpha) {
            auto screen = mahalanobis(data);
            flag_outliers(screen, alpha);
            return py::make_tuple(screen.distances, screen.cutoff, screen.flags);
        },
        py::arg("data"), py::arg("alpha") = 0.001);
    m.def("mahalanobis_cutoff", &mahalanobis_cutoff, py::arg("alpha"), py::arg("dof"));

    m.def(
        "simulate_well",
        [](std::uint64_t seed, int n_rows, int p, Family family, int degree, double level, double halfwidth,
           double ramp) {
            SimSpec s;
            s.seed = seed;
            s.n_rows = n_rows;
            s.p = p;
            s.true_family = family;
            s.true_degree = degree;
            s.temp_model.ramp = ramp;
            const auto temps = simulate_temperatures(s);
            s.true_beta = draw_truth(temps, truth_spec(temps, degree), level, halfwidth, seed ^ 0x1ULL);
            auto sim = simulate_well(s);
            return py::make_tuple(sim.series.temps, sim.series.fluid_prod, sim.truth.fluid_beta);
        },
        py::arg("seed"), py::arg("n_rows") = 1000, py::arg("p") = 4, py::arg("family") = Family::PoissonLog,
        py::arg("degree") = 1, py::arg("level") = 1.0, py::arg("halfwidth") = 1.5, py::arg("ramp") = 0.05);
}
