#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "secap/closed_form.hpp"
#include "secap/model.hpp"
#include "secap/montecarlo.hpp"
#include "secap/numerics.hpp"
#include "secap/presets.hpp"
#include "secap/version.hpp"
#include "secap/worst_case.hpp"

namespace py = pybind11;
using namespace secap;

namespace {

SystemParams build_params(SystemKind kind, double alpha_b, double alpha_e, double beta_b,
                          double beta_e, double p_t, double p_j, double sigma2_b,
                          double sigma2_e, double r_b, double r_e, int n_b,
                          std::optional<int> n_e) {
    return SystemParams(kind, LinkGains(alpha_b, alpha_e, beta_b, beta_e),
                        PowerNoiseConfig(p_t, p_j, sigma2_b, sigma2_e), SpatialConstraint(r_b),
                        SpatialConstraint(r_e), n_b,
                        n_e ? EveAntennas::finite(*n_e) : EveAntennas::infinite());
}

}  // namespace

PYBIND11_MODULE(_secap, m) {
    m.doc() = "secrecy capacity of spatially-constrained multi-antenna systems";
    m.attr("__version__") = kVersion;

    py::enum_<ApertureDim>(m, "ApertureDim")
        .value("Circular2D", ApertureDim::Circular2D)
        .value("Spherical3D", ApertureDim::Spherical3D);

    py::enum_<SystemKind>(m, "SystemKind")
        .value("Wiretap", SystemKind::Wiretap)
        .value("BasicJammer", SystemKind::BasicJammer)
        .value("AnJammer", SystemKind::AnJammer);

    py::class_<SpatialConstraint>(m, "SpatialConstraint")
        .def(py::init<double, ApertureDim>(), py::arg("radius_wavelengths"),
             py::arg("dimension") = ApertureDim::Circular2D)
        .def_readonly("radius_wavelengths", &SpatialConstraint::radius_wavelengths)
        .def_readonly("dimension", &SpatialConstraint::dimension);

    py::class_<CapacityResult>(m, "CapacityResult")
        .def_readonly("c_b", &CapacityResult::c_b)
        .def_readonly("c_e", &CapacityResult::c_e)
        .def_readonly("c_s", &CapacityResult::c_s)
        .def("__repr__", [](const CapacityResult& r) {
            return "CapacityResult(c_b=" + std::to_string(r.c_b) +
                   ", c_e=" + std::to_string(r.c_e) + ", c_s=" + std::to_string(r.c_s) + ")";
        });

    py::class_<SystemParams>(m, "SystemParams");

    m.def("system_params", &build_params, py::arg("kind"), py::kw_only(),
          py::arg("alpha_b") = 1.0, py::arg("alpha_e") = 1.0, py::arg("beta_b") = 1.0,
          py::arg("beta_e") = 1.0, py::arg("p_t") = 100.0, py::arg("p_j") = 1.0,
          py::arg("sigma2_b") = 1.0, py::arg("sigma2_e") = 1.0, py::arg("r_b") = 1.5,
          py::arg("r_e") = 1.0, py::arg("n_b") = 35, py::arg("n_e") = std::nullopt,
          "Build SystemParams from linear-scale scalars; n_e=None means the infinite "
          "worst-case eavesdropper (pair it with sigma2_e=0).");

    m.def("saturation_number",
          [](double radius, ApertureDim dim) {
              return saturation_number(SpatialConstraint(radius, dim));
          },
          py::arg("radius_wavelengths"), py::arg("dimension") = ApertureDim::Circular2D);
    m.def("db_to_linear", &db_to_linear, py::arg("x_db"));
    m.def("linear_to_db", &linear_to_db, py::arg("x"));

    m.def("capacity_unjammed", &capacity_unjammed, py::arg("n"), py::arg("n_sat"),
          py::arg("signal"), py::arg("noise"));
    m.def("capacity_jammed", &capacity_jammed, py::arg("n"), py::arg("n_sat"), py::arg("signal"),
          py::arg("interference"), py::arg("noise"));
    m.def("secrecy_capacity", &secrecy_capacity, py::arg("params"));
    m.def("capacity_limit_infinite_bob", &capacity_limit_infinite_bob, py::arg("params"));
    m.def("capacity_limit_infinite_eve", &capacity_limit_infinite_eve, py::arg("params"));

    py::enum_<ObjectiveBranch>(m, "ObjectiveBranch")
        .value("F1Unsaturated", ObjectiveBranch::F1Unsaturated)
        .value("F2Saturated", ObjectiveBranch::F2Saturated);

    py::class_<JammingCandidate>(m, "JammingCandidate")
        .def_readonly("root", &JammingCandidate::root)
        .def_readonly("is_real", &JammingCandidate::is_real)
        .def_readonly("objective", &JammingCandidate::objective)
        .def_readonly("branch", &JammingCandidate::branch)
        .def_readonly("admissible", &JammingCandidate::admissible);

    py::class_<JammingOptimum>(m, "JammingOptimum")
        .def_readonly("candidates", &JammingOptimum::candidates)
        .def_readonly("selected_pj", &JammingOptimum::selected_pj)
        .def_readonly("achieved_cs", &JammingOptimum::achieved_cs)
        .def_readonly("grid_fallback", &JammingOptimum::grid_fallback)
        .def_readonly("note", &JammingOptimum::note)
        .def("applicable", &JammingOptimum::applicable);

    py::enum_<FeasibilityCondition>(m, "FeasibilityCondition")
        .value("UnsaturatedBobSufficient", FeasibilityCondition::UnsaturatedBobSufficient)
        .value("SaturatedBobSufficient", FeasibilityCondition::SaturatedBobSufficient)
        .value("Infeasible", FeasibilityCondition::Infeasible);

    py::class_<FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("feasible", &FeasibilityReport::feasible)
        .def_readonly("n_b_min", &FeasibilityReport::n_b_min)
        .def_readonly("binding_condition", &FeasibilityReport::binding_condition)
        .def_readonly("degenerate", &FeasibilityReport::degenerate);

    py::class_<GridSearchResult>(m, "GridSearchResult")
        .def_readonly("pj_star", &GridSearchResult::pj_star)
        .def_readonly("cs_star", &GridSearchResult::cs_star)
        .def_readonly("degenerate", &GridSearchResult::degenerate);

    m.def("worst_case_secrecy", &worst_case_secrecy, py::arg("params"));
    m.def("zero_capacity_condition", &zero_capacity_condition, py::arg("params"));
    m.def("min_bob_antennas", &min_bob_antennas, py::arg("params"));
    m.def("optimal_jamming_power", &optimal_jamming_power, py::arg("params"));
    m.def("grid_search_jamming", &grid_search_jamming, py::arg("params"),
          py::arg("pj_min") = kDefaultGridPjMin, py::arg("pj_max") = kDefaultGridPjMax,
          py::arg("points") = kDefaultGridPoints);
    m.def("clip_jamming_power", &clip_jamming_power, py::arg("pj_opt"), py::arg("pj_max"));

    m.def("bessel_j", &bessel_j, py::arg("order"), py::arg("x"));
    m.def("logdet_capacity", &logdet_capacity, py::arg("a"));
    m.def("hermitian_sqrt", &hermitian_sqrt, py::arg("r"));
    m.def("null_space_basis", &null_space_basis, py::arg("g"));
    m.def("sample_correlated_gaussian",
          py::overload_cast<const Eigen::MatrixXcd&, int, std::uint64_t, std::uint64_t,
                            std::uint32_t>(&sample_correlated_gaussian),
          py::arg("r"), py::arg("columns"), py::arg("seed"), py::arg("realization") = 0,
          py::arg("role") = rng_role::kGeneric);

    py::enum_<ArrayLayout>(m, "ArrayLayout")
        .value("UniformLinear", ArrayLayout::UniformLinear)
        .value("UniformCircular", ArrayLayout::UniformCircular);

    py::class_<ArrayGeometry>(m, "ArrayGeometry")
        .def_readonly("layout", &ArrayGeometry::layout)
        .def_readonly("count", &ArrayGeometry::count)
        .def_readonly("radius_wavelengths", &ArrayGeometry::radius_wavelengths)
        .def_readonly("positions", &ArrayGeometry::positions);

    m.def("build_geometry", &build_geometry, py::arg("layout"), py::arg("count"),
          py::arg("radius_wavelengths"));
    m.def("correlation_matrix", &correlation_matrix, py::arg("geometry"));

    py::enum_<ValidationKind>(m, "ValidationKind")
        .value("Unjammed", ValidationKind::Unjammed)
        .value("BasicJammed", ValidationKind::BasicJammed)
        .value("AnJammed", ValidationKind::AnJammed);

    py::class_<ValidationConfig>(m, "ValidationConfig")
        .def(py::init<>())
        .def_readwrite("kind", &ValidationConfig::kind)
        .def_readwrite("layout", &ValidationConfig::layout)
        .def_readwrite("radius_wavelengths", &ValidationConfig::radius_wavelengths)
        .def_readwrite("n_receive", &ValidationConfig::n_receive)
        .def_readwrite("n_t", &ValidationConfig::n_t)
        .def_readwrite("n_j", &ValidationConfig::n_j)
        .def_readwrite("n_b", &ValidationConfig::n_b)
        .def_readwrite("realizations", &ValidationConfig::realizations)
        .def_readwrite("seed", &ValidationConfig::seed)
        .def_readwrite("alpha", &ValidationConfig::alpha)
        .def_readwrite("beta", &ValidationConfig::beta)
        .def_readwrite("p_t", &ValidationConfig::p_t)
        .def_readwrite("p_j", &ValidationConfig::p_j)
        .def_readwrite("sigma2", &ValidationConfig::sigma2);

    py::class_<ValidationPoint>(m, "ValidationPoint")
        .def_readonly("n_receive", &ValidationPoint::n_receive)
        .def_readonly("true_capacity_mean", &ValidationPoint::true_capacity_mean)
        .def_readonly("true_capacity_stderr", &ValidationPoint::true_capacity_stderr)
        .def_readonly("stderr_valid", &ValidationPoint::stderr_valid)
        .def_readonly("approx_correlation", &ValidationPoint::approx_correlation)
        .def_readonly("approx_piecewise", &ValidationPoint::approx_piecewise);

    py::class_<ValidationCurve>(m, "ValidationCurve")
        .def_readonly("scenario", &ValidationCurve::scenario)
        .def_readonly("points", &ValidationCurve::points);

    m.def("run_validation", &run_validation, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());

    m.def("make_validation_config", &make_validation_config, py::arg("figure"), py::arg("layout"),
          py::arg("realizations") = 200, py::arg("seed") = 1);

    m.def("figure_csv",
          [](int number, std::uint64_t seed, int realizations) {
              FigureOptions options;
              options.seed = seed;
              options.realizations = realizations;
              return run_figure(number, options).to_string();
          },
          py::arg("number"), py::arg("seed") = 1, py::arg("realizations") = 200,
          "CSV text of a figure-data preset (3..10).");
}
