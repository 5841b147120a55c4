// bindings.cpp — python module exposing the core operations

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtm/config.hpp"
#include "qtm/io.hpp"

namespace py = pybind11;
using namespace qtm;

PYBIND11_MODULE(_qtm, m) {
    m.doc() = "Two-qubit thermal machine: spectra, quasistatic cycles, mode "
              "classification and 2-D parameter sweeps.";

    // ------------------------------------------------------------- spectral --
    py::enum_<LeftMode>(m, "LeftMode")
        .value("SCALED", LeftMode::Scaled)
        .value("FIXED", LeftMode::Fixed);

    py::class_<MachineParams>(m, "MachineParams")
        .def(py::init<>())
        .def_readwrite("g", &MachineParams::g)
        .def_readwrite("r", &MachineParams::r)
        .def_readwrite("left_mode", &MachineParams::left_mode)
        .def_readwrite("omega_bar_fixed", &MachineParams::omega_bar_fixed)
        .def("omega_bar", &MachineParams::omega_bar, py::arg("omega"))
        .def("validate", &MachineParams::validate);

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("omega", &Spectrum::omega)
        .def_readonly("omega_bar", &Spectrum::omega_bar)
        .def_readonly("big_omega", &Spectrum::big_omega)
        .def_readonly("theta", &Spectrum::theta)
        .def_readonly("energies", &Spectrum::energies);

    py::class_<ThermalState>(m, "ThermalState")
        .def_readonly("beta", &ThermalState::beta)
        .def_readonly("populations", &ThermalState::populations)
        .def_readonly("log_z", &ThermalState::log_z);

    m.def("build_spectrum", &build_spectrum, py::arg("params"), py::arg("omega"));
    m.def("oracle_diagonalize", &oracle_diagonalize, py::arg("params"),
          py::arg("omega"),
          "Independent spectrum route through the assembled 4x4 Hamiltonian.");
    m.def("thermal_state", &thermal_state, py::arg("spectrum"),
          py::arg("temperature"));
    m.def("internal_energy", &internal_energy, py::arg("state"), py::arg("spectrum"));
    m.def("entropy", &entropy, py::arg("state"), py::arg("spectrum"));
    m.def("entropy_at", &entropy_at, py::arg("params"), py::arg("omega"),
          py::arg("temperature"));
    m.def("internal_energy_at", &internal_energy_at, py::arg("params"),
          py::arg("omega"), py::arg("temperature"));

    // --------------------------------------------------------------- cycles --
    py::register_exception<NoRootInBracket>(m, "NoRootInBracket");

    py::class_<CyclePoint>(m, "CyclePoint")
        .def(py::init<>())
        .def_readwrite("omega0", &CyclePoint::omega0)
        .def_readwrite("omega1", &CyclePoint::omega1)
        .def_readwrite("t_cold", &CyclePoint::t_cold)
        .def_readwrite("t_hot", &CyclePoint::t_hot)
        .def_readwrite("params", &CyclePoint::params)
        .def("validate", &CyclePoint::validate);

    py::class_<CycleDiagnostics>(m, "CycleDiagnostics")
        .def_readonly("adiabatic_work_1", &CycleDiagnostics::adiabatic_work_1)
        .def_readonly("adiabatic_work_2", &CycleDiagnostics::adiabatic_work_2)
        .def_readonly("isentrope_residual_1", &CycleDiagnostics::isentrope_residual_1)
        .def_readonly("isentrope_residual_2", &CycleDiagnostics::isentrope_residual_2)
        .def_readonly("population_mismatch", &CycleDiagnostics::population_mismatch);

    py::class_<CycleRecord>(m, "CycleRecord")
        .def_readonly("q_hot", &CycleRecord::q_hot)
        .def_readonly("q_cold", &CycleRecord::q_cold)
        .def_readonly("q_iso1", &CycleRecord::q_iso1)
        .def_readonly("q_iso2", &CycleRecord::q_iso2)
        .def_readonly("work_out", &CycleRecord::work_out)
        .def_readonly("aux_frequencies", &CycleRecord::aux_frequencies)
        .def_readonly("regen_delta", &CycleRecord::regen_delta)
        .def_readonly("regen_delta_flag", &CycleRecord::regen_delta_flag)
        .def_readonly("diagnostics", &CycleRecord::diagnostics);

    m.def("run_otto", &run_otto, py::arg("point"));
    m.def("run_stirling", &run_stirling, py::arg("point"));
    m.def("run_stirling_regen", &run_stirling_regen, py::arg("point"));
    m.def(
        "run_carnot",
        [](const CyclePoint& point) {
            return run_carnot(point, carnot_default_bracket(point));
        },
        py::arg("point"),
        "Carnot run with the default entropy-match search bracket.");

    // ----------------------------------------------------------- classifier --
    py::enum_<OperationalMode>(m, "OperationalMode")
        .value("ENGINE", OperationalMode::Engine)
        .value("REFRIGERATOR", OperationalMode::Refrigerator)
        .value("HEATER", OperationalMode::Heater)
        .value("ACCELERATOR", OperationalMode::Accelerator)
        .value("IDLE", OperationalMode::Idle)
        .value("FORBIDDEN", OperationalMode::Forbidden);

    m.attr("SIGN_TOLERANCE") = kSignTolerance;

    py::class_<BathTemperatures>(m, "BathTemperatures")
        .def(py::init<>())
        .def(py::init([](double t_cold, double t_hot) {
                 return BathTemperatures{t_cold, t_hot};
             }),
             py::arg("t_cold"), py::arg("t_hot"))
        .def_readwrite("t_cold", &BathTemperatures::t_cold)
        .def_readwrite("t_hot", &BathTemperatures::t_hot);

    py::class_<Performance>(m, "Performance")
        .def_readonly("mode", &Performance::mode)
        .def_readonly("metric", &Performance::metric)
        .def_readonly("kappa", &Performance::kappa)
        .def_readonly("degenerate_denominator", &Performance::degenerate_denominator);

    m.def("classify", &classify, py::arg("record"),
          py::arg("tolerance") = kSignTolerance);
    m.def(
        "performance",
        [](const CycleRecord& record, const BathTemperatures& temps,
           bool regenerative, double tolerance, bool carnot_normalized_kappa) {
            return performance(record, temps, regenerative,
                               {tolerance, carnot_normalized_kappa});
        },
        py::arg("record"), py::arg("temps"), py::arg("regenerative") = false,
        py::arg("tolerance") = kSignTolerance,
        py::arg("carnot_normalized_kappa") = false);
    m.def("clausius_residual", &clausius_residual, py::arg("record"),
          py::arg("temps"));
    m.def("mode_name",
          [](OperationalMode mode) { return std::string(to_string(mode)); },
          py::arg("mode"));

    // ---------------------------------------------------------------- sweep --
    py::enum_<CycleKind>(m, "CycleKind")
        .value("CARNOT", CycleKind::Carnot)
        .value("OTTO", CycleKind::Otto)
        .value("STIRLING", CycleKind::Stirling)
        .value("STIRLING_REGEN", CycleKind::StirlingRegen);

    py::enum_<AxisParam>(m, "AxisParam")
        .value("OMEGA0", AxisParam::Omega0)
        .value("OMEGA1", AxisParam::Omega1)
        .value("T_HOT", AxisParam::THot)
        .value("T_COLD", AxisParam::TCold);

    py::class_<GridAxis>(m, "GridAxis")
        .def(py::init<>())
        .def(py::init([](AxisParam param, double min, double max, int count) {
                 return GridAxis{param, min, max, count};
             }),
             py::arg("param"), py::arg("min"), py::arg("max"), py::arg("count"))
        .def_readwrite("param", &GridAxis::param)
        .def_readwrite("min", &GridAxis::min)
        .def_readwrite("max", &GridAxis::max)
        .def_readwrite("count", &GridAxis::count)
        .def("value", &GridAxis::value, py::arg("i"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("cycle", &GridSpec::cycle)
        .def_readwrite("x_axis", &GridSpec::x_axis)
        .def_readwrite("y_axis", &GridSpec::y_axis)
        .def_readwrite("base", &GridSpec::base)
        .def_readwrite("classify_tolerance", &GridSpec::classify_tolerance)
        .def_readwrite("carnot_normalized_kappa", &GridSpec::carnot_normalized_kappa)
        .def("validate", &GridSpec::validate);

    m.attr("CELL_SOLVER_FAILED") = kCellSolverFailed;
    m.attr("CELL_DEGENERATE_METRIC") = kCellDegenerateMetric;
    m.attr("CELL_REGEN_DEFICIT") = kCellRegenDeficit;

    py::class_<GridCell>(m, "GridCell")
        .def_readonly("q_hot", &GridCell::q_hot)
        .def_readonly("q_cold", &GridCell::q_cold)
        .def_readonly("work", &GridCell::work)
        .def_readonly("mode", &GridCell::mode)
        .def_readonly("metric", &GridCell::metric)
        .def_readonly("kappa", &GridCell::kappa)
        .def_readonly("flags", &GridCell::flags)
        .def("failed", &GridCell::failed);

    py::class_<GridResult>(m, "GridResult")
        .def_readonly("spec", &GridResult::spec)
        .def_readonly("cells", &GridResult::cells)
        .def("at", &GridResult::at, py::arg("ix"), py::arg("iy"),
             py::return_value_policy::reference_internal)
        .def("nx", &GridResult::nx)
        .def("ny", &GridResult::ny);

    m.def("evaluate_cycle", &evaluate_cycle, py::arg("kind"), py::arg("point"));
    m.def("evaluate_cell", &evaluate_cell, py::arg("kind"), py::arg("point"),
          py::arg("classify_tolerance") = kSignTolerance,
          py::arg("carnot_normalized_kappa") = false);
    m.def("run_grid", &run_grid, py::arg("spec"), py::arg("workers") = 0,
          py::call_guard<py::gil_scoped_release>());

    py::enum_<ScanAxis>(m, "ScanAxis")
        .value("X", ScanAxis::X)
        .value("Y", ScanAxis::Y);

    m.def(
        "locate_boundary",
        [](const GridResult& result, OperationalMode mode, ScanAxis axis,
           std::optional<int> line) {
            return locate_boundary(result, mode, {axis, line});
        },
        py::arg("result"), py::arg("mode"), py::arg("axis") = ScanAxis::X,
        py::arg("line") = std::nullopt);

    // --------------------------------------------------------------- config --
    py::register_exception<ConfigError>(m, "ConfigError");

    py::enum_<HeatmapLayer>(m, "HeatmapLayer")
        .value("MODE", HeatmapLayer::Mode)
        .value("KAPPA", HeatmapLayer::Kappa);

    py::class_<OutputSpec>(m, "OutputSpec")
        .def(py::init<>())
        .def_readwrite("csv_path", &OutputSpec::csv_path)
        .def_readwrite("image_path", &OutputSpec::image_path)
        .def_readwrite("layer", &OutputSpec::layer);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("grid", &RunConfig::grid)
        .def_readwrite("output", &RunConfig::output);

    m.def("parse_config_text", &parse_config_text, py::arg("text"),
          py::arg("origin") = "<string>");
    m.def("parse_config_file", &parse_config_file, py::arg("path"));

    // ------------------------------------------------------------------- io --
    m.def("flag_tokens", &flag_tokens, py::arg("flags"));
    m.def("format_grid_csv", &format_grid_csv, py::arg("result"));
    m.def("write_grid_csv", &write_grid_csv, py::arg("result"), py::arg("path"));
    m.def(
        "render_heatmap",
        [](const GridResult& result, HeatmapLayer layer) {
            const std::vector<std::uint8_t> px = render_heatmap(result, layer);
            return py::bytes(reinterpret_cast<const char*>(px.data()), px.size());
        },
        py::arg("result"), py::arg("layer") = HeatmapLayer::Mode,
        "Raw RGB bytes, 3 per cell, top pixel row = last y sample.");
    m.def(
        "format_ppm",
        [](py::bytes pixels, int width, int height) {
            const std::string raw = pixels;
            const std::vector<std::uint8_t> px(raw.begin(), raw.end());
            return py::bytes(format_ppm(px, width, height));
        },
        py::arg("pixels"), py::arg("width"), py::arg("height"));
    m.def(
        "write_heatmap_ppm",
        [](const GridResult& result, HeatmapLayer layer, const std::string& path) {
            write_ppm(render_heatmap(result, layer), result.nx(), result.ny(), path);
        },
        py::arg("result"), py::arg("layer"), py::arg("path"));
    m.def("axes_sidecar_json", &axes_sidecar_json, py::arg("spec"), py::arg("layer"));

    py::class_<CsvGrid>(m, "CsvGrid")
        .def_readonly("nx", &CsvGrid::nx)
        .def_readonly("ny", &CsvGrid::ny)
        .def_readonly("x_values", &CsvGrid::x_values)
        .def_readonly("y_values", &CsvGrid::y_values)
        .def_readonly("cells", &CsvGrid::cells);

    m.def("read_grid_csv", &read_grid_csv, py::arg("path"));
    m.def(
        "render_csv_heatmap",
        [](const CsvGrid& grid, HeatmapLayer layer) {
            const std::vector<std::uint8_t> px = render_csv_heatmap(grid, layer);
            return py::bytes(reinterpret_cast<const char*>(px.data()), px.size());
        },
        py::arg("grid"), py::arg("layer") = HeatmapLayer::Mode);
    m.def("run_config", &run_config, py::arg("config"), py::arg("workers") = 0,
          py::call_guard<py::gil_scoped_release>());
}
