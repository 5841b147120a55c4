// qtm_main.cpp — command-line front end
//
// Subcommands:
//   spectrum  energy levels and mixing angle at one frequency
//   state     thermal populations, energy and entropy at one (omega, T)
//   cycle     one cycle at one working point, printed as a flat JSON object
//             whose keys match the sweep CSV columns
//   sweep     config-driven 2-D parameter sweep writing CSV / heatmap files
//   render    recolor an existing sweep CSV into a heatmap
//
// Exit codes: 0 success; 1 validation or input error; 2 sweep whose cells all
// failed to solve.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <limits>
#include <string>

#include "qtm/config.hpp"
#include "qtm/io.hpp"

using nlohmann::ordered_json;

namespace {

constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();

bool is_set(double value) { return !std::isnan(value); }

// Machine flags shared by every subcommand; NaN / empty string means "not
// given on the command line" so config-file values survive unless overridden.
struct MachineFlags {
    double g = kUnset;
    double r = kUnset;
    double omega_bar = kUnset;
    std::string left_mode;
};

void add_machine_flags(CLI::App& cmd, MachineFlags& flags) {
    cmd.add_option("--g", flags.g, "transverse coupling strength");
    cmd.add_option("--r", flags.r, "left/right splitting ratio (scaled mode)");
    cmd.add_option("--left-mode", flags.left_mode,
                   "left splitting rule: scaled | fixed")
        ->check(CLI::IsMember({"scaled", "fixed"}));
    cmd.add_option("--omega-bar", flags.omega_bar,
                   "left splitting value (fixed mode only)");
}

void apply_machine_flags(const MachineFlags& flags, qtm::MachineParams& params) {
    if (is_set(flags.g)) params.g = flags.g;
    if (is_set(flags.r)) params.r = flags.r;
    if (!flags.left_mode.empty())
        params.left_mode = flags.left_mode == "fixed" ? qtm::LeftMode::Fixed
                                                      : qtm::LeftMode::Scaled;
    if (is_set(flags.omega_bar)) {
        if (params.left_mode != qtm::LeftMode::Fixed)
            throw std::invalid_argument("--omega-bar requires --left-mode fixed");
        params.omega_bar_fixed = flags.omega_bar;
    }
}

qtm::MachineParams machine_from(const std::string& config_path,
                                const MachineFlags& flags) {
    qtm::MachineParams params;
    if (!config_path.empty())
        params = qtm::parse_config_file(config_path).grid.base.params;
    apply_machine_flags(flags, params);
    params.validate();
    return params;
}

void print_json(const ordered_json& j) { std::printf("%s\n", j.dump().c_str()); }

// ---------------------------------------------------------------- spectrum --

struct SpectrumArgs {
    std::string config_path;
    MachineFlags machine;
    double omega = 0.0;
};

int run_spectrum(const SpectrumArgs& args) {
    const qtm::MachineParams params = machine_from(args.config_path, args.machine);
    const qtm::Spectrum s = qtm::build_spectrum(params, args.omega);
    ordered_json j;
    j["omega"] = s.omega;
    j["omega_bar"] = s.omega_bar;
    j["big_omega"] = s.big_omega;
    j["theta"] = s.theta;
    j["energies"] = s.energies;
    print_json(j);
    return 0;
}

// ------------------------------------------------------------------- state --

struct StateArgs {
    std::string config_path;
    MachineFlags machine;
    double omega = 0.0;
    double temperature = 0.0;
};

int run_state(const StateArgs& args) {
    const qtm::MachineParams params = machine_from(args.config_path, args.machine);
    const qtm::Spectrum s = qtm::build_spectrum(params, args.omega);
    const qtm::ThermalState state = qtm::thermal_state(s, args.temperature);
    ordered_json j;
    j["omega"] = s.omega;
    j["t"] = args.temperature;
    j["beta"] = state.beta;
    j["log_z"] = state.log_z;
    j["populations"] = state.populations;
    j["energy"] = qtm::internal_energy(state, s);
    j["entropy"] = qtm::entropy(state, s);
    print_json(j);
    return 0;
}

// ------------------------------------------------------------------- cycle --

struct CycleArgs {
    std::string config_path;
    MachineFlags machine;
    std::string cycle_name;
    double omega0 = kUnset;
    double omega1 = kUnset;
    double t_cold = kUnset;
    double t_hot = kUnset;
    double tolerance = kUnset;
    std::string carnot_kappa;  // "", "true", "false"
};

int run_cycle(const CycleArgs& args) {
    qtm::CycleKind kind{};
    bool have_kind = false;
    qtm::CyclePoint point;
    double tolerance = qtm::kSignTolerance;
    bool carnot_kappa = false;

    if (args.config_path.empty()) {
        point.omega0 = point.omega1 = point.t_cold = point.t_hot = kUnset;
    } else {
        const qtm::RunConfig config = qtm::parse_config_file(args.config_path);
        kind = config.grid.cycle;
        have_kind = true;
        point = config.grid.base;
        tolerance = config.grid.classify_tolerance;
        carnot_kappa = config.grid.carnot_normalized_kappa;
    }

    if (!args.cycle_name.empty()) {
        kind = qtm::cycle_from_string(args.cycle_name);
        have_kind = true;
    }
    if (!have_kind)
        throw std::invalid_argument("missing --cycle (or a --config that names one)");

    if (is_set(args.omega0)) point.omega0 = args.omega0;
    if (is_set(args.omega1)) point.omega1 = args.omega1;
    if (is_set(args.t_cold)) point.t_cold = args.t_cold;
    if (is_set(args.t_hot)) point.t_hot = args.t_hot;
    if (is_set(args.tolerance)) tolerance = args.tolerance;
    if (!args.carnot_kappa.empty()) carnot_kappa = args.carnot_kappa == "true";

    const std::pair<const char*, double> required[] = {
        {"--omega0", point.omega0},
        {"--omega1", point.omega1},
        {"--t-cold", point.t_cold},
        {"--t-hot", point.t_hot},
    };
    for (const auto& [name, value] : required) {
        if (!is_set(value))
            throw std::invalid_argument(std::string("missing ") + name);
    }
    apply_machine_flags(args.machine, point.params);
    point.validate();
    if (!std::isfinite(tolerance) || tolerance <= 0.0)
        throw std::invalid_argument("--tolerance must be > 0");

    const qtm::GridCell cell =
        qtm::evaluate_cell(kind, point, tolerance, carnot_kappa);
    if (cell.failed()) {
        std::fprintf(stderr,
                     "error: no entropy-matched adiabat endpoint inside the "
                     "search bracket at this working point\n");
        return 1;
    }

    ordered_json j;
    j["q_hot"] = cell.q_hot;
    j["q_cold"] = cell.q_cold;
    j["work"] = cell.work;
    j["mode"] = std::string(qtm::to_string(cell.mode));
    j["metric"] = cell.metric ? ordered_json(*cell.metric) : ordered_json(nullptr);
    j["kappa"] = cell.kappa ? ordered_json(*cell.kappa) : ordered_json(nullptr);
    j["flags"] = qtm::flag_tokens(cell.flags);
    print_json(j);
    return 0;
}

// ------------------------------------------------------------------- sweep --

struct SweepArgs {
    std::string config_path;
    MachineFlags machine;
    double omega0 = kUnset;
    double omega1 = kUnset;
    double t_cold = kUnset;
    double t_hot = kUnset;
    double tolerance = kUnset;
    std::string carnot_kappa;
    std::string csv_path;
    std::string image_path;
    std::string layer;
    int workers = 0;
};

int run_sweep(const SweepArgs& args) {
    qtm::RunConfig config = qtm::parse_config_file(args.config_path);

    apply_machine_flags(args.machine, config.grid.base.params);
    if (is_set(args.omega0)) config.grid.base.omega0 = args.omega0;
    if (is_set(args.omega1)) config.grid.base.omega1 = args.omega1;
    if (is_set(args.t_cold)) config.grid.base.t_cold = args.t_cold;
    if (is_set(args.t_hot)) config.grid.base.t_hot = args.t_hot;
    if (is_set(args.tolerance)) config.grid.classify_tolerance = args.tolerance;
    if (!args.carnot_kappa.empty())
        config.grid.carnot_normalized_kappa = args.carnot_kappa == "true";
    if (!args.csv_path.empty()) config.output.csv_path = args.csv_path;
    if (!args.image_path.empty()) config.output.image_path = args.image_path;
    if (!args.layer.empty()) config.output.layer = qtm::layer_from_string(args.layer);
    config.grid.validate();

    const qtm::GridResult result = qtm::run_config(config, args.workers);

    size_t failed = 0;
    for (const qtm::GridCell& cell : result.cells)
        if (cell.failed()) ++failed;
    std::printf("grid %dx%d cycle=%s: %zu cells, %zu solver failures\n",
                result.nx(), result.ny(),
                std::string(qtm::to_string(config.grid.cycle)).c_str(),
                result.cells.size(), failed);
    if (!config.output.csv_path.empty())
        std::printf("wrote %s\n", config.output.csv_path.c_str());
    if (!config.output.image_path.empty())
        std::printf("wrote %s and %s.json\n", config.output.image_path.c_str(),
                    config.output.image_path.c_str());

    if (failed == result.cells.size()) {
        std::fprintf(stderr, "error: every grid cell failed to solve\n");
        return 2;
    }
    return 0;
}

// ------------------------------------------------------------------ render --

struct RenderArgs {
    std::string csv_path;
    std::string image_path;
    std::string layer = "mode";
};

int run_render(const RenderArgs& args) {
    const qtm::CsvGrid grid = qtm::read_grid_csv(args.csv_path);
    const qtm::HeatmapLayer layer = qtm::layer_from_string(args.layer);
    qtm::write_ppm(qtm::render_csv_heatmap(grid, layer), grid.nx, grid.ny,
                   args.image_path);
    std::printf("wrote %s (%dx%d)\n", args.image_path.c_str(), grid.nx, grid.ny);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-qubit thermal machine: spectra, cycles and mode maps"};
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "energy levels at one frequency");
    spectrum_cmd->add_option("--config", spectrum_args.config_path,
                             "config file supplying machine parameters");
    add_machine_flags(*spectrum_cmd, spectrum_args.machine);
    spectrum_cmd->add_option("--omega", spectrum_args.omega,
                             "tunable right-qubit splitting")
        ->required();

    StateArgs state_args;
    CLI::App* state_cmd =
        app.add_subcommand("state", "thermal state at one frequency and temperature");
    state_cmd->add_option("--config", state_args.config_path,
                          "config file supplying machine parameters");
    add_machine_flags(*state_cmd, state_args.machine);
    state_cmd->add_option("--omega", state_args.omega,
                          "tunable right-qubit splitting")
        ->required();
    state_cmd->add_option("--t", state_args.temperature, "bath temperature")
        ->required();

    CycleArgs cycle_args;
    CLI::App* cycle_cmd =
        app.add_subcommand("cycle", "run one cycle at one working point");
    cycle_cmd->add_option("--config", cycle_args.config_path,
                          "config file supplying defaults for every flag");
    add_machine_flags(*cycle_cmd, cycle_args.machine);
    cycle_cmd->add_option("--cycle", cycle_args.cycle_name,
                          "carnot | otto | stirling | stirling_regen")
        ->check(CLI::IsMember({"carnot", "otto", "stirling", "stirling_regen"}));
    cycle_cmd->add_option("--omega0", cycle_args.omega0, "frequency endpoint A");
    cycle_cmd->add_option("--omega1", cycle_args.omega1, "frequency endpoint B");
    cycle_cmd->add_option("--t-cold,--tc", cycle_args.t_cold, "cold bath temperature");
    cycle_cmd->add_option("--t-hot,--th", cycle_args.t_hot, "hot bath temperature");
    cycle_cmd->add_option("--tolerance", cycle_args.tolerance,
                          "sign dead-band for mode classification");
    cycle_cmd->add_option("--carnot-kappa", cycle_args.carnot_kappa,
                          "normalize engine kappa by the reversible bound")
        ->check(CLI::IsMember({"true", "false"}));

    SweepArgs sweep_args;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "evaluate a 2-D parameter plane from a config");
    sweep_cmd->add_option("--config", sweep_args.config_path, "sweep config file")
        ->required();
    add_machine_flags(*sweep_cmd, sweep_args.machine);
    sweep_cmd->add_option("--omega0", sweep_args.omega0, "fixed frequency endpoint A");
    sweep_cmd->add_option("--omega1", sweep_args.omega1, "fixed frequency endpoint B");
    sweep_cmd->add_option("--t-cold,--tc", sweep_args.t_cold, "cold bath temperature");
    sweep_cmd->add_option("--t-hot,--th", sweep_args.t_hot, "hot bath temperature");
    sweep_cmd->add_option("--tolerance", sweep_args.tolerance,
                          "sign dead-band for mode classification");
    sweep_cmd->add_option("--carnot-kappa", sweep_args.carnot_kappa,
                          "normalize engine kappa by the reversible bound")
        ->check(CLI::IsMember({"true", "false"}));
    sweep_cmd->add_option("--csv", sweep_args.csv_path, "override the CSV output path");
    sweep_cmd->add_option("--image", sweep_args.image_path,
                          "override the heatmap output path");
    sweep_cmd->add_option("--layer", sweep_args.layer, "heatmap layer: mode | kappa")
        ->check(CLI::IsMember({"mode", "kappa"}));
    sweep_cmd->add_option("--workers", sweep_args.workers,
                          "worker threads (0 = QTM_THREADS or hardware)")
        ->check(CLI::Range(0, 1024));

    RenderArgs render_args;
    CLI::App* render_cmd =
        app.add_subcommand("render", "recolor an existing sweep CSV into a heatmap");
    render_cmd->add_option("--csv", render_args.csv_path, "input CSV")->required();
    render_cmd->add_option("--image", render_args.image_path, "output PPM")->required();
    render_cmd->add_option("--layer", render_args.layer, "heatmap layer: mode | kappa")
        ->check(CLI::IsMember({"mode", "kappa"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (spectrum_cmd->parsed()) return run_spectrum(spectrum_args);
        if (state_cmd->parsed()) return run_state(state_args);
        if (cycle_cmd->parsed()) return run_cycle(cycle_args);
        if (sweep_cmd->parsed()) return run_sweep(sweep_args);
        if (render_cmd->parsed()) return run_render(render_args);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
