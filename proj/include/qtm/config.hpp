// config.hpp — INI-style run configuration for sweeps
//
// Format: `key = value` lines grouped under [machine], [cycle], [grid] and
// [output] sections; `#` starts a comment at the beginning of a line or after
// whitespace; blank lines are ignored.  Unknown sections or keys, duplicate
// keys and malformed values are hard errors that carry line numbers.
//
// Keys:
//   [machine]  g, r, left_mode (scaled | fixed), omega_bar (Fixed mode only)
//   [cycle]    cycle (carnot | otto | stirling | stirling_regen),
//              omega0, omega1, t_cold, t_hot (fixed values; swept ones may be
//              omitted), tolerance (sign dead-band), carnot_kappa (true | false)
//   [grid]     x_param, x_min, x_max, x_count, y_param, y_min, y_max, y_count
//              (params: omega0 | omega1 | t_hot | t_cold)
//   [output]   csv, image, layer (mode | kappa)

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "qtm/sweep.hpp"

namespace qtm {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class HeatmapLayer { Mode, Kappa };

std::string_view to_string(HeatmapLayer layer);
HeatmapLayer layer_from_string(std::string_view name);  // throws std::invalid_argument

struct OutputSpec {
    std::string csv_path;    // empty: no CSV written
    std::string image_path;  // empty: no heatmap written
    HeatmapLayer layer = HeatmapLayer::Mode;
};

struct RunConfig {
    GridSpec grid;
    OutputSpec output;
};

// Parses and validates; `origin` names the source in error messages.
RunConfig parse_config_text(std::string_view text, std::string_view origin);
RunConfig parse_config_file(const std::string& path);

}  // namespace qtm
