// config.cpp — INI-style run-configuration parser

#include "qtm/config.hpp"

#include <cctype>
#include <cerrno>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>

namespace qtm {

std::string_view to_string(HeatmapLayer layer) {
    return layer == HeatmapLayer::Mode ? "mode" : "kappa";
}

HeatmapLayer layer_from_string(std::string_view name) {
    if (name == "mode") return HeatmapLayer::Mode;
    if (name == "kappa") return HeatmapLayer::Kappa;
    throw std::invalid_argument("unknown heatmap layer: '" + std::string(name) + "'");
}

namespace {

std::string trim(std::string_view text) {
    size_t begin = 0;
    size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

[[noreturn]] void fail(std::string_view origin, int line, const std::string& message) {
    std::ostringstream out;
    out << origin << ":" << line << ": " << message;
    throw ConfigError(out.str());
}

[[noreturn]] void fail(std::string_view origin, const std::string& message) {
    throw ConfigError(std::string(origin) + ": " + message);
}

double parse_double(std::string_view origin, int line, const std::string& key,
                    const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    errno = 0;
    const double parsed = std::strtod(begin, &end);
    if (end != begin + value.size() || errno == ERANGE || !std::isfinite(parsed))
        fail(origin, line, "invalid number for " + key + ": '" + value + "'");
    return parsed;
}

int parse_int(std::string_view origin, int line, const std::string& key,
              const std::string& value) {
    const char* begin = value.c_str();
    char* end = nullptr;
    errno = 0;
    const long parsed = std::strtol(begin, &end, 10);
    if (end != begin + value.size() || errno == ERANGE || parsed < INT_MIN || parsed > INT_MAX)
        fail(origin, line, "invalid integer for " + key + ": '" + value + "'");
    return static_cast<int>(parsed);
}

bool parse_bool(std::string_view origin, int line, const std::string& key,
                const std::string& value) {
    if (value == "true") return true;
    if (value == "false") return false;
    fail(origin, line, "invalid boolean for " + key + ": '" + value + "' (use true or false)");
}

// Wraps the enum *_from_string helpers so parse errors carry the line number.
template <typename Fn>
auto parse_enum(std::string_view origin, int line, const std::string& key,
                const std::string& value, Fn&& from_string) {
    try {
        return from_string(value);
    } catch (const std::invalid_argument&) {
        fail(origin, line, "invalid value for " + key + ": '" + value + "'");
    }
}

// Strips a `#` comment that sits at the start of the line or after whitespace.
std::string strip_comment(const std::string& line) {
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] != '#') continue;
        if (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))
            return line.substr(0, i);
    }
    return line;
}

}  // namespace

RunConfig parse_config_text(std::string_view text, std::string_view origin) {
    RunConfig config;

    std::string section;                       // current [section]; empty before the first
    std::map<std::string, int> first_line;     // "section.key" -> line of first appearance
    std::map<std::string, bool> have;          // presence of optional/required keys
    int omega_bar_line = 0;

    std::istringstream stream{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                fail(origin, line_no, "malformed section header: '" + line + "'");
            const std::string name = trim(line.substr(1, line.size() - 2));
            if (name != "machine" && name != "cycle" && name != "grid" && name != "output")
                fail(origin, line_no, "unknown section [" + name + "]");
            section = name;
            continue;
        }

        const size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(origin, line_no, "expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(origin, line_no, "expected 'key = value', got '" + line + "'");
        if (section.empty())
            fail(origin, line_no, "key '" + key + "' appears before any section");
        if (value.empty())
            fail(origin, line_no, "empty value for key '" + key + "'");

        const std::string slot = section + "." + key;
        if (auto [it, inserted] = first_line.emplace(slot, line_no); !inserted) {
            std::ostringstream msg;
            msg << "duplicate key '" << key << "' in [" << section << "] (lines "
                << it->second << " and " << line_no << ")";
            fail(origin, line_no, msg.str());
        }
        have[slot] = true;

        auto number = [&] { return parse_double(origin, line_no, key, value); };
        auto integer = [&] { return parse_int(origin, line_no, key, value); };
        auto boolean = [&] { return parse_bool(origin, line_no, key, value); };

        GridSpec& grid = config.grid;
        if (section == "machine") {
            if (key == "g") {
                grid.base.params.g = number();
            } else if (key == "r") {
                grid.base.params.r = number();
            } else if (key == "left_mode") {
                grid.base.params.left_mode =
                    parse_enum(origin, line_no, key, value, [](const std::string& v) {
                        if (v == "scaled") return LeftMode::Scaled;
                        if (v == "fixed") return LeftMode::Fixed;
                        throw std::invalid_argument(v);
                    });
            } else if (key == "omega_bar") {
                grid.base.params.omega_bar_fixed = number();
                omega_bar_line = line_no;
            } else {
                fail(origin, line_no, "unknown key '" + key + "' in [machine]");
            }
        } else if (section == "cycle") {
            if (key == "cycle") {
                grid.cycle = parse_enum(origin, line_no, key, value,
                                        [](const std::string& v) { return cycle_from_string(v); });
            } else if (key == "omega0") {
                grid.base.omega0 = number();
            } else if (key == "omega1") {
                grid.base.omega1 = number();
            } else if (key == "t_cold") {
                grid.base.t_cold = number();
                if (grid.base.t_cold <= 0.0) fail(origin, line_no, "t_cold must be > 0");
            } else if (key == "t_hot") {
                grid.base.t_hot = number();
                if (grid.base.t_hot <= 0.0) fail(origin, line_no, "t_hot must be > 0");
            } else if (key == "tolerance") {
                grid.classify_tolerance = number();
                if (grid.classify_tolerance <= 0.0)
                    fail(origin, line_no, "tolerance must be > 0");
            } else if (key == "carnot_kappa") {
                grid.carnot_normalized_kappa = boolean();
            } else {
                fail(origin, line_no, "unknown key '" + key + "' in [cycle]");
            }
        } else if (section == "grid") {
            auto axis_param = [&] {
                return parse_enum(origin, line_no, key, value, [](const std::string& v) {
                    return axis_param_from_string(v);
                });
            };
            if (key == "x_param") {
                grid.x_axis.param = axis_param();
            } else if (key == "x_min") {
                grid.x_axis.min = number();
            } else if (key == "x_max") {
                grid.x_axis.max = number();
            } else if (key == "x_count") {
                grid.x_axis.count = integer();
            } else if (key == "y_param") {
                grid.y_axis.param = axis_param();
            } else if (key == "y_min") {
                grid.y_axis.min = number();
            } else if (key == "y_max") {
                grid.y_axis.max = number();
            } else if (key == "y_count") {
                grid.y_axis.count = integer();
            } else {
                fail(origin, line_no, "unknown key '" + key + "' in [grid]");
            }
        } else {  // output
            if (key == "csv") {
                config.output.csv_path = value;
            } else if (key == "image") {
                config.output.image_path = value;
            } else if (key == "layer") {
                config.output.layer = parse_enum(origin, line_no, key, value,
                                                 [](const std::string& v) {
                                                     return layer_from_string(v);
                                                 });
            } else {
                fail(origin, line_no, "unknown key '" + key + "' in [output]");
            }
        }
    }

    if (omega_bar_line != 0 && config.grid.base.params.left_mode != LeftMode::Fixed)
        fail(origin, omega_bar_line, "omega_bar requires left_mode = fixed");

    if (!have["cycle.cycle"]) fail(origin, "missing key 'cycle' in [cycle]");
    for (const char* key : {"x_param", "x_min", "x_max", "x_count",
                            "y_param", "y_min", "y_max", "y_count"}) {
        if (!have["grid." + std::string(key)])
            fail(origin, "missing key '" + std::string(key) + "' in [grid]");
    }

    // Point fields must come from either [cycle] or a grid axis.
    const auto swept = [&](AxisParam param) {
        return config.grid.x_axis.param == param || config.grid.y_axis.param == param;
    };
    const std::pair<const char*, AxisParam> point_keys[] = {
        {"omega0", AxisParam::Omega0},
        {"omega1", AxisParam::Omega1},
        {"t_cold", AxisParam::TCold},
        {"t_hot", AxisParam::THot},
    };
    for (const auto& [key, param] : point_keys) {
        if (!have["cycle." + std::string(key)] && !swept(param))
            fail(origin, "missing key '" + std::string(key) +
                             "' in [cycle] (not swept by the grid)");
    }

    try {
        config.grid.validate();
    } catch (const std::invalid_argument& e) {
        fail(origin, e.what());
    }
    return config;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config_text(buffer.str(), path);
}

}  // namespace qtm
