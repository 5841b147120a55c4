// io.cpp — CSV and PPM serialization of grid results

#include "qtm/io.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtm {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr char kCsvHeader[] = "x,y,q_hot,q_cold,work,mode,metric,kappa,flags";

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

void append_cell_fields(std::string& out, const GridCell& cell) {
    if (cell.failed()) {
        out += ",,,,";  // q_hot, q_cold, work, mode stay empty
    } else {
        out += format_number(cell.q_hot);
        out += ',';
        out += format_number(cell.q_cold);
        out += ',';
        out += format_number(cell.work);
        out += ',';
        out += to_string(cell.mode);
        out += ',';
    }
    if (cell.metric) out += format_number(*cell.metric);
    out += ',';
    if (cell.kappa) out += format_number(*cell.kappa);
    out += ',';
    out += flag_tokens(cell.flags);
    out += '\n';
}

// The CSV is the canonical record, so the image colorizes the value the CSV
// stores: kappa is passed through the same 12-significant-digit round trip
// before the ramp lookup.  Otherwise a kappa sitting within solver noise of a
// channel rounding boundary (e.g. 255 * 0.5 = 127.5) could colorize
// differently before and after serialization.
double csv_quantized(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

Rgb cell_color(const GridCell& cell, HeatmapLayer layer) {
    if (cell.failed()) return kFailedCellColor;
    if (layer == HeatmapLayer::Mode) return mode_color(cell.mode);
    return cell.kappa ? kappa_color(csv_quantized(*cell.kappa)) : kNoValueColor;
}

ordered_json rgb_json(Rgb color) {
    return ordered_json::array({color.r, color.g, color.b});
}

[[noreturn]] void csv_fail(const std::string& path, int line, const std::string& message) {
    std::ostringstream out;
    out << path << ":" << line << ": " << message;
    throw ConfigError(out.str());
}

std::vector<std::string> split_fields(const std::string& line, char sep) {
    std::vector<std::string> fields;
    size_t start = 0;
    while (true) {
        const size_t pos = line.find(sep, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_csv_number(const std::string& path, int line, const std::string& field) {
    const char* begin = field.c_str();
    char* end = nullptr;
    errno = 0;
    const double parsed = std::strtod(begin, &end);
    if (field.empty() || end != begin + field.size() || errno == ERANGE)
        csv_fail(path, line, "invalid number '" + field + "'");
    return parsed;
}

// Tolerates CRLF line endings in hand-edited files.
std::string trim_csv_eol(const std::string& line) {
    if (!line.empty() && line.back() == '\r') return line.substr(0, line.size() - 1);
    return line;
}

unsigned parse_flag_tokens(const std::string& path, int line, const std::string& field) {
    unsigned flags = 0;
    if (field.empty()) return flags;
    for (const std::string& token : split_fields(field, '|')) {
        if (token == "no_isentrope")
            flags |= kCellSolverFailed;
        else if (token == "degenerate_metric")
            flags |= kCellDegenerateMetric;
        else if (token == "regen_deficit")
            flags |= kCellRegenDeficit;
        else
            csv_fail(path, line, "unknown flag '" + token + "'");
    }
    return flags;
}

}  // namespace

std::string flag_tokens(unsigned flags) {
    std::string out;
    const auto add = [&out](const char* token) {
        if (!out.empty()) out += '|';
        out += token;
    };
    if (flags & kCellSolverFailed) add("no_isentrope");
    if (flags & kCellDegenerateMetric) add("degenerate_metric");
    if (flags & kCellRegenDeficit) add("regen_deficit");
    return out;
}

Rgb mode_color(OperationalMode mode) {
    switch (mode) {
        case OperationalMode::Engine: return {0, 170, 0};
        case OperationalMode::Refrigerator: return {0, 200, 200};
        case OperationalMode::Accelerator: return {220, 0, 0};
        case OperationalMode::Heater: return {230, 210, 0};
        case OperationalMode::Idle: return {255, 255, 255};
        case OperationalMode::Forbidden: return {0, 0, 0};
    }
    return kNoValueColor;  // unreachable
}

Rgb kappa_color(double kappa) {
    const double t = std::clamp(kappa, 0.0, 1.0);
    const auto channel = [](double v) {
        return static_cast<std::uint8_t>(std::lround(255.0 * v));
    };
    return {channel(t), channel(t), channel(1.0 - t)};
}

std::string format_grid_csv(const GridResult& result) {
    std::string out = kCsvHeader;
    out += '\n';
    for (int iy = 0; iy < result.ny(); ++iy) {
        const std::string y = format_number(result.spec.y_axis.value(iy));
        for (int ix = 0; ix < result.nx(); ++ix) {
            out += format_number(result.spec.x_axis.value(ix));
            out += ',';
            out += y;
            out += ',';
            append_cell_fields(out, result.at(ix, iy));
        }
    }
    return out;
}

void write_grid_csv(const GridResult& result, const std::string& path) {
    write_text_file(format_grid_csv(result), path);
}

std::vector<std::uint8_t> render_heatmap(const GridResult& result, HeatmapLayer layer) {
    std::vector<std::uint8_t> pixels;
    pixels.reserve(3u * static_cast<size_t>(result.nx()) * static_cast<size_t>(result.ny()));
    for (int iy = result.ny() - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < result.nx(); ++ix) {
            const Rgb color = cell_color(result.at(ix, iy), layer);
            pixels.push_back(color.r);
            pixels.push_back(color.g);
            pixels.push_back(color.b);
        }
    }
    return pixels;
}

std::string format_ppm(const std::vector<std::uint8_t>& pixels, int width, int height) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("ppm dimensions must be positive");
    if (pixels.size() != 3u * static_cast<size_t>(width) * static_cast<size_t>(height))
        throw std::invalid_argument("ppm pixel buffer size does not match dimensions");
    std::string out = "P6\n";
    out += std::to_string(width);
    out += ' ';
    out += std::to_string(height);
    out += "\n255\n";
    out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
    return out;
}

void write_ppm(const std::vector<std::uint8_t>& pixels, int width, int height,
               const std::string& path) {
    write_text_file(format_ppm(pixels, width, height), path);
}

std::string axes_sidecar_json(const GridSpec& spec, HeatmapLayer layer) {
    const auto axis_json = [](const GridAxis& axis) {
        return ordered_json{{"param", std::string(to_string(axis.param))},
                            {"min", axis.min},
                            {"max", axis.max},
                            {"count", axis.count}};
    };

    ordered_json j;
    j["layer"] = std::string(to_string(layer));
    j["cycle"] = std::string(to_string(spec.cycle));
    j["x"] = axis_json(spec.x_axis);
    j["y"] = axis_json(spec.y_axis);
    j["machine"] = ordered_json{
        {"g", spec.base.params.g},
        {"r", spec.base.params.r},
        {"left_mode", spec.base.params.left_mode == LeftMode::Fixed ? "fixed" : "scaled"},
        {"omega_bar_fixed", spec.base.params.omega_bar_fixed},
    };
    j["point"] = ordered_json{
        {"omega0", spec.base.omega0},
        {"omega1", spec.base.omega1},
        {"t_cold", spec.base.t_cold},
        {"t_hot", spec.base.t_hot},
    };
    j["classify_tolerance"] = spec.classify_tolerance;
    j["carnot_normalized_kappa"] = spec.carnot_normalized_kappa;
    if (layer == HeatmapLayer::Mode) {
        j["palette"] = ordered_json{
            {"engine", rgb_json(mode_color(OperationalMode::Engine))},
            {"refrigerator", rgb_json(mode_color(OperationalMode::Refrigerator))},
            {"accelerator", rgb_json(mode_color(OperationalMode::Accelerator))},
            {"heater", rgb_json(mode_color(OperationalMode::Heater))},
            {"idle", rgb_json(mode_color(OperationalMode::Idle))},
            {"forbidden", rgb_json(mode_color(OperationalMode::Forbidden))},
            {"failed", rgb_json(kFailedCellColor)},
        };
    } else {
        j["colormap"] = ordered_json{
            {"kappa_zero", rgb_json(kappa_color(0.0))},
            {"kappa_one", rgb_json(kappa_color(1.0))},
            {"no_value", rgb_json(kNoValueColor)},
            {"failed", rgb_json(kFailedCellColor)},
        };
    }
    return j.dump(2) + "\n";
}

CsvGrid read_grid_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open csv file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;

    if (!std::getline(stream, line) || trim_csv_eol(line) != kCsvHeader)
        throw ConfigError(path + ": missing header '" + kCsvHeader + "'");
    ++line_no;

    struct Row {
        double x = 0.0;
        double y = 0.0;
        GridCell cell;
    };
    std::vector<Row> rows;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string body = trim_csv_eol(line);
        if (body.empty()) continue;
        const std::vector<std::string> fields = split_fields(body, ',');
        if (fields.size() != 9) {
            std::ostringstream msg;
            msg << "expected 9 fields, got " << fields.size();
            csv_fail(path, line_no, msg.str());
        }

        Row row;
        row.x = parse_csv_number(path, line_no, fields[0]);
        row.y = parse_csv_number(path, line_no, fields[1]);
        row.cell.flags = parse_flag_tokens(path, line_no, fields[8]);

        if (!fields[6].empty()) row.cell.metric = parse_csv_number(path, line_no, fields[6]);
        if (!fields[7].empty()) row.cell.kappa = parse_csv_number(path, line_no, fields[7]);

        if (fields[5].empty()) {
            if (!row.cell.failed())
                csv_fail(path, line_no, "empty mode on a cell without the no_isentrope flag");
        } else {
            try {
                row.cell.mode = mode_from_string(fields[5]);
            } catch (const std::invalid_argument&) {
                csv_fail(path, line_no, "invalid value for mode: '" + fields[5] + "'");
            }
            row.cell.q_hot = parse_csv_number(path, line_no, fields[2]);
            row.cell.q_cold = parse_csv_number(path, line_no, fields[3]);
            row.cell.work = parse_csv_number(path, line_no, fields[4]);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ConfigError(path + ": no data rows");

    CsvGrid grid;
    size_t nx = 1;
    while (nx < rows.size() && rows[nx].y == rows[0].y) ++nx;
    if (rows.size() % nx != 0)
        throw ConfigError(path + ": rows do not form a row-major grid");
    grid.nx = static_cast<int>(nx);
    grid.ny = static_cast<int>(rows.size() / nx);
    for (size_t i = 0; i < nx; ++i) grid.x_values.push_back(rows[i].x);
    for (size_t j = 0; j < rows.size() / nx; ++j) grid.y_values.push_back(rows[j * nx].y);

    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].x != grid.x_values[i % nx] || rows[i].y != grid.y_values[i / nx])
            throw ConfigError(path + ": rows do not form a row-major grid");
        grid.cells.push_back(rows[i].cell);
    }
    return grid;
}

std::vector<std::uint8_t> render_csv_heatmap(const CsvGrid& grid, HeatmapLayer layer) {
    std::vector<std::uint8_t> pixels;
    pixels.reserve(3u * static_cast<size_t>(grid.nx) * static_cast<size_t>(grid.ny));
    for (int iy = grid.ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const Rgb color =
                cell_color(grid.cells[static_cast<size_t>(iy) * grid.nx + ix], layer);
            pixels.push_back(color.r);
            pixels.push_back(color.g);
            pixels.push_back(color.b);
        }
    }
    return pixels;
}

GridResult run_config(const RunConfig& config, int workers) {
    GridResult result = run_grid(config.grid, workers);
    if (!config.output.csv_path.empty()) write_grid_csv(result, config.output.csv_path);
    if (!config.output.image_path.empty()) {
        write_ppm(render_heatmap(result, config.output.layer), result.nx(), result.ny(),
                  config.output.image_path);
        write_text_file(axes_sidecar_json(config.grid, config.output.layer),
                        config.output.image_path + ".json");
    }
    return result;
}

}  // namespace qtm
