// io.hpp — byte-deterministic CSV and PPM serialization of grid results
//
// CSV: header `x,y,q_hot,q_cold,work,mode,metric,kappa,flags`, one row per
// cell in row-major order (x fastest), numbers printed with 12 significant
// digits ("%.12g", C locale).  Cells without a metric (idle, forbidden,
// failed) leave the metric/kappa fields empty; failed cells also leave the
// heat, work and mode fields empty.  Flags serialize as `|`-joined tokens
// (no_isentrope, degenerate_metric, regen_deficit).
//
// Heatmap: binary PPM (P6, maxval 255), one pixel per cell; pixel row 0 is
// the top of the image and maps to the LAST y sample, so the y axis points
// up.  Mode layer palette:
//   engine (0,170,0)   refrigerator (0,200,200)   accelerator (220,0,0)
//   heater (230,210,0) idle (255,255,255)         forbidden (0,0,0)
//   failed cells (128,128,128)
// Kappa layer: linear ramp blue (0,0,255) at kappa=0 to yellow (255,255,0) at
// kappa=1, clamped; cells without kappa are white, failed cells gray.  The
// ramp colorizes the 12-significant-digit value the CSV stores, so re-rendering
// a written CSV is pixel-identical even when kappa sits within solver noise of
// a channel rounding boundary.
// Axis metadata goes to a sidecar JSON (`<image>.json`) instead of in-image
// legends.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtm/config.hpp"

namespace qtm {

struct Rgb {
    std::uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

Rgb mode_color(OperationalMode mode);
Rgb kappa_color(double kappa);  // kappa clamped to [0, 1]
inline constexpr Rgb kFailedCellColor{128, 128, 128};
inline constexpr Rgb kNoValueColor{255, 255, 255};

// `|`-joined flag tokens as they appear in the CSV flags column
// (no_isentrope, degenerate_metric, regen_deficit); empty for flags == 0.
std::string flag_tokens(unsigned flags);

// Exact bytes of the CSV serialization.
std::string format_grid_csv(const GridResult& result);
void write_grid_csv(const GridResult& result, const std::string& path);

// Raw RGB pixels, size 3 * nx * ny, top row first.
std::vector<std::uint8_t> render_heatmap(const GridResult& result, HeatmapLayer layer);

// Full PPM file bytes ("P6\n<w> <h>\n255\n" + pixels) and file writer.
std::string format_ppm(const std::vector<std::uint8_t>& pixels, int width, int height);
void write_ppm(const std::vector<std::uint8_t>& pixels, int width, int height,
               const std::string& path);

// Sidecar JSON describing axes, layer, cycle and palette for a rendered grid.
std::string axes_sidecar_json(const GridSpec& spec, HeatmapLayer layer);

// Minimal CSV reader for re-rendering: recovers grid shape (distinct x,y
// coordinates), per-cell mode/kappa/flags.  Throws ConfigError on malformed
// input.  render_csv_heatmap reproduces render_heatmap pixel-for-pixel when
// fed a CSV written by write_grid_csv.
struct CsvGrid {
    int nx = 0;
    int ny = 0;
    std::vector<double> x_values;  // size nx
    std::vector<double> y_values;  // size ny
    std::vector<GridCell> cells;   // row-major, x fastest
};

CsvGrid read_grid_csv(const std::string& path);
std::vector<std::uint8_t> render_csv_heatmap(const CsvGrid& grid, HeatmapLayer layer);

// Runs a parsed configuration end to end: evaluates the grid and writes the
// requested CSV / heatmap / sidecar files.  Returns the grid result.
GridResult run_config(const RunConfig& config, int workers = 0);

}  // namespace qtm
