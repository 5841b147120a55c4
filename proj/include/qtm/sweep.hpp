// sweep.hpp — deterministic 2-D parameter-plane sweeps over cycle runs
//
// A GridSpec sweeps two CyclePoint fields over inclusive linear ranges; every
// other field comes from the base point.  Cells are independent, so the grid
// is evaluated in parallel over row blocks and assembled into a preallocated
// row-major buffer (x fastest) — results are identical for any worker count.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qtm/classifier.hpp"

namespace qtm {

enum class CycleKind { Carnot, Otto, Stirling, StirlingRegen };

// Lowercase names: carnot | otto | stirling | stirling_regen.
std::string_view to_string(CycleKind kind);
CycleKind cycle_from_string(std::string_view name);  // throws std::invalid_argument

enum class AxisParam { Omega0, Omega1, THot, TCold };

std::string_view to_string(AxisParam param);
AxisParam axis_param_from_string(std::string_view name);  // throws std::invalid_argument

struct GridAxis {
    AxisParam param = AxisParam::Omega0;
    double min = 0.0;
    double max = 0.0;
    int count = 0;  // >= 2; endpoints included

    double value(int i) const;  // min + (max - min) * i / (count - 1)
};

struct GridSpec {
    CycleKind cycle = CycleKind::Otto;
    GridAxis x_axis;
    GridAxis y_axis;
    CyclePoint base;  // fixed values for the non-swept fields + machine params
    double classify_tolerance = kSignTolerance;
    bool carnot_normalized_kappa = false;

    // Throws std::invalid_argument: bad counts, min >= max, duplicate axis
    // parameters, non-positive temperature ranges, negative frequency ranges,
    // or invalid fixed fields.
    void validate() const;
};

// Per-cell flags (bitmask).
inline constexpr unsigned kCellSolverFailed = 1u;      // no isentrope endpoint in bracket
inline constexpr unsigned kCellDegenerateMetric = 2u;  // metric denominator near zero
inline constexpr unsigned kCellRegenDeficit = 4u;      // regenerated cycle with negative imbalance

struct GridCell {
    double q_hot = 0.0;
    double q_cold = 0.0;
    double work = 0.0;
    OperationalMode mode = OperationalMode::Idle;
    std::optional<double> metric;
    std::optional<double> kappa;
    unsigned flags = 0;

    bool failed() const { return flags & kCellSolverFailed; }
};

struct GridResult {
    GridSpec spec;
    std::vector<GridCell> cells;  // row-major, x fastest

    const GridCell& at(int ix, int iy) const;
    int nx() const { return spec.x_axis.count; }
    int ny() const { return spec.y_axis.count; }
};

// Runs one cycle at one point.  Carnot uses the default bracket and retries
// once with a tenfold-wider one before letting NoRootInBracket escape.
CycleRecord evaluate_cycle(CycleKind kind, const CyclePoint& point);

// Same run packaged exactly as a grid cell: heats, classified mode, metric,
// kappa and flags.  Solver failures come back flagged instead of thrown.
GridCell evaluate_cell(CycleKind kind, const CyclePoint& point,
                       double classify_tolerance = kSignTolerance,
                       bool carnot_normalized_kappa = false);

// Evaluates every cell.  Per-cell solver failures are flagged, never fatal.
// workers = 0 reads QTM_THREADS (positive integer) and falls back to the
// hardware concurrency; any worker count yields bit-identical results.
GridResult run_grid(const GridSpec& spec, int workers = 0);

// Boundary scan: walk the grid along one axis in ascending coordinate order
// and report where a mode first appears.  With `line` set, only that row or
// column (index on the perpendicular axis) is scanned; otherwise the smallest
// onset over all lines is returned.  The onset is placed halfway between the
// last cell without the mode and the first cell with it (linear interpolation
// of the step); a mode present from the first cell reports that coordinate.
// Returns nullopt when the mode never appears.
enum class ScanAxis { X, Y };

struct BoundaryScan {
    ScanAxis axis = ScanAxis::X;
    std::optional<int> line;
};

std::optional<double> locate_boundary(const GridResult& result, OperationalMode mode,
                                      const BoundaryScan& scan);

}  // namespace qtm
