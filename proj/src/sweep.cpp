// sweep.cpp — parallel grid evaluation with deterministic assembly

#include "qtm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace qtm {

std::string_view to_string(CycleKind kind) {
    switch (kind) {
        case CycleKind::Carnot: return "carnot";
        case CycleKind::Otto: return "otto";
        case CycleKind::Stirling: return "stirling";
        case CycleKind::StirlingRegen: return "stirling_regen";
    }
    throw std::logic_error("to_string: unknown CycleKind");
}

CycleKind cycle_from_string(std::string_view name) {
    if (name == "carnot") return CycleKind::Carnot;
    if (name == "otto") return CycleKind::Otto;
    if (name == "stirling") return CycleKind::Stirling;
    if (name == "stirling_regen") return CycleKind::StirlingRegen;
    throw std::invalid_argument("cycle_from_string: unknown cycle '" +
                                std::string(name) + "'");
}

std::string_view to_string(AxisParam param) {
    switch (param) {
        case AxisParam::Omega0: return "omega0";
        case AxisParam::Omega1: return "omega1";
        case AxisParam::THot: return "t_hot";
        case AxisParam::TCold: return "t_cold";
    }
    throw std::logic_error("to_string: unknown AxisParam");
}

AxisParam axis_param_from_string(std::string_view name) {
    if (name == "omega0") return AxisParam::Omega0;
    if (name == "omega1") return AxisParam::Omega1;
    if (name == "t_hot") return AxisParam::THot;
    if (name == "t_cold") return AxisParam::TCold;
    throw std::invalid_argument("axis_param_from_string: unknown parameter '" +
                                std::string(name) + "'");
}

double GridAxis::value(int i) const {
    return min + (max - min) * i / static_cast<double>(count - 1);
}

namespace {

bool is_temperature(AxisParam param) {
    return param == AxisParam::THot || param == AxisParam::TCold;
}

void validate_axis(const GridAxis& axis, const char* which) {
    const std::string name(which);
    if (axis.count < 2)
        throw std::invalid_argument("GridSpec." + name + ": count must be >= 2");
    if (!std::isfinite(axis.min) || !std::isfinite(axis.max) ||
        axis.min >= axis.max)
        throw std::invalid_argument("GridSpec." + name +
                                    ": range must satisfy min < max");
    if (is_temperature(axis.param) && axis.min <= 0.0)
        throw std::invalid_argument("GridSpec." + name +
                                    ": temperature range must stay > 0");
    if (!is_temperature(axis.param) && axis.min < 0.0)
        throw std::invalid_argument("GridSpec." + name +
                                    ": frequency range must stay >= 0");
}

void apply_axis(CyclePoint& point, AxisParam param, double value) {
    switch (param) {
        case AxisParam::Omega0: point.omega0 = value; break;
        case AxisParam::Omega1: point.omega1 = value; break;
        case AxisParam::THot: point.t_hot = value; break;
        case AxisParam::TCold: point.t_cold = value; break;
    }
}

int resolve_workers(int workers) {
    if (workers > 0) return workers;
    if (const char* env = std::getenv("QTM_THREADS")) {
        char* end = nullptr;
        const long parsed = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && parsed > 0 && parsed <= 1024)
            return static_cast<int>(parsed);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace

void GridSpec::validate() const {
    validate_axis(x_axis, "x_axis");
    validate_axis(y_axis, "y_axis");
    if (x_axis.param == y_axis.param)
        throw std::invalid_argument(
            "GridSpec: axes must sweep distinct parameters");
    if (!std::isfinite(classify_tolerance) || classify_tolerance <= 0.0)
        throw std::invalid_argument("GridSpec: classify_tolerance must be > 0");

    // Swept fields are overwritten per cell; validate the rest by seeding the
    // swept ones with in-range values.
    CyclePoint probe = base;
    apply_axis(probe, x_axis.param, x_axis.value(0) > 0.0 ? x_axis.value(0) : 1.0);
    apply_axis(probe, y_axis.param, y_axis.value(0) > 0.0 ? y_axis.value(0) : 1.0);
    probe.validate();
}

const GridCell& GridResult::at(int ix, int iy) const {
    if (ix < 0 || ix >= nx() || iy < 0 || iy >= ny())
        throw std::out_of_range("GridResult::at: cell index out of range");
    return cells[static_cast<size_t>(iy) * static_cast<size_t>(nx()) +
                 static_cast<size_t>(ix)];
}

CycleRecord evaluate_cycle(CycleKind kind, const CyclePoint& point) {
    switch (kind) {
        case CycleKind::Carnot: {
            const IsentropeBracket bracket = carnot_default_bracket(point);
            try {
                return run_carnot(point, bracket);
            } catch (const NoRootInBracket&) {
                return run_carnot(point, {bracket.lo, bracket.hi * 10.0});
            }
        }
        case CycleKind::Otto: return run_otto(point);
        case CycleKind::Stirling: return run_stirling(point);
        case CycleKind::StirlingRegen: return run_stirling_regen(point);
    }
    throw std::logic_error("evaluate_cycle: unknown CycleKind");
}

GridCell evaluate_cell(CycleKind kind, const CyclePoint& point,
                       double classify_tolerance, bool carnot_normalized_kappa) {
    GridCell cell;
    CycleRecord rec;
    try {
        rec = evaluate_cycle(kind, point);
    } catch (const NoRootInBracket&) {
        cell.flags |= kCellSolverFailed;
        return cell;
    }

    cell.q_hot = rec.q_hot;
    cell.q_cold = rec.q_cold;
    cell.work = rec.work_out;
    const PerformanceOptions options{classify_tolerance, carnot_normalized_kappa};
    const Performance perf = performance(rec, {point.t_cold, point.t_hot},
                                         kind == CycleKind::StirlingRegen, options);
    cell.mode = perf.mode;
    cell.metric = perf.metric;
    cell.kappa = perf.kappa;
    if (perf.degenerate_denominator) cell.flags |= kCellDegenerateMetric;
    if (kind == CycleKind::StirlingRegen && rec.regen_delta < 0.0)
        cell.flags |= kCellRegenDeficit;
    return cell;
}

GridResult run_grid(const GridSpec& spec, int workers) {
    spec.validate();

    GridResult result;
    result.spec = spec;
    const int nx = spec.x_axis.count;
    const int ny = spec.y_axis.count;
    result.cells.assign(static_cast<size_t>(nx) * static_cast<size_t>(ny),
                        GridCell{});

    const auto fill_rows = [&](int row_begin, int row_end) {
        for (int iy = row_begin; iy < row_end; ++iy) {
            const double y = spec.y_axis.value(iy);
            for (int ix = 0; ix < nx; ++ix) {
                CyclePoint pt = spec.base;
                apply_axis(pt, spec.x_axis.param, spec.x_axis.value(ix));
                apply_axis(pt, spec.y_axis.param, y);
                result.cells[static_cast<size_t>(iy) * static_cast<size_t>(nx) +
                             static_cast<size_t>(ix)] =
                    evaluate_cell(spec.cycle, pt, spec.classify_tolerance,
                                  spec.carnot_normalized_kappa);
            }
        }
    };

    const int requested = resolve_workers(workers);
    const int used = std::clamp(requested, 1, ny);
    if (used == 1) {
        fill_rows(0, ny);
        return result;
    }

    // Static contiguous row blocks; disjoint writes need no synchronization.
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(static_cast<size_t>(used));
    pool.reserve(static_cast<size_t>(used));
    for (int w = 0; w < used; ++w) {
        const int begin = static_cast<int>(static_cast<long>(ny) * w / used);
        const int end = static_cast<int>(static_cast<long>(ny) * (w + 1) / used);
        pool.emplace_back([&, w, begin, end] {
            try {
                fill_rows(begin, end);
            } catch (...) {
                errors[static_cast<size_t>(w)] = std::current_exception();
            }
        });
    }
    for (std::thread& t : pool) t.join();
    for (const std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);
    return result;
}

std::optional<double> locate_boundary(const GridResult& result,
                                      OperationalMode mode,
                                      const BoundaryScan& scan) {
    const bool along_x = scan.axis == ScanAxis::X;
    const GridAxis& scanned = along_x ? result.spec.x_axis : result.spec.y_axis;
    const int lines = along_x ? result.ny() : result.nx();
    const int steps = along_x ? result.nx() : result.ny();

    int line_begin = 0;
    int line_end = lines;
    if (scan.line.has_value()) {
        if (*scan.line < 0 || *scan.line >= lines)
            throw std::invalid_argument(
                "locate_boundary: scan line outside the grid");
        line_begin = *scan.line;
        line_end = *scan.line + 1;
    }

    std::optional<double> onset;
    for (int line = line_begin; line < line_end; ++line) {
        for (int i = 0; i < steps; ++i) {
            const GridCell& cell =
                along_x ? result.at(i, line) : result.at(line, i);
            if (cell.failed() || cell.mode != mode) continue;
            const double found =
                i == 0 ? scanned.value(0)
                       : 0.5 * (scanned.value(i - 1) + scanned.value(i));
            if (!onset || found < *onset) onset = found;
            break;
        }
    }
    return onset;
}

}  // namespace qtm
