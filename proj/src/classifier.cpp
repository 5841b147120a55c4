// classifier.cpp — sign-table mode classification and performance metrics

#include "qtm/classifier.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qtm {

namespace {

void require_temperatures(const BathTemperatures& temps) {
    if (!std::isfinite(temps.t_cold) || temps.t_cold <= 0.0 ||
        !std::isfinite(temps.t_hot) || temps.t_hot <= 0.0)
        throw std::invalid_argument(
            "BathTemperatures: both temperatures must be finite and > 0");
}

int dead_band_sign(double x, double tolerance) {
    if (x > tolerance) return 1;
    if (x < -tolerance) return -1;
    return 0;
}

}  // namespace

std::string_view to_string(OperationalMode mode) {
    switch (mode) {
        case OperationalMode::Engine: return "engine";
        case OperationalMode::Refrigerator: return "refrigerator";
        case OperationalMode::Heater: return "heater";
        case OperationalMode::Accelerator: return "accelerator";
        case OperationalMode::Idle: return "idle";
        case OperationalMode::Forbidden: return "forbidden";
    }
    throw std::logic_error("to_string: unknown OperationalMode");
}

OperationalMode mode_from_string(std::string_view name) {
    if (name == "engine") return OperationalMode::Engine;
    if (name == "refrigerator") return OperationalMode::Refrigerator;
    if (name == "heater") return OperationalMode::Heater;
    if (name == "accelerator") return OperationalMode::Accelerator;
    if (name == "idle") return OperationalMode::Idle;
    if (name == "forbidden") return OperationalMode::Forbidden;
    throw std::invalid_argument("mode_from_string: unknown mode name '" +
                                std::string(name) + "'");
}

OperationalMode classify(const CycleRecord& record, double tolerance) {
    if (!std::isfinite(tolerance) || tolerance <= 0.0)
        throw std::invalid_argument("classify: tolerance must be > 0");
    if (!std::isfinite(record.q_cold) || !std::isfinite(record.work_out) ||
        !std::isfinite(record.q_hot))
        return OperationalMode::Forbidden;  // defensive: never Idle by NaN

    const int c = dead_band_sign(record.q_cold, tolerance);
    const int w = dead_band_sign(record.work_out, tolerance);
    const int h = dead_band_sign(record.q_hot, tolerance);

    if (c == 0 && w == 0 && h == 0) return OperationalMode::Idle;
    if (c < 0 && w > 0 && h > 0) return OperationalMode::Engine;
    if (c > 0 && w < 0 && h < 0) return OperationalMode::Refrigerator;
    if (c < 0 && w < 0 && h < 0) return OperationalMode::Heater;
    if (c < 0 && w < 0 && h > 0) return OperationalMode::Accelerator;
    return OperationalMode::Forbidden;
}

Performance performance(const CycleRecord& record, const BathTemperatures& temps,
                        bool regenerative, const PerformanceOptions& options) {
    require_temperatures(temps);
    (void)regenerative;  // attribution already lives in the record's q_hot

    Performance perf;
    perf.mode = classify(record, options.tolerance);

    switch (perf.mode) {
        case OperationalMode::Engine: {
            if (std::abs(record.q_hot) <= options.tolerance) {
                perf.degenerate_denominator = true;
                break;
            }
            const double eta = record.work_out / record.q_hot;
            perf.metric = eta;
            if (options.carnot_normalized_kappa) {
                const double bound = 1.0 - temps.t_cold / temps.t_hot;
                if (std::abs(bound) <= options.tolerance)
                    perf.degenerate_denominator = true;
                else
                    perf.kappa = eta / bound;
            } else {
                perf.kappa = eta;
            }
            break;
        }
        case OperationalMode::Refrigerator:
        case OperationalMode::Heater:
        case OperationalMode::Accelerator: {
            const double denom = std::abs(record.work_out);
            if (denom <= options.tolerance) {
                perf.degenerate_denominator = true;
                break;
            }
            const double cop = (perf.mode == OperationalMode::Refrigerator)
                                   ? record.q_cold / denom
                                   : std::abs(record.q_cold) / denom;
            perf.metric = cop;
            perf.kappa = cop / (1.0 + cop);
            break;
        }
        case OperationalMode::Idle:
        case OperationalMode::Forbidden:
            break;
    }
    return perf;
}

double clausius_residual(const CycleRecord& record,
                         const BathTemperatures& temps) {
    require_temperatures(temps);
    return record.q_hot / temps.t_hot + record.q_cold / temps.t_cold;
}

}  // namespace qtm
