// classifier.hpp — operational-mode classification and performance metrics
//
// A cycle record is classified by the signs of (q_cold, work_out, q_hot),
// with a dead-band so near-zero values count as zero:
//
//       q_cold  work  q_hot
//   engine        -     +     +    converts hot heat into work
//   refrigerator  +     -     -    pumps heat out of the cold bath
//   heater        -     -     -    dumps work into both baths
//   accelerator   -     -     +    boosts the hot->cold flow with extra work
//   idle          0     0     0
//   forbidden     any other sign pattern

#pragma once

#include <optional>
#include <string_view>

#include "qtm/cycles.hpp"

namespace qtm {

// Default sign dead-band (energy units): |x| <= tolerance reads as zero.
inline constexpr double kSignTolerance = 1e-9;

enum class OperationalMode { Engine, Refrigerator, Heater, Accelerator, Idle, Forbidden };

// Lowercase names: engine | refrigerator | heater | accelerator | idle | forbidden.
std::string_view to_string(OperationalMode mode);
OperationalMode mode_from_string(std::string_view name);  // throws std::invalid_argument

OperationalMode classify(const CycleRecord& record, double tolerance = kSignTolerance);

struct BathTemperatures {
    double t_cold = 0.0;
    double t_hot = 0.0;
};

struct PerformanceOptions {
    double tolerance = kSignTolerance;
    // Engine kappa = efficiency / (1 - t_cold/t_hot) instead of the raw
    // efficiency, so 1 marks the reversible bound.
    bool carnot_normalized_kappa = false;
};

struct Performance {
    OperationalMode mode = OperationalMode::Idle;
    std::optional<double> metric;  // engine: efficiency; others: coefficient of performance
    std::optional<double> kappa;   // normalized performance, in [0, 1) unless Carnot-normalized
    bool degenerate_denominator = false;  // metric denominator within tolerance of zero
};

// Metric per mode: engine eta = work_out / q_hot (the hot-side input recorded
// by the cycle); refrigerator COP = q_cold / |work|; heater and accelerator
// COP = |q_cold| / |work|.  kappa = COP / (1 + COP) for the COP modes and
// kappa = eta for engines.  Idle/forbidden records carry no metric.  A
// denominator smaller than the tolerance sets degenerate_denominator instead
// of throwing; the `regenerative` flag only records which hot-side attribution
// the record was built with (the record already carries it).
Performance performance(const CycleRecord& record, const BathTemperatures& temps,
                        bool regenerative = false,
                        const PerformanceOptions& options = {});

// q_hot / t_hot + q_cold / t_cold under the record's bath attribution;
// <= 0 (up to tolerance) for any cycle driven by two real baths.
double clausius_residual(const CycleRecord& record, const BathTemperatures& temps);

}  // namespace qtm
