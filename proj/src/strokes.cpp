// strokes.cpp — quasistatic stroke ledgers and the isentrope bisection solver

#include "qtm/strokes.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace qtm {

namespace {

std::string bracket_message(double lo, double hi, double res_lo, double res_hi) {
    std::ostringstream os;
    os.precision(17);
    os << "solve_isentrope: no entropy match in bracket [" << lo << ", " << hi
       << "] (residuals " << res_lo << ", " << res_hi << ")";
    return os.str();
}

}  // namespace

NoRootInBracket::NoRootInBracket(double lo, double hi, double res_lo,
                                 double res_hi)
    : std::runtime_error(bracket_message(lo, hi, res_lo, res_hi)),
      residual_lo(res_lo),
      residual_hi(res_hi) {}

StrokeLedger isothermal_heat(const MachineParams& params, double temperature,
                             double omega_start, double omega_end) {
    const Spectrum s0 = build_spectrum(params, omega_start);
    const Spectrum s1 = build_spectrum(params, omega_end);
    const ThermalState st0 = thermal_state(s0, temperature);
    const ThermalState st1 = thermal_state(s1, temperature);

    StrokeLedger led;
    led.entropy_change = entropy(st1, s1) - entropy(st0, s0);
    led.heat = temperature * led.entropy_change;
    led.work = (internal_energy(st1, s1) - internal_energy(st0, s0)) - led.heat;
    return led;
}

double isothermal_heat_path(const MachineParams& params, double temperature,
                            double omega_start, double omega_end, int steps) {
    if (steps < 1)
        throw std::invalid_argument("isothermal_heat_path: steps must be >= 1");

    // Populations at the grid nodes, level energies at the cell midpoints.
    std::vector<std::array<double, 4>> pops(static_cast<size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        const double omega =
            omega_start + (omega_end - omega_start) * k / static_cast<double>(steps);
        pops[static_cast<size_t>(k)] =
            thermal_state(build_spectrum(params, omega), temperature).populations;
    }

    double heat = 0.0;
    for (int k = 0; k < steps; ++k) {
        const double mid = omega_start + (omega_end - omega_start) *
                                             (k + 0.5) / static_cast<double>(steps);
        const Spectrum s = build_spectrum(params, mid);
        for (int i = 0; i < 4; ++i)
            heat += s.energies[static_cast<size_t>(i)] *
                    (pops[static_cast<size_t>(k) + 1][static_cast<size_t>(i)] -
                     pops[static_cast<size_t>(k)][static_cast<size_t>(i)]);
    }
    return heat;
}

StrokeLedger isochoric_heat(const MachineParams& params, double omega,
                            double t_start, double t_end) {
    const Spectrum s = build_spectrum(params, omega);
    const ThermalState st0 = thermal_state(s, t_start);
    const ThermalState st1 = thermal_state(s, t_end);

    StrokeLedger led;
    led.heat = internal_energy(st1, s) - internal_energy(st0, s);
    led.work = 0.0;
    led.entropy_change = entropy(st1, s) - entropy(st0, s);
    return led;
}

StrokeLedger adiabatic_work(const MachineParams& params,
                            const std::array<double, 4>& populations,
                            double omega_start, double omega_end) {
    double sum = 0.0;
    for (double p : populations) {
        if (!std::isfinite(p) || p < -1e-12)
            throw std::invalid_argument(
                "adiabatic_work: occupations must be finite and non-negative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument(
            "adiabatic_work: occupations must sum to 1 within 1e-9");

    const Spectrum s0 = build_spectrum(params, omega_start);
    const Spectrum s1 = build_spectrum(params, omega_end);

    StrokeLedger led;
    for (int i = 0; i < 4; ++i)
        led.work += populations[static_cast<size_t>(i)] *
                    (s1.energies[static_cast<size_t>(i)] -
                     s0.energies[static_cast<size_t>(i)]);
    return led;
}

double solve_isentrope(const MachineParams& params, double t_from,
                       double omega_from, double t_to,
                       const IsentropeBracket& bracket) {
    if (!std::isfinite(bracket.lo) || !std::isfinite(bracket.hi) ||
        bracket.lo < 0.0 || bracket.hi <= bracket.lo)
        throw std::invalid_argument(
            "solve_isentrope: bracket must satisfy 0 <= lo < hi");

    const double target = entropy_at(params, omega_from, t_from);
    const auto residual = [&](double omega) {
        return entropy_at(params, omega, t_to) - target;
    };

    double lo = bracket.lo;
    double hi = bracket.hi;
    double res_lo = residual(lo);
    double res_hi = residual(hi);

    // Refine well past the documented tolerance: downstream heat ratios divide
    // by entropy differences, so leftover residual would leak into them.
    constexpr double kRefineTarget = 1e-14;
    if (std::abs(res_lo) <= kRefineTarget) return lo;
    if (std::abs(res_hi) <= kRefineTarget) return hi;
    if ((res_lo > 0.0) == (res_hi > 0.0))
        throw NoRootInBracket(bracket.lo, bracket.hi, res_lo, res_hi);

    for (int iter = 0; iter < kMaxBisection; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double res_mid = residual(mid);
        if (std::abs(res_mid) <= kRefineTarget) return mid;
        if ((res_mid > 0.0) == (res_lo > 0.0)) {
            lo = mid;
            res_lo = res_mid;
        } else {
            hi = mid;
            res_hi = res_mid;
        }
        if (hi - lo <= 4e-16 * std::max(1.0, std::abs(hi))) break;
    }

    // The interval collapsed before the refinement target was met; accept the
    // midpoint if it honors the documented tolerance.
    const double mid = 0.5 * (lo + hi);
    if (std::abs(residual(mid)) <= kIsentropeTol) return mid;
    throw NoRootInBracket(bracket.lo, bracket.hi, res_lo, res_hi);
}

}  // namespace qtm
