// cycles.cpp — stroke composition and bath bookkeeping for the four cycles

#include "qtm/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qtm {

namespace {

void require_positive_temperature(double t, const char* what) {
    if (!std::isfinite(t) || t <= 0.0)
        throw std::invalid_argument(std::string(what) +
                                    ": temperature must be finite and > 0");
}

void require_frequency(double omega, const char* what) {
    if (!std::isfinite(omega) || omega < 0.0)
        throw std::invalid_argument(std::string(what) +
                                    ": frequency must be finite and >= 0");
}

}  // namespace

void CyclePoint::validate() const {
    params.validate();
    require_frequency(omega0, "CyclePoint.omega0");
    require_frequency(omega1, "CyclePoint.omega1");
    require_positive_temperature(t_cold, "CyclePoint.t_cold");
    require_positive_temperature(t_hot, "CyclePoint.t_hot");
}

IsentropeBracket carnot_default_bracket(const CyclePoint& point) {
    return {0.0, 10.0 * std::max({point.omega0, point.omega1, 1.0})};
}

CycleRecord run_carnot(const CyclePoint& point, const IsentropeBracket& bracket) {
    point.validate();
    const MachineParams& p = point.params;

    // Hot isotherm omega0 -> omega1, then entropy-matched adiabat endpoints at
    // the cold temperature for both hot-side frequencies.
    const StrokeLedger hot =
        isothermal_heat(p, point.t_hot, point.omega0, point.omega1);
    const double omega2 =
        solve_isentrope(p, point.t_hot, point.omega1, point.t_cold, bracket);
    const double omega3 =
        solve_isentrope(p, point.t_hot, point.omega0, point.t_cold, bracket);
    const StrokeLedger cold = isothermal_heat(p, point.t_cold, omega2, omega3);

    CycleRecord rec;
    rec.q_hot = hot.heat;
    rec.q_cold = cold.heat;
    rec.work_out = rec.q_hot + rec.q_cold;
    rec.aux_frequencies = {omega2, omega3};

    // Diagnostics: adiabat works under frozen occupations and the residual
    // population jump the entropy match leaves at the cold-side endpoints.
    const ThermalState at_hot1 =
        thermal_state(build_spectrum(p, point.omega1), point.t_hot);
    const ThermalState at_hot0 =
        thermal_state(build_spectrum(p, point.omega0), point.t_hot);
    const ThermalState at_cold2 =
        thermal_state(build_spectrum(p, omega2), point.t_cold);
    const ThermalState at_cold3 =
        thermal_state(build_spectrum(p, omega3), point.t_cold);

    rec.diagnostics.adiabatic_work_1 =
        adiabatic_work(p, at_hot1.populations, point.omega1, omega2).work;
    rec.diagnostics.adiabatic_work_2 =
        adiabatic_work(p, at_cold3.populations, omega3, point.omega0).work;
    rec.diagnostics.isentrope_residual_1 =
        entropy_at(p, omega2, point.t_cold) -
        entropy_at(p, point.omega1, point.t_hot);
    rec.diagnostics.isentrope_residual_2 =
        entropy_at(p, omega3, point.t_cold) -
        entropy_at(p, point.omega0, point.t_hot);

    double mismatch = 0.0;
    for (int i = 0; i < 4; ++i) {
        const auto idx = static_cast<size_t>(i);
        mismatch = std::max(mismatch, std::abs(at_hot1.populations[idx] -
                                               at_cold2.populations[idx]));
        mismatch = std::max(mismatch, std::abs(at_cold3.populations[idx] -
                                               at_hot0.populations[idx]));
    }
    rec.diagnostics.population_mismatch = mismatch;
    return rec;
}

CycleRecord run_otto(const CyclePoint& point) {
    point.validate();
    const MachineParams& p = point.params;

    const Spectrum s0 = build_spectrum(p, point.omega0);
    const Spectrum s1 = build_spectrum(p, point.omega1);
    const ThermalState cold_eq = thermal_state(s0, point.t_cold);
    const ThermalState hot_eq = thermal_state(s1, point.t_hot);

    // Isochore heats exchange population at fixed spectrum; the occupations
    // carried across each adiabat are the preceding equilibrium ones.
    CycleRecord rec;
    for (int i = 0; i < 4; ++i) {
        const auto idx = static_cast<size_t>(i);
        const double dp = hot_eq.populations[idx] - cold_eq.populations[idx];
        rec.q_hot += s1.energies[idx] * dp;
        rec.q_cold -= s0.energies[idx] * dp;
    }
    rec.q_iso1 = rec.q_cold;
    rec.q_iso2 = rec.q_hot;
    rec.work_out = rec.q_hot + rec.q_cold;

    rec.diagnostics.adiabatic_work_1 =
        adiabatic_work(p, cold_eq.populations, point.omega0, point.omega1).work;
    rec.diagnostics.adiabatic_work_2 =
        adiabatic_work(p, hot_eq.populations, point.omega1, point.omega0).work;
    return rec;
}

namespace {

// Shared stroke layout of the regenerated and unregenerated loops.
struct StirlingLegs {
    double q_hot_iso = 0.0;   // hot isotherm omega1 -> omega0
    double q_cool = 0.0;      // isochore at omega0, t_hot -> t_cold
    double q_cold_iso = 0.0;  // cold isotherm omega0 -> omega1
    double q_warm = 0.0;      // isochore at omega1, t_cold -> t_hot
};

StirlingLegs stirling_legs(const CyclePoint& point) {
    const MachineParams& p = point.params;
    StirlingLegs legs;
    legs.q_hot_iso =
        isothermal_heat(p, point.t_hot, point.omega1, point.omega0).heat;
    legs.q_cool = isochoric_heat(p, point.omega0, point.t_hot, point.t_cold).heat;
    legs.q_cold_iso =
        isothermal_heat(p, point.t_cold, point.omega0, point.omega1).heat;
    legs.q_warm = isochoric_heat(p, point.omega1, point.t_cold, point.t_hot).heat;
    return legs;
}

}  // namespace

CycleRecord run_stirling(const CyclePoint& point) {
    point.validate();
    const StirlingLegs legs = stirling_legs(point);

    CycleRecord rec;
    rec.q_iso1 = legs.q_cool;
    rec.q_iso2 = legs.q_warm;
    rec.q_hot = legs.q_hot_iso + legs.q_warm;
    rec.q_cold = legs.q_cold_iso + legs.q_cool;
    rec.work_out = rec.q_hot + rec.q_cold;
    return rec;
}

CycleRecord run_stirling_regen(const CyclePoint& point) {
    point.validate();
    const StirlingLegs legs = stirling_legs(point);

    CycleRecord rec;
    rec.q_iso1 = legs.q_cool;
    rec.q_iso2 = legs.q_warm;
    rec.regen_delta = legs.q_cool + legs.q_warm;
    rec.regen_delta_flag = rec.regen_delta > 0.0;
    if (rec.regen_delta_flag) {
        rec.q_hot = legs.q_hot_iso + rec.regen_delta;
        rec.q_cold = legs.q_cold_iso;
    } else {
        rec.q_hot = legs.q_hot_iso;
        rec.q_cold = legs.q_cold_iso + rec.regen_delta;
    }
    rec.work_out = rec.q_hot + rec.q_cold;
    return rec;
}

}  // namespace qtm
