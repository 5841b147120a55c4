// cycles.hpp — four quasistatic thermodynamic cycles over the two-qubit medium
//
// A CyclePoint fixes the two stroke-endpoint frequencies (omega0, omega1), the
// two bath temperatures and the machine parameters.  Each runner returns a
// CycleRecord whose q_hot / q_cold carry the per-bath heat attribution used by
// the classifier and whose work_out = q_hot + q_cold is the net work delivered
// by the medium over one loop.
//
// Stroke layout per cycle (frequencies in parentheses, temperatures above):
//
//   carnot    hot isotherm omega0 -> omega1 at t_hot; adiabat to omega2 at
//             t_cold; cold isotherm omega2 -> omega3; adiabat back to omega0.
//             omega2/omega3 are found by entropy matching, which closes the
//             loop exactly and makes the engine efficiency 1 - t_cold/t_hot.
//   otto      adiabat omega0 -> omega1 from the cold equilibrium; hot
//             isochore at omega1; adiabat omega1 -> omega0; cold isochore.
//   stirling  hot isotherm omega1 -> omega0 at t_hot; isochore at omega0 down
//             to t_cold; cold isotherm omega0 -> omega1; isochore at omega1
//             back up to t_hot.  The warm-up isochore heat is grouped with the
//             hot bath and the cool-down heat with the cold bath.
//   stirling_regen  same strokes, but an ideal regenerator buffers the two
//             isochores.  Their imbalance dq = q_iso1 + q_iso2 is charged to
//             the hot bath when positive (regen_delta_flag) and to the cold
//             bath when negative (flagged as a regeneration deficit upstream).

#pragma once

#include <array>

#include "qtm/strokes.hpp"

namespace qtm {

struct CyclePoint {
    double omega0 = 0.0;  // frequency endpoint A
    double omega1 = 0.0;  // frequency endpoint B
    double t_cold = 0.0;  // nominal cold bath temperature (> 0)
    double t_hot = 0.0;   // nominal hot bath temperature (> 0); either ordering is legal
    MachineParams params;

    // Throws std::invalid_argument on non-finite/negative frequencies or
    // non-positive temperatures.
    void validate() const;
};

struct CycleDiagnostics {
    double adiabatic_work_1 = 0.0;      // Carnot: work of the omega1 -> omega2 adiabat
    double adiabatic_work_2 = 0.0;      // Carnot: work of the omega3 -> omega0 adiabat
    double isentrope_residual_1 = 0.0;  // entropy residual left by the omega2 solve
    double isentrope_residual_2 = 0.0;  // entropy residual left by the omega3 solve
    double population_mismatch = 0.0;   // max |p_i| jump across the adiabat endpoints
};

struct CycleRecord {
    double q_hot = 0.0;    // heat absorbed from the hot-side contact
    double q_cold = 0.0;   // heat absorbed from the cold-side contact
    double q_iso1 = 0.0;   // cool-down isochore heat (Otto/Stirling family)
    double q_iso2 = 0.0;   // warm-up isochore heat
    double work_out = 0.0; // net work delivered by the medium (= q_hot + q_cold)
    std::array<double, 2> aux_frequencies{0.0, 0.0};  // Carnot: {omega2, omega3}
    double regen_delta = 0.0;       // regenerated cycle: isochore imbalance q_iso1 + q_iso2
    bool regen_delta_flag = false;  // true when the imbalance is credited to the hot input
    CycleDiagnostics diagnostics;
};

// Default Carnot search bracket for a cycle point: [0, 10 * max(omega0, omega1, 1)].
IsentropeBracket carnot_default_bracket(const CyclePoint& point);

// Propagates NoRootInBracket when an entropy-matched adiabat endpoint does not
// exist inside the bracket.
CycleRecord run_carnot(const CyclePoint& point, const IsentropeBracket& bracket);

CycleRecord run_otto(const CyclePoint& point);
CycleRecord run_stirling(const CyclePoint& point);
CycleRecord run_stirling_regen(const CyclePoint& point);

}  // namespace qtm
