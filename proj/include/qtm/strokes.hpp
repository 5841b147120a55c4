// strokes.hpp — quasistatic stroke bookkeeping for the two-qubit medium
//
// Each stroke returns a ledger of (heat absorbed by the medium, work done ON
// the medium, entropy change of the medium).  Heat and work follow the usual
// split dU = dQ + dW with dQ = sum_i E_i dp_i and dW = sum_i p_i dE_i.

#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include "qtm/spectral.hpp"

namespace qtm {

// Absolute entropy residual accepted by solve_isentrope.
inline constexpr double kIsentropeTol = 1e-10;
// Bisection iteration cap for solve_isentrope.
inline constexpr int kMaxBisection = 200;

struct StrokeLedger {
    double heat = 0.0;            // absorbed by the medium
    double work = 0.0;            // done ON the medium
    double entropy_change = 0.0;  // of the medium
};

// Isothermal frequency ramp omega_start -> omega_end at fixed temperature:
// reversible, so heat = T * (S_end - S_start); work = dU - heat.
StrokeLedger isothermal_heat(const MachineParams& params, double temperature,
                             double omega_start, double omega_end);

// Discretized isothermal heat sum_k sum_i E_i(mid_k) [p_i(omega_{k+1}) -
// p_i(omega_k)] on a uniform frequency grid with midpoint energies; converges
// to isothermal_heat as the step count grows (error at worst O(1/steps)).
// Serves as the independent path-integral oracle for the closed form.
double isothermal_heat_path(const MachineParams& params, double temperature,
                            double omega_start, double omega_end, int steps);

// Constant-frequency thermalization t_start -> t_end: no level motion, so
// work = 0 and heat = sum_i E_i(omega) [p_i(t_end) - p_i(t_start)].
StrokeLedger isochoric_heat(const MachineParams& params, double omega,
                            double t_start, double t_end);

// Adiabatic frequency ramp with frozen level occupations: no heat, no entropy
// change, work = sum_i p_i [E_i(omega_end) - E_i(omega_start)].  The supplied
// populations must sum to 1 within 1e-9.
StrokeLedger adiabatic_work(const MachineParams& params,
                            const std::array<double, 4>& populations,
                            double omega_start, double omega_end);

// Search bracket for solve_isentrope, 0 <= lo < hi.
struct IsentropeBracket {
    double lo = 0.0;
    double hi = 0.0;
};

// Thrown when the entropy residual has the same sign at both bracket ends (no
// frequency in the bracket reaches the target entropy), or when bisection
// cannot push the residual below kIsentropeTol.
struct NoRootInBracket : std::runtime_error {
    NoRootInBracket(double lo, double hi, double res_lo, double res_hi);
    double residual_lo = 0.0;  // S(lo, t_to) - S_target
    double residual_hi = 0.0;  // S(hi, t_to) - S_target
};

// Finds omega_to in [bracket.lo, bracket.hi] with S(omega_to, t_to) equal to
// S(omega_from, t_from) within kIsentropeTol, by bisection (<= kMaxBisection
// iterations).  In the decoupled scaling limit (g = 0, r = 1) this reduces to
// omega_to = omega_from * t_to / t_from.
double solve_isentrope(const MachineParams& params, double t_from,
                       double omega_from, double t_to,
                       const IsentropeBracket& bracket);

}  // namespace qtm
