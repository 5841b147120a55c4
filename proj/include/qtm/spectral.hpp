// spectral.hpp — energy spectrum and Gibbs state of the two-qubit working medium
//
// The medium is a pair of qubits with splittings omega_bar (left) and omega
// (right), coupled through a sigma_z (x) sigma_x term of strength g.  The
// Hamiltonian is block diagonal in the computational basis: the left-qubit
// projector splits it into two 2x2 blocks, so every quantity here has a short
// closed form.  The four levels are
//
//     E1 = ( omega_bar + Omega)/2      E2 = ( omega_bar - Omega)/2
//     E3 = (-omega_bar + Omega)/2      E4 = (-omega_bar - Omega)/2
//
// with hybridized splitting Omega = sqrt(4 g^2 + omega^2) and mixing angle
// theta = atan2(2g, omega) in [0, pi/2].  hbar = k_B = 1 throughout.

#pragma once

#include <array>
#include <cstddef>

namespace qtm {

// Inverse temperatures above this value are clamped: beyond it every
// population is already 0 or 1 to machine precision, so the clamp only avoids
// overflow in intermediate products (beta * energy).
inline constexpr double kBetaCap = 1e6;

// How the left-qubit splitting follows the tunable right-qubit frequency:
// Scaled keeps a fixed ratio omega_bar = r * omega; Fixed pins omega_bar.
enum class LeftMode { Scaled, Fixed };

struct MachineParams {
    double g = 0.0;                      // transverse coupling strength, >= 0
    double r = 1.0;                      // left/right frequency ratio, > 0
    LeftMode left_mode = LeftMode::Scaled;
    double omega_bar_fixed = 0.0;        // left splitting used in Fixed mode, >= 0

    // Left-qubit splitting at the given right-qubit frequency.
    double omega_bar(double omega) const;

    // Throws std::invalid_argument on non-finite or out-of-range fields.
    void validate() const;
};

struct Spectrum {
    double omega = 0.0;                  // right-qubit splitting
    double omega_bar = 0.0;              // left-qubit splitting
    double big_omega = 0.0;              // hybridized splitting sqrt(4g^2 + omega^2)
    double theta = 0.0;                  // mixing angle, [0, pi/2]
    std::array<double, 4> energies{};    // E1..E4 as in the header comment
};

// Closed-form spectrum at frequency omega.  Rejects omega < 0 or non-finite.
Spectrum build_spectrum(const MachineParams& params, double omega);

// Independent route to the same spectrum: assembles the 4x4 Hamiltonian in the
// computational basis and diagonalizes each 2x2 block from its matrix entries
// alone (closed-form symmetric eigensolve).  Shares no arithmetic with
// build_spectrum past the Hamiltonian entries; used as a cross-check oracle.
Spectrum oracle_diagonalize(const MachineParams& params, double omega);

struct ThermalState {
    double beta = 0.0;                   // inverse temperature actually used
    std::array<double, 4> populations{}; // Gibbs weights, sum to 1
    double log_z = 0.0;                  // log partition function
};

// Gibbs state at the given temperature (> 0, finite).  Evaluated with a
// shifted exponential sum (log-sum-exp) so large beta cannot overflow; beta is
// clamped at kBetaCap.
ThermalState thermal_state(const Spectrum& spectrum, double temperature);

// Mean energy sum_i p_i E_i.
double internal_energy(const ThermalState& state, const Spectrum& spectrum);

// Von Neumann entropy -sum_i p_i ln p_i (p ln p -> 0 as p -> 0).  Also
// evaluates the identity S = beta * U + ln Z in a cancellation-free form and
// throws std::logic_error if the two disagree beyond 1e-10.
double entropy(const ThermalState& state, const Spectrum& spectrum);

// Convenience wrappers used by the stroke and cycle layers.
double entropy_at(const MachineParams& params, double omega, double temperature);
double internal_energy_at(const MachineParams& params, double omega, double temperature);

// Unnormalized 2x2 blocks of the Gibbs density matrix in the computational
// basis, one per left-qubit sector; dividing by Z = exp(log_z) recovers the
// thermal state.  Entries grow like exp(beta * omega_bar / 2), so very large
// beta * omega_bar overflows to infinity; intended for moderate beta.
struct BlockMatrices {
    std::array<std::array<double, 2>, 2> plus_block{};   // left qubit up
    std::array<std::array<double, 2>, 2> minus_block{};  // left qubit down
};

BlockMatrices coherence_blocks(const MachineParams& params, double omega,
                               double temperature);

}  // namespace qtm
