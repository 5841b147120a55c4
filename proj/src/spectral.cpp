// spectral.cpp — closed-form spectrum, dense oracle route, and Gibbs state

#include "qtm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qtm {

namespace {

void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(what) + ": value must be finite");
}

// p ln p with the p -> 0 limit.
double xlogx(double p) { return p > 0.0 ? p * std::log(p) : 0.0; }

}  // namespace

double MachineParams::omega_bar(double omega) const {
    return left_mode == LeftMode::Scaled ? r * omega : omega_bar_fixed;
}

void MachineParams::validate() const {
    require_finite(g, "MachineParams.g");
    if (g < 0.0) throw std::invalid_argument("MachineParams.g: coupling must be >= 0");
    if (left_mode == LeftMode::Scaled) {
        require_finite(r, "MachineParams.r");
        if (r <= 0.0)
            throw std::invalid_argument("MachineParams.r: frequency ratio must be > 0");
    } else {
        require_finite(omega_bar_fixed, "MachineParams.omega_bar_fixed");
        if (omega_bar_fixed < 0.0)
            throw std::invalid_argument(
                "MachineParams.omega_bar_fixed: left splitting must be >= 0");
    }
}

Spectrum build_spectrum(const MachineParams& params, double omega) {
    params.validate();
    require_finite(omega, "build_spectrum: omega");
    if (omega < 0.0)
        throw std::invalid_argument("build_spectrum: omega must be >= 0");

    Spectrum s;
    s.omega = omega;
    s.omega_bar = params.omega_bar(omega);
    s.big_omega = std::hypot(2.0 * params.g, omega);
    s.theta = std::atan2(2.0 * params.g, omega);
    s.energies = {(s.omega_bar + s.big_omega) / 2.0,
                  (s.omega_bar - s.big_omega) / 2.0,
                  (-s.omega_bar + s.big_omega) / 2.0,
                  (-s.omega_bar - s.big_omega) / 2.0};
    return s;
}

Spectrum oracle_diagonalize(const MachineParams& params, double omega) {
    params.validate();
    require_finite(omega, "oracle_diagonalize: omega");
    if (omega < 0.0)
        throw std::invalid_argument("oracle_diagonalize: omega must be >= 0");

    const double ob = params.omega_bar(omega);
    // 4x4 Hamiltonian in the computational basis |00>,|01>,|10>,|11>; the
    // left-qubit sector splits it into two symmetric 2x2 blocks.
    const double h[4][4] = {
        {(ob + omega) / 2.0, params.g, 0.0, 0.0},
        {params.g, (ob - omega) / 2.0, 0.0, 0.0},
        {0.0, 0.0, (-ob + omega) / 2.0, -params.g},
        {0.0, 0.0, -params.g, (-ob - omega) / 2.0},
    };

    // Closed-form symmetric 2x2 eigensolve from the matrix entries alone.
    const auto eig2 = [](double a, double b, double c) {
        const double mean = 0.5 * (a + c);
        const double disc = std::hypot(0.5 * (a - c), b);
        return std::array<double, 2>{mean + disc, mean - disc};
    };
    const auto plus = eig2(h[0][0], h[0][1], h[1][1]);
    const auto minus = eig2(h[2][2], h[2][3], h[3][3]);

    Spectrum s;
    s.omega = omega;
    s.omega_bar = h[0][0] + h[1][1];  // block trace = omega_bar
    s.big_omega = plus[0] - plus[1];  // block splitting = Omega
    // Mixing angle of the upper block, from its entries alone.
    s.theta = std::atan2(2.0 * h[0][1], h[0][0] - h[1][1]);
    s.energies = {plus[0], plus[1], minus[0], minus[1]};
    return s;
}

ThermalState thermal_state(const Spectrum& spectrum, double temperature) {
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::invalid_argument(
            "thermal_state: temperature must be finite and > 0");

    ThermalState st;
    st.beta = std::min(1.0 / temperature, kBetaCap);

    // Shifted exponentials: the ground level carries weight exactly 1, so the
    // sum lives in [1, 4] for any beta.
    const double e_min = *std::min_element(spectrum.energies.begin(),
                                           spectrum.energies.end());
    double z_shifted = 0.0;
    std::array<double, 4> w{};
    for (int i = 0; i < 4; ++i) {
        w[i] = std::exp(-st.beta * (spectrum.energies[i] - e_min));
        z_shifted += w[i];
    }
    for (int i = 0; i < 4; ++i) st.populations[i] = w[i] / z_shifted;
    st.log_z = std::log(z_shifted) - st.beta * e_min;
    return st;
}

double internal_energy(const ThermalState& state, const Spectrum& spectrum) {
    double u = 0.0;
    for (int i = 0; i < 4; ++i) u += state.populations[i] * spectrum.energies[i];
    return u;
}

double entropy(const ThermalState& state, const Spectrum& spectrum) {
    double gibbs = 0.0;
    for (double p : state.populations) gibbs -= xlogx(p);

    // Identity form S = beta U + ln Z, rearranged around the ground energy so
    // no large terms cancel: S = beta * sum_i p_i (E_i - E_min) + ln Z_shifted.
    const double e_min = *std::min_element(spectrum.energies.begin(),
                                           spectrum.energies.end());
    double excess = 0.0;
    for (int i = 0; i < 4; ++i)
        excess += state.populations[i] * (spectrum.energies[i] - e_min);
    const double identity = state.beta * excess + (state.log_z + state.beta * e_min);

    if (std::abs(gibbs - identity) > 1e-10)
        throw std::logic_error("entropy: Gibbs form and beta*U + ln Z disagree");
    return gibbs;
}

double entropy_at(const MachineParams& params, double omega, double temperature) {
    const Spectrum s = build_spectrum(params, omega);
    return entropy(thermal_state(s, temperature), s);
}

double internal_energy_at(const MachineParams& params, double omega,
                          double temperature) {
    const Spectrum s = build_spectrum(params, omega);
    return internal_energy(thermal_state(s, temperature), s);
}

BlockMatrices coherence_blocks(const MachineParams& params, double omega,
                               double temperature) {
    const Spectrum s = build_spectrum(params, omega);
    if (!std::isfinite(temperature) || temperature <= 0.0)
        throw std::invalid_argument(
            "coherence_blocks: temperature must be finite and > 0");
    const double beta = std::min(1.0 / temperature, kBetaCap);

    // Hyperbolic closed forms per sector; the only omega-dependence enters
    // through cos(theta) = omega/Omega and sin(theta) = 2g/Omega.  At
    // omega = g = 0 both ratios are taken as 0 (fully degenerate spectrum).
    const double ch = std::cosh(beta * s.big_omega / 2.0);
    const double sh = std::sinh(beta * s.big_omega / 2.0);
    const double cos_t = s.big_omega > 0.0 ? omega / s.big_omega : 0.0;
    const double sin_t = s.big_omega > 0.0 ? 2.0 * params.g / s.big_omega : 0.0;
    const double boltz_plus = std::exp(-beta * s.omega_bar / 2.0);
    const double boltz_minus = std::exp(beta * s.omega_bar / 2.0);

    BlockMatrices b;
    b.plus_block[0][0] = boltz_plus * (ch - cos_t * sh);
    b.plus_block[1][1] = boltz_plus * (ch + cos_t * sh);
    b.plus_block[0][1] = b.plus_block[1][0] = -sin_t * boltz_plus * sh;
    b.minus_block[0][0] = boltz_minus * (ch - cos_t * sh);
    b.minus_block[1][1] = boltz_minus * (ch + cos_t * sh);
    b.minus_block[0][1] = b.minus_block[1][0] = -sin_t * boltz_minus * sh;
    return b;
}

}  // namespace qtm
