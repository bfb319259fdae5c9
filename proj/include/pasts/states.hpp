#pragma once

// Parameter types and the coefficient sets shared by the closed forms.

namespace pasts {

/// Photon-added squeezed thermal state: squeeze lambda >= 0, thermal mean
/// n_c >= 0, m added photons. (The squeeze parameter is also written r.)
struct StateSpec {
    double lambda = 0.0;
    double n_c = 0.0;
    int m = 0;

    /// Throws InvalidParameter on lambda < 0, n_c < 0, m < 0 or non-finite input.
    void validate() const;
};

/// Thermal channel: bath mean photon number N and dimensionless time kt.
struct ChannelSpec {
    double bath_mean = 0.0;
    double kt = 0.0;

    void validate() const;
};

/// Normal-ordering coefficients of the squeezed thermal state.
struct StsCoefficients {
    double A = 1.0;      // n_c^2 + (2n_c+1) cosh^2 lambda
    double B = 0.0;      // n_c (n_c+1) / A
    double C = 0.0;      // (2n_c+1) sinh 2lambda / (2A)
    double B_bar = 1.0;  // n_c cosh 2lambda + cosh^2 lambda
    double D = 0.0;      // [n_c^2 - (2n_c+1) sinh^2 lambda] / A
    double tau1_sq = 1.0;
    double tau2_sq = 1.0;
};

/// Coefficients of the initial Wigner function, W0 ~ exp[A2 (a^2 + a*^2) - 2 A3 |a|^2].
struct WignerCoefficients {
    double A1 = 1.0;
    double A2 = 0.0;
    double A3 = 1.0;
    double A4 = 2.0;  // A3 + 1
};

/// Thermal-channel coefficients hoisted per (state, channel). The per-point
/// argument omega is formed by omega_coefficients().
struct EvolvedCoefficients {
    double g0 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;
    double G = 0.0;
    double Delta1 = 0.0;
    double Delta2 = 0.0;
    double chi = 0.0;
    // omega = omega_conj_coeff * conj(eta) + omega_coeff * eta
    double omega_conj_coeff = 0.0;
    double omega_coeff = 0.0;
    // W0(eta) = w0_prefactor * exp[-Delta1 |eta|^2 + w0_quad (eta^2 + conj(eta)^2)]
    double w0_prefactor = 0.0;
    double w0_quad = 0.0;
};

/// Overlap (fidelity) coefficients; K2 = K1^2 - 4 K0^2.
struct FidelityCoefficients {
    double K0 = 0.0;
    double K1 = 0.0;
    double K2 = 0.0;
    double Z = 0.0;  // n_c^2 - (2n_c+1) sinh^2 lambda
    double H = 0.0;  // n_c cosh 2lambda + sinh^2 lambda
};

[[nodiscard]] StsCoefficients sts_coefficients(double lambda, double n_c);

[[nodiscard]] WignerCoefficients wigner_coefficients(double lambda, double n_c);

/// Requires channel.kt > 0; the kt -> 0 limit is handled by the caller
/// (decoherence::evolved_wigner falls back to the initial-state formula).
[[nodiscard]] EvolvedCoefficients evolved_coefficients(double lambda, double n_c,
                                                       const ChannelSpec& channel);

[[nodiscard]] FidelityCoefficients fidelity_coefficients(double lambda, double n_c);

}  // namespace pasts
