#pragma once

// Brute-force ground truth in a truncated Fock space.
//
// Nothing here uses the closed forms: states are built from explicit matrix
// exponentials, photon addition is an index shift, the thermal channel is
// integrated with fixed-step RK4 and the Wigner function is read off the
// displaced parity.

#include <Eigen/Dense>
#include <vector>

#include "pasts/analytics.hpp"
#include "pasts/states.hpp"

namespace pasts::fock {

inline constexpr int kDefaultDim = 80;

struct OracleOptions {
    /// Maximum probability allowed to leak past the truncation.
    double truncation_tolerance = 1e-8;
    /// Maximum thermal population beyond dim, (n_c/(n_c+1))^dim.
    double thermal_tail_tolerance = 1e-14;
    /// Build rho_s with exp[+lambda (a^2 - a^+2)/2] instead of the usual
    /// exp[-lambda (a^2 - a^+2)/2]. Only used to pin the sign convention.
    bool flip_squeeze_sign = false;
};

/// Truncated density matrix. trace_raw is the trace before the last
/// renormalization (for add_photons it is the normalization factor C_{a,m}).
struct FockState {
    int dim = 0;
    Eigen::MatrixXcd rho;
    double trace_raw = 1.0;

    /// Throws ConsistencyError unless rho is Hermitian to 1e-12, has unit
    /// trace to 1e-10 and eigenvalues >= -1e-9.
    void check_invariants() const;
};

/// rho_s = S rho_th S^+, S = exp[-lambda (a^2 - a^+2)/2], computed in a padded
/// space then projected onto dim levels and renormalized.
/// Throws TruncationError if the projected-out probability exceeds tolerance.
[[nodiscard]] FockState build_sts(double lambda, double n_c, int dim = kDefaultDim,
                                  const OracleOptions& options = {});

/// rho -> a^{+m} rho a^m / tr(...); trace_raw = tr(a^{+m} rho a^m).
[[nodiscard]] FockState add_photons(const FockState& state, int m,
                                    const OracleOptions& options = {});

/// rho -> a^m rho a^{+m} / tr(...); trace_raw = tr(a^m rho a^{+m}).
[[nodiscard]] FockState subtract_photons(const FockState& state, int m);

/// Fixed-step RK4 integration of the thermal-channel master equation in the
/// dimensionless time kt. steps = 0 picks the smallest count with h <= 1e-3
/// that also keeps RK4 inside its stability region at this dimension.
/// Throws IntegrationError if the trace drifts by more than 1e-6.
[[nodiscard]] FockState lindblad_evolve(const FockState& state, const ChannelSpec& channel,
                                        int steps = 0);

/// Largest |alpha| accepted by wigner_parity at this dimension.
[[nodiscard]] double trusted_radius(int dim);

/// <j| D(beta) |k> for 0 <= j, k < dim from the associated-Laguerre closed form.
[[nodiscard]] Eigen::MatrixXcd displacement_matrix(std::complex<double> beta, int dim);

/// W(alpha) = (1/pi) tr[rho D(alpha) Pi D(alpha)^+] = (1/pi) tr[rho D(2 alpha) Pi],
/// i.e. the displaced parity halved, matching the library's Wigner convention.
/// Throws TruncationError when |alpha| > trusted_radius(dim).
[[nodiscard]] double wigner_parity(const FockState& state, PhasePoint p);

/// || S|n> - h_n(sqrt2 sech(l) a^+, -tanh l) / sqrt(2^n n!) S|0> ||, S = exp[l (a^2 - a^+2)/2],
/// the squeezed number state written as a Hermite polynomial in a^+ acting
/// on squeezed vacuum.
[[nodiscard]] double squeezed_number_identity_check(int n, double lambda, int dim = kDefaultDim);

[[nodiscard]] std::vector<double> diagonal(const FockState& state);
[[nodiscard]] double mean_photon(const FockState& state);
/// tr(a^{+k} a^k rho).
[[nodiscard]] double factorial_moment(const FockState& state, int k);
[[nodiscard]] double purity(const FockState& state);
/// tr(rho1 rho2).
[[nodiscard]] double overlap(const FockState& a, const FockState& b);

}  // namespace pasts::fock
