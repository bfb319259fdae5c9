#pragma once

// Closed-form normalization, photon statistics, photon-number
// distributions and Wigner functions of the photon-added squeezed thermal
// state.
//
// Wigner convention: W(alpha) integrates to 1/2 over d^2 alpha (vacuum at the
// origin is 1/pi). Multiply by 2 for the common convention that integrates to
// 1 over d^2 alpha; the value is already unit-normalized over dq dp with
// q = sqrt(2) Re(alpha), p = sqrt(2) Im(alpha).

#include <complex>
#include <vector>

#include "pasts/states.hpp"

namespace pasts {

/// Phase-space point alpha = re + i im.
struct PhasePoint {
    double re = 0.0;
    double im = 0.0;

    [[nodiscard]] std::complex<double> value() const { return {re, im}; }
};

namespace analytics {

/// Thresholds of the photon-number distribution tail scan.
inline constexpr double kPndTailThreshold = 1e-16;
inline constexpr int kPndHardCap = 4000;

/// C_{a,m} = m! S_m(B_bar, A) = tr(a^m a^{+m} rho_s).
[[nodiscard]] double normalization(const StateSpec& spec);

/// <a^+ a> = C_{m+1}/C_m - 1.
[[nodiscard]] double mean_photon(const StateSpec& spec);

/// <a^{+2} a^2> = C_{m+2}/C_m - 4 C_{m+1}/C_m + 2.
[[nodiscard]] double second_factorial_moment(const StateSpec& spec);

/// Mandel Q = <a^{+2}a^2>/<a^+a> - <a^+a>. Throws UndefinedMoment for the vacuum.
[[nodiscard]] double mandel_q(const StateSpec& spec);

/// P(n) of the squeezed thermal state: S_n(B, D) / sqrt(A).
[[nodiscard]] double pnd_sts(int n, double lambda, double n_c);

/// P(n) of the photon-added state; zero for n < m.
[[nodiscard]] double pnd_pasts(int n, const StateSpec& spec);

/// P(0..cutoff) with an adaptive cutoff: stops once two consecutive terms past
/// n = m fall below kPndTailThreshold, hard cap kPndHardCap.
[[nodiscard]] std::vector<double> pnd_distribution(const StateSpec& spec);

/// Gaussian Wigner function of the squeezed thermal state.
[[nodiscard]] double wigner_sts(PhasePoint p, double lambda, double n_c);

/// Non-Gaussian factor F_m(alpha): W_pasts = F_m * W_sts.
[[nodiscard]] double wigner_factor(PhasePoint p, const StateSpec& spec);

/// Wigner function of the photon-added squeezed thermal state.
[[nodiscard]] double wigner_pasts(PhasePoint p, const StateSpec& spec);

/// Laguerre-Gaussian Wigner function of the m-photon-added thermal state
/// (the lambda = 0 case, through a separate code path).
[[nodiscard]] double wigner_thermal_added(PhasePoint p, double n_c, int m);

/// Hoisted evaluator for grids: coefficients computed once per state.
class WignerEvaluator {
public:
    explicit WignerEvaluator(const StateSpec& spec);

    [[nodiscard]] double operator()(PhasePoint p) const;

private:
    StateSpec spec_;
    WignerCoefficients coeff_;
    double inv_norm_ = 1.0;
    double prefactor_ = 0.0;
};

}  // namespace analytics
}  // namespace pasts
