#include "pasts/states.hpp"

#include <cmath>
#include <string>

#include "pasts/errors.hpp"

namespace pasts {

namespace {

void require_nonnegative(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw InvalidParameter(std::string(name) + " must be finite and >= 0, got " +
                               std::to_string(v));
    }
}

}  // namespace

void StateSpec::validate() const {
    require_nonnegative(lambda, "lambda");
    require_nonnegative(n_c, "n_c");
    if (m < 0) throw InvalidParameter("m must be >= 0, got " + std::to_string(m));
}

void ChannelSpec::validate() const {
    require_nonnegative(bath_mean, "bath mean N");
    require_nonnegative(kt, "kt");
}

StsCoefficients sts_coefficients(double lambda, double n_c) {
    require_nonnegative(lambda, "lambda");
    require_nonnegative(n_c, "n_c");
    const double ch = std::cosh(lambda);
    const double sh = std::sinh(lambda);
    const double two_n1 = 2.0 * n_c + 1.0;

    StsCoefficients c;
    c.A = n_c * n_c + two_n1 * ch * ch;
    c.B = n_c * (n_c + 1.0) / c.A;
    c.C = two_n1 * std::sinh(2.0 * lambda) / (2.0 * c.A);
    c.B_bar = n_c * std::cosh(2.0 * lambda) + ch * ch;
    c.D = (n_c * n_c - two_n1 * sh * sh) / c.A;
    c.tau1_sq = 0.5 * (two_n1 * std::exp(2.0 * lambda) + 1.0);
    c.tau2_sq = 0.5 * (two_n1 * std::exp(-2.0 * lambda) + 1.0);
    return c;
}

WignerCoefficients wigner_coefficients(double lambda, double n_c) {
    const StsCoefficients s = sts_coefficients(lambda, n_c);
    const double two_n1 = 2.0 * n_c + 1.0;
    WignerCoefficients w;
    w.A1 = s.A / (two_n1 * two_n1);
    w.A2 = std::sinh(2.0 * lambda) / two_n1;
    w.A3 = std::cosh(2.0 * lambda) / two_n1;
    w.A4 = w.A3 + 1.0;
    return w;
}

EvolvedCoefficients evolved_coefficients(double lambda, double n_c, const ChannelSpec& channel) {
    require_nonnegative(lambda, "lambda");
    require_nonnegative(n_c, "n_c");
    channel.validate();
    if (!(channel.kt > 0.0)) {
        throw InvalidParameter("evolved_coefficients needs kt > 0; use the initial-state formula");
    }
    const double two_n1 = 2.0 * n_c + 1.0;
    const double two_N1 = 2.0 * channel.bath_mean + 1.0;
    const double ch = std::cosh(lambda);
    const double e_kt = std::exp(-channel.kt);
    const double T = -std::expm1(-2.0 * channel.kt);

    EvolvedCoefficients c;
    c.g0 = std::cosh(2.0 * lambda) / two_n1;
    c.g1 = (n_c + ch * ch) / two_n1;
    c.g2 = std::sinh(2.0 * lambda) / two_n1;
    c.g3 = 2.0 * e_kt / (two_N1 * T);

    const double x = c.g3 * e_kt;  // g3 e^{-kt}, equals 2 exactly at the threshold
    const double P = 2.0 * c.g0 + x;
    c.G = P * P - 4.0 * c.g2 * c.g2;
    // g3 e^{kt} - P g3^2 / G, rearranged so the kt -> 0 cancellation is exact.
    c.Delta1 = std::exp(2.0 * channel.kt) * x * (2.0 * c.g0 * P - 4.0 * c.g2 * c.g2) / c.G;
    const double half_x_minus_1 = 0.5 * x - 1.0;
    c.Delta2 = c.g2 / c.G * half_x_minus_1 * half_x_minus_1;
    c.chi = (2.0 - x) / c.G * (c.g0 + c.g1 * x + 1.0 / (two_n1 * two_n1));

    // omega = 2 g3/(x-2) (2 Delta2 conj(eta) + chi eta); the first product
    // simplifies to g3 g2 (x-2)/G, the second to 2 g3 (g2^2 - P g1)/G.
    c.omega_conj_coeff = c.g3 * c.g2 * (x - 2.0) / c.G;
    c.omega_coeff = 2.0 * c.g3 * (c.g2 * c.g2 - P * c.g1) / c.G;

    c.w0_prefactor = 2.0 / two_n1 / (M_PI * two_N1 * T * std::sqrt(c.G));
    c.w0_quad = c.g2 * c.g3 * c.g3 / c.G;
    return c;
}

FidelityCoefficients fidelity_coefficients(double lambda, double n_c) {
    require_nonnegative(lambda, "lambda");
    require_nonnegative(n_c, "n_c");
    const double two_n1 = 2.0 * n_c + 1.0;
    const double sh = std::sinh(lambda);
    const double sh2 = std::sinh(2.0 * lambda);
    FidelityCoefficients f;
    f.K0 = (2.0 * n_c * n_c + 2.0 * n_c + 1.0) / (4.0 * two_n1) * sh2;
    f.K1 = n_c * (n_c + 1.0) / two_n1 * std::cosh(2.0 * lambda);
    const double p = n_c * (n_c + 1.0) / two_n1;
    f.K2 = p * p - 0.25 * sh2 * sh2;
    f.Z = n_c * n_c - two_n1 * sh * sh;
    f.H = n_c * std::cosh(2.0 * lambda) + sh * sh;
    return f;
}

}  // namespace pasts
