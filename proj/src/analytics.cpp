#include "pasts/analytics.hpp"

#include <cmath>
#include <string>

#include "pasts/errors.hpp"
#include "pasts/kernels.hpp"

namespace pasts::analytics {

namespace {

using kernels::Complex;

// Values in [-kClampFloor, 0) are rounding noise; below -kNegativityLimit is a bug.
constexpr double kClampFloor = 1e-12;
constexpr double kNegativityLimit = 1e-9;

double clamp_probability(double p, int n) {
    if (p >= 0.0) return p;
    if (p >= -kClampFloor) return 0.0;
    if (p < -kNegativityLimit) {
        throw ConsistencyError("negative probability P(" + std::to_string(n) +
                               ") = " + std::to_string(p));
    }
    return 0.0;
}

double norm_at(const StsCoefficients& s, int m) {
    return kernels::factorial(m) * kernels::scaled_legendre(m, s.B_bar, s.A);
}

}  // namespace

double normalization(const StateSpec& spec) {
    spec.validate();
    return norm_at(sts_coefficients(spec.lambda, spec.n_c), spec.m);
}

double mean_photon(const StateSpec& spec) {
    spec.validate();
    const StsCoefficients s = sts_coefficients(spec.lambda, spec.n_c);
    return norm_at(s, spec.m + 1) / norm_at(s, spec.m) - 1.0;
}

double second_factorial_moment(const StateSpec& spec) {
    spec.validate();
    const StsCoefficients s = sts_coefficients(spec.lambda, spec.n_c);
    const double c0 = norm_at(s, spec.m);
    return norm_at(s, spec.m + 2) / c0 - 4.0 * norm_at(s, spec.m + 1) / c0 + 2.0;
}

double mandel_q(const StateSpec& spec) {
    const double mean = mean_photon(spec);
    if (!(mean > 0.0)) {
        throw UndefinedMoment("Mandel Q undefined: mean photon number is zero (vacuum)");
    }
    return second_factorial_moment(spec) / mean - mean;
}

double pnd_sts(int n, double lambda, double n_c) {
    if (n < 0) return 0.0;
    const StsCoefficients s = sts_coefficients(lambda, n_c);
    return clamp_probability(kernels::scaled_legendre(n, s.B, s.D) / std::sqrt(s.A), n);
}

double pnd_pasts(int n, const StateSpec& spec) {
    spec.validate();
    if (n < spec.m) return 0.0;
    const StsCoefficients s = sts_coefficients(spec.lambda, spec.n_c);
    const double p = kernels::falling_factorial(n, spec.m) / norm_at(s, spec.m) *
                     kernels::scaled_legendre(n - spec.m, s.B, s.D) / std::sqrt(s.A);
    return clamp_probability(p, n);
}

std::vector<double> pnd_distribution(const StateSpec& spec) {
    spec.validate();
    const StsCoefficients s = sts_coefficients(spec.lambda, spec.n_c);
    const double scale = 1.0 / (norm_at(s, spec.m) * std::sqrt(s.A));

    std::vector<double> out(static_cast<std::size_t>(spec.m), 0.0);
    // Run the Legendre recurrence in k = n - m directly instead of
    // restarting it per n.
    double prev = 0.0;
    double cur = 1.0;
    double ff = kernels::falling_factorial(spec.m, spec.m);  // m!/0!
    double cumulative = 0.0;
    for (int k = 0; spec.m + k <= kPndHardCap; ++k) {
        const int n = spec.m + k;
        if (k == 1) {
            prev = 1.0;
            cur = s.B;
        } else if (k > 1) {
            const double next = ((2.0 * (k - 1) + 1.0) * s.B * cur - (k - 1) * s.D * prev) / k;
            prev = cur;
            cur = next;
        }
        if (k > 0) ff *= static_cast<double>(n) / k;  // n!/(n-m)! = (n-1)!/(n-1-m)! * n/k
        out.push_back(clamp_probability(ff * cur * scale, n));
        cumulative += out.back();
        // Past the bulk (half the mass seen) two consecutive sub-threshold
        // terms end the scan; pairs guard against the zero odd terms of
        // squeezed vacuum.
        if (k >= 1 && cumulative >= 0.5 && out[out.size() - 1] < kPndTailThreshold &&
            out[out.size() - 2] < kPndTailThreshold) {
            break;
        }
    }
    return out;
}

double wigner_sts(PhasePoint p, double lambda, double n_c) {
    const WignerCoefficients w = wigner_coefficients(lambda, n_c);
    const double two_n1 = 2.0 * n_c + 1.0;
    const double r2 = p.re * p.re + p.im * p.im;
    const double re_sq = p.re * p.re - p.im * p.im;  // Re(alpha^2)
    return std::exp(2.0 * w.A2 * re_sq - 2.0 * w.A3 * r2) / (M_PI * two_n1);
}

double wigner_factor(PhasePoint p, const StateSpec& spec) {
    spec.validate();
    if (spec.m == 0) return 1.0;
    const WignerCoefficients w = wigner_coefficients(spec.lambda, spec.n_c);
    const Complex a = p.value();
    const Complex u = w.A2 * std::conj(a) - w.A4 * a;
    return kernels::bilinear_hermite_sum(spec.m, 0.25 * w.A2, -0.5 * w.A4, u) /
           normalization(spec);
}

double wigner_pasts(PhasePoint p, const StateSpec& spec) {
    return wigner_factor(p, spec) * wigner_sts(p, spec.lambda, spec.n_c);
}

double wigner_thermal_added(PhasePoint p, double n_c, int m) {
    StateSpec{0.0, n_c, m}.validate();
    const double two_n1 = 2.0 * n_c + 1.0;
    const double r2 = p.re * p.re + p.im * p.im;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(-2.0 * r2 / two_n1) / (M_PI * std::pow(two_n1, m + 1)) *
           kernels::laguerre(m, 4.0 * (n_c + 1.0) * r2 / two_n1);
}

WignerEvaluator::WignerEvaluator(const StateSpec& spec)
    : spec_(spec), coeff_(wigner_coefficients(spec.lambda, spec.n_c)) {
    spec_.validate();
    inv_norm_ = 1.0 / normalization(spec_);
    prefactor_ = 1.0 / (M_PI * (2.0 * spec_.n_c + 1.0));
}

double WignerEvaluator::operator()(PhasePoint p) const {
    const double r2 = p.re * p.re + p.im * p.im;
    const double re_sq = p.re * p.re - p.im * p.im;
    const double w0 = prefactor_ * std::exp(2.0 * coeff_.A2 * re_sq - 2.0 * coeff_.A3 * r2);
    if (spec_.m == 0) return w0;
    const Complex a = p.value();
    const Complex u = coeff_.A2 * std::conj(a) - coeff_.A4 * a;
    return kernels::bilinear_hermite_sum(spec_.m, 0.25 * coeff_.A2, -0.5 * coeff_.A4, u) *
           inv_norm_ * w0;
}

}  // namespace pasts::analytics
