#include "pasts/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pasts/errors.hpp"
#include "pasts/kernels.hpp"

namespace pasts::decoherence {

EvolvedWignerEvaluator::EvolvedWignerEvaluator(const StateSpec& spec, const ChannelSpec& channel)
    : spec_(spec), channel_(channel), initial_(spec) {
    channel_.validate();
    initial_branch_ = channel_.kt <= kInitialBranchKt;
    if (initial_branch_) return;
    coeff_ = evolved_coefficients(spec_.lambda, spec_.n_c, channel_);
    inv_norm_ = 1.0 / analytics::normalization(spec_);
}

double EvolvedWignerEvaluator::operator()(PhasePoint p) const {
    if (initial_branch_) return initial_(p);
    const double r2 = p.re * p.re + p.im * p.im;
    const double re_sq = p.re * p.re - p.im * p.im;
    const double w0 =
        coeff_.w0_prefactor * std::exp(-coeff_.Delta1 * r2 + 2.0 * coeff_.w0_quad * re_sq);
    if (spec_.m == 0) return w0;
    const kernels::Complex eta = p.value();
    const kernels::Complex omega = coeff_.omega_conj_coeff * std::conj(eta) + coeff_.omega_coeff * eta;
    return kernels::bilinear_hermite_sum(spec_.m, coeff_.Delta2, coeff_.chi, omega) * inv_norm_ *
           w0;
}

double evolved_wigner(PhasePoint p, const StateSpec& spec, const ChannelSpec& channel) {
    return EvolvedWignerEvaluator(spec, channel)(p);
}

double threshold_added(double bath_mean) {
    ChannelSpec{bath_mean, 0.0}.validate();
    return 0.5 * std::log1p(1.0 / (2.0 * bath_mean + 1.0));
}

double threshold_subtracted(double bath_mean, double n_c, double lambda) {
    ChannelSpec{bath_mean, 0.0}.validate();
    StateSpec{lambda, n_c, 0}.validate();
    const double sh2 = std::sinh(lambda) * std::sinh(lambda);
    const double h = n_c * std::cosh(2.0 * lambda) + sh2;
    if (!(h > 0.0)) {
        throw DomainError("no finite threshold: n_c cosh 2lambda + sinh^2 lambda = 0");
    }
    const double arg =
        1.0 - (2.0 * n_c + 1.0) / (2.0 * bath_mean + 1.0) * (n_c - sh2) / h;
    if (!(arg > 0.0)) {
        throw DomainError("no finite threshold: logarithm argument " + std::to_string(arg) +
                          " <= 0");
    }
    return 0.5 * std::log(arg);
}

double threshold_gap_closed_form(double bath_mean, double n_c, double lambda) {
    const double sh = std::sinh(lambda);
    return 2.0 * n_c * (n_c + 1.0) /
           ((2.0 * bath_mean + 1.0) * (n_c * std::cosh(2.0 * lambda) + sh * sh));
}

double threshold_gap(double bath_mean, double n_c, double lambda) {
    const double gap = std::exp(2.0 * threshold_added(bath_mean)) -
                       std::exp(2.0 * threshold_subtracted(bath_mean, n_c, lambda));
    const double closed = threshold_gap_closed_form(bath_mean, n_c, lambda);
    if (std::abs(gap - closed) > 1e-12 * std::max(1.0, std::abs(closed))) {
        throw ConsistencyError("threshold gap " + std::to_string(gap) +
                               " disagrees with closed form " + std::to_string(closed));
    }
    return gap;
}

}  // namespace pasts::decoherence
