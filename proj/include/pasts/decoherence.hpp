#pragma once

// Wigner function of the photon-added squeezed thermal state in a thermal
// channel, and the origin-negativity time thresholds.

#include "pasts/analytics.hpp"
#include "pasts/states.hpp"

namespace pasts::decoherence {

/// Below this kt the initial-state Wigner function is returned: the channel
/// coefficients degenerate (T -> 0, g3 -> inf) as kt -> 0.
inline constexpr double kInitialBranchKt = 1e-9;

/// W(eta, t) = F_m(eta, t) W0(eta, t).
[[nodiscard]] double evolved_wigner(PhasePoint p, const StateSpec& spec,
                                    const ChannelSpec& channel);

/// Coefficients hoisted per (state, channel); omega is formed per point.
class EvolvedWignerEvaluator {
public:
    EvolvedWignerEvaluator(const StateSpec& spec, const ChannelSpec& channel);

    [[nodiscard]] double operator()(PhasePoint p) const;

    /// Empty for the initial-state branch.
    [[nodiscard]] const EvolvedCoefficients& coefficients() const { return coeff_; }
    [[nodiscard]] bool initial_branch() const { return initial_branch_; }

private:
    StateSpec spec_;
    ChannelSpec channel_;
    bool initial_branch_ = false;
    analytics::WignerEvaluator initial_;
    EvolvedCoefficients coeff_{};
    double inv_norm_ = 1.0;
};

/// kt_c = 1/2 ln((2N+2)/(2N+1)): for m = 1 the origin is negative iff kt < kt_c,
/// independent of lambda and n_c.
[[nodiscard]] double threshold_added(double bath_mean);

/// Single-photon-subtracted counterpart,
///   kt_cs = 1/2 ln[1 - (2n_c+1)/(2N+1) (n_c - sinh^2 l)/(n_c cosh 2l + sinh^2 l)].
/// Positive iff n_c < sinh^2 lambda; a negative value means the subtracted
/// state has no origin negativity at any kt >= 0. Throws DomainError ("no finite
/// threshold") when the logarithm argument is <= 0.
[[nodiscard]] double threshold_subtracted(double bath_mean, double n_c, double lambda);

/// Closed form of e^{2 kt_c} - e^{2 kt_cs}:
///   2 n_c (n_c+1) / [(2N+1)(n_c cosh 2l + sinh^2 l)].
[[nodiscard]] double threshold_gap_closed_form(double bath_mean, double n_c, double lambda);

/// e^{2 kt_c} - e^{2 kt_cs} from the two thresholds. Throws ConsistencyError if
/// it disagrees with the closed form beyond 1e-12 (relative to max(1, |gap|)).
[[nodiscard]] double threshold_gap(double bath_mean, double n_c, double lambda);

}  // namespace pasts::decoherence
