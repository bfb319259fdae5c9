#pragma once

// Reference-overlap fidelity between the photon-added state and its
// squeezed thermal reference:
//
//   F = tr(rho_s rho) / tr(rho_s^2).
//
// This is an overlap normalized by the reference purity, NOT the Uhlmann
// fidelity; it is used as a non-Gaussianity proxy (smaller F, more
// non-Gaussian).

#include "pasts/states.hpp"

namespace pasts::gaussianity {

/// tr(rho_s^2) = 1/(2 n_c + 1); squeezing is unitary so lambda drops out.
[[nodiscard]] double purity_sts(double n_c);

/// F = m! S_m(K1, K2) / C_{a,m}.
[[nodiscard]] double fidelity(const StateSpec& spec);

/// C_{s,m} = tr(a^{+m} a^m rho_s) = m! S_m(H, Z).
[[nodiscard]] double subtracted_normalization(const StateSpec& spec);

/// Fidelity of the m-photon-subtracted state: m! S_m(K1, K2) / C_{s,m}.
[[nodiscard]] double fidelity_subtracted(const StateSpec& spec);

/// F / F_s = C_{s,m} / C_{a,m}.
[[nodiscard]] double fidelity_ratio(const StateSpec& spec);

}  // namespace pasts::gaussianity
