#include "pasts/gaussianity.hpp"

#include <string>

#include "pasts/analytics.hpp"
#include "pasts/errors.hpp"
#include "pasts/kernels.hpp"

namespace pasts::gaussianity {

namespace {

double overlap_kernel(const StateSpec& spec) {
    const FidelityCoefficients k = fidelity_coefficients(spec.lambda, spec.n_c);
    return kernels::factorial(spec.m) * kernels::scaled_legendre(spec.m, k.K1, k.K2);
}

}  // namespace

double purity_sts(double n_c) {
    if (!(n_c >= 0.0)) throw InvalidParameter("n_c must be >= 0, got " + std::to_string(n_c));
    return 1.0 / (2.0 * n_c + 1.0);
}

double fidelity(const StateSpec& spec) {
    spec.validate();
    return overlap_kernel(spec) / analytics::normalization(spec);
}

double subtracted_normalization(const StateSpec& spec) {
    spec.validate();
    const FidelityCoefficients k = fidelity_coefficients(spec.lambda, spec.n_c);
    return kernels::factorial(spec.m) * kernels::scaled_legendre(spec.m, k.H, k.Z);
}

double fidelity_subtracted(const StateSpec& spec) {
    spec.validate();
    return overlap_kernel(spec) / subtracted_normalization(spec);
}

double fidelity_ratio(const StateSpec& spec) {
    spec.validate();
    return subtracted_normalization(spec) / analytics::normalization(spec);
}

}  // namespace pasts::gaussianity
