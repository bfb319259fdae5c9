#pragma once

#include <stdexcept>
#include <string>

namespace pasts {

/// Parameters outside the physical domain (negative λ, n_c, N, κt...).
class InvalidParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A closed form has no finite value for the given inputs (e.g. the
/// subtracted-state threshold when its logarithm argument is ≤ 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Moment undefined, e.g. Mandel Q of the vacuum.
class UndefinedMoment : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Fock-space truncation too small for the requested tolerance.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// RK4 integration drifted out of tolerance.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result violated an internal invariant by more than rounding allows.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace pasts
