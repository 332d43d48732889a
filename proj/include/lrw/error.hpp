#pragma once

#include <stdexcept>
#include <string>

namespace lrw {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments or configuration values.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A walk configuration with no way out of the current state (r = 0 at an
/// isolated node) or a request that needs r > 0.
class NonErgodicError : public Error {
public:
    using Error::Error;
};

/// A query touched adjacency information the observation procedure has not
/// revealed.
class ObservabilityError : public Error {
public:
    using Error::Error;
};

/// A state sequence has zero probability under the walk.
class UnreachableSequenceError : public Error {
public:
    using Error::Error;
};

/// Pair-chain state space would exceed the configured cap.
class StateSpaceTooLarge : public Error {
public:
    using Error::Error;
};

class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, double residual, long iterations)
        : Error(what), residual_(residual), iterations_(iterations) {}

    double residual() const noexcept { return residual_; }
    long iterations() const noexcept { return iterations_; }

private:
    double residual_;
    long iterations_;
};

/// No collisions between two walks; capture-recapture is undefined.
class NoCollisionError : public Error {
public:
    using Error::Error;
};

/// No informative window; a combined total cannot be formed.
class NoObservationError : public Error {
public:
    using Error::Error;
};

/// Proportional-to-probability weights need every ES3 sequence to be
/// computable from the sample.
class PpwInfeasibleError : public Error {
public:
    using Error::Error;
};

}  // namespace lrw
