#ifndef SLLG_ERRORS_HPP
#define SLLG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sllg {

struct SimError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonZeroMeanError : SimError {
    explicit NonZeroMeanError(double mean)
        : SimError("poisson_solve: right-hand side has nonzero mean " + std::to_string(mean)) {}
};

struct CutoffTooLargeError : SimError {
    CutoffTooLargeError(int cutoff, int limit)
        : SimError("noise cutoff " + std::to_string(cutoff) + " exceeds dealias limit n/3 = " +
                   std::to_string(limit)) {}
};

struct NormCollapseError : SimError {
    long step;
    double min_norm;
    NormCollapseError(long step_, double min_norm_)
        : SimError("norm collapse at step " + std::to_string(step_) + ": min |u| = " +
                   std::to_string(min_norm_)),
          step(step_), min_norm(min_norm_) {}
};

struct NonFiniteError : SimError {
    long step;
    explicit NonFiniteError(long step_)
        : SimError("non-finite value at step " + std::to_string(step_)), step(step_) {}
};

struct GridMismatchError : SimError {
    GridMismatchError() : SimError("fields live on different grids") {}
};

struct RadiusOutOfRangeError : SimError {
    RadiusOutOfRangeError(double rho, double limit)
        : SimError("cover radius " + std::to_string(rho) + " outside (0, " +
                   std::to_string(limit) + "]") {}
};

struct InsufficientEnsembleError : SimError {
    InsufficientEnsembleError(std::size_t have, std::size_t need)
        : SimError("ensemble of " + std::to_string(have) + " trajectories, need " +
                   std::to_string(need)) {}
};

struct BadParamsError : SimError {
    using SimError::SimError;
};

struct SingularModeError : SimError {
    SingularModeError(int k1, int k2)
        : SimError("operator annihilates nonzero right-hand-side mode (" + std::to_string(k1) +
                   ", " + std::to_string(k2) + ")") {}
};

struct ConfigError : SimError {
    using SimError::SimError;
};

}  // namespace sllg

#endif
