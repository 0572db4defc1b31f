#ifndef TABLECOUNT_ERRORS_HPP
#define TABLECOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tablecount {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Margin validation failures.
struct SumMismatchError : Error {
    using Error::Error;
};
struct EmptyMarginsError : Error {
    using Error::Error;
};

// Special-function argument outside the supported domain.
struct DomainError : Error {
    using Error::Error;
};

// A gamma argument landed exactly on a pole (0, -1, -2, ...).
struct GammaPoleError : Error {
    using Error::Error;
};

// Diaconis-Efron Dirichlet parameter K_c <= 0.
struct DegenerateKError : Error {
    using Error::Error;
};

// Max-entropy solver failed to reach the residual tolerance.
struct NoConvergenceError : Error {
    double row_residual;
    double col_residual;
    NoConvergenceError(const std::string& msg, double row_res, double col_res)
        : Error(msg), row_residual(row_res), col_residual(col_res) {}
};

// Q matrix not positive definite during factorization.
struct SingularQError : Error {
    using Error::Error;
};

// SIS column state that cannot be completed.
struct InfeasibleError : Error {
    using Error::Error;
};

// Exact-oracle state-space guard tripped.
struct TooLargeError : Error {
    using Error::Error;
};

// Benchmark grid cell with no valid margins (e.g. N < m).
struct InvalidCellError : Error {
    using Error::Error;
};

}  // namespace tablecount

#endif
