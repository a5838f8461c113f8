// errors.hpp: exception types raised by the nessfi library

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nessfi {

// Base class for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside the domain of a function (non-positive temperature, invalid
// parameter set, asymmetric junction passed to a symmetric-only formula).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed sweep spec or config file. Raised before any computation starts.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A matrix was expected to have the X form (only the diagonal and the
// rho_23 / rho_32 pair populated) and does not.
class ShapeError : public Error {
public:
    using Error::Error;
};

// The generator has more than one stationary state.
class AmbiguityError : public Error {
public:
    AmbiguityError(const std::string& what, std::size_t null_dimension)
        : Error(what), null_dimension_(null_dimension) {}
    std::size_t null_dimension() const noexcept { return null_dimension_; }

private:
    std::size_t null_dimension_;
};

// The linear solve did not reach the residual tolerance.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double residual)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// Finite-difference step too small to resolve a change in the state.
class StepError : public Error {
public:
    using Error::Error;
};

// An eigenvalue is (numerically) zero while its derivative is not, so the
// spectral QFI formula is singular at this point.
class RankChangeError : public Error {
public:
    RankChangeError(const std::string& what, int index, double p, double dp)
        : Error(what), index_(index), p_(p), dp_(dp) {}
    int index() const noexcept { return index_; }
    double probability() const noexcept { return p_; }
    double derivative() const noexcept { return dp_; }

private:
    int index_;
    double p_;
    double dp_;
};

// The discord optimizer hit its iteration cap.
class OptimizerError : public Error {
public:
    OptimizerError(const std::string& what, double best_value, double grid_best,
                   int iterations)
        : Error(what), best_value_(best_value), grid_best_(grid_best),
          iterations_(iterations) {}
    double best_value() const noexcept { return best_value_; }
    double grid_best() const noexcept { return grid_best_; }
    int iterations() const noexcept { return iterations_; }

private:
    double best_value_;
    double grid_best_;
    int iterations_;
};

} // namespace nessfi
