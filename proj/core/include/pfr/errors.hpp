#ifndef PFR_ERRORS_HPP
#define PFR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfr {

/// Non-positive partial density (the model excludes vacuum states).
class PositivityError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Argument outside the mathematical domain of an operation
/// (non-finite input, pressure at or below the EOS offset A0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Caller broke an interface contract (mismatched sizes, bad grid, ...).
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// No sign change found while searching for a root bracket.
class BracketError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Iteration failed to converge.
class SolverError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Shock relations requested for a zero-strength wave (rho* == rho).
class DegenerateWaveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace pfr

#endif
