#ifndef PFR_STATE_HPP
#define PFR_STATE_HPP

#include <vector>

#include "pfr/eos.hpp"

namespace pfr {

/// One side's primitive data (chi, rho_1..rho_n, v). No vacuum: rho_alpha > 0.
struct RiemannState {
  double chi = 0.0;
  std::vector<double> rho;
  double v = 0.0;

  /// Total density sum rho_alpha.
  double total_density() const;

  /// Concentrations c_alpha = rho_alpha / rho_1 (c_1 == 1 by construction).
  std::vector<double> concentrations() const;

  /// Throws PositivityError / DomainError on invalid data.
  void validate() const;
};

double pressure(const EosParameters& params, const RiemannState& state);
double sound_speed(const EosParameters& params, const RiemannState& state);
PressureCoefficients pressure_coefficients(const EosParameters& params,
                                           const RiemannState& state);

} // namespace pfr

#endif
