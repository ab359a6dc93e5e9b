#include "pfr/state.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "pfr/errors.hpp"

namespace pfr {

double RiemannState::total_density() const {
  return std::accumulate(rho.begin(), rho.end(), 0.0);
}

std::vector<double> RiemannState::concentrations() const {
  std::vector<double> c(rho.size());
  for (std::size_t a = 0; a < rho.size(); ++a) {
    c[a] = a == 0 ? 1.0 : rho[a] / rho[0];
  }
  return c;
}

void RiemannState::validate() const {
  if (rho.empty()) {
    throw ContractError("state needs at least one partial density");
  }
  if (!std::isfinite(chi) || !std::isfinite(v)) {
    throw DomainError("chi and v must be finite");
  }
  for (std::size_t a = 0; a < rho.size(); ++a) {
    if (!(rho[a] > 0.0) || !std::isfinite(rho[a])) {
      throw PositivityError("partial density rho_" + std::to_string(a + 1) +
                            " must be positive");
    }
  }
}

double pressure(const EosParameters& params, const RiemannState& state) {
  return mixture_pressure(params, state.chi, state.rho);
}

double sound_speed(const EosParameters& params, const RiemannState& state) {
  return sound_speed(params, state.chi, std::span<const double>(state.rho));
}

PressureCoefficients pressure_coefficients(const EosParameters& params,
                                           const RiemannState& state) {
  return pressure_coefficients(params, state.chi, state.concentrations());
}

} // namespace pfr
