#include "pfr/wave_curves.hpp"

#include <cmath>

#include "pfr/errors.hpp"

namespace pfr {

std::string to_string(ShockMode mode) {
  return mode == ShockMode::PaperLiteral ? "paper-literal" : "rh-consistent";
}

std::string to_string(WaveKind kind) {
  switch (kind) {
    case WaveKind::Shock: return "shock";
    case WaveKind::Rarefaction: return "rarefaction";
    default: return "zero-strength";
  }
}

double f_side(double p, const RiemannState& state, Side /*side*/,
              const EosParameters& params, ShockMode mode) {
  state.validate();
  if (!std::isfinite(p)) {
    throw DomainError("pressure argument must be finite");
  }
  const PressureCoefficients co = pressure_coefficients(params, state);
  if (!(p > co.a0)) {
    throw DomainError("pressure " + std::to_string(p) +
                      " is at or below the EOS offset A0 = " +
                      std::to_string(co.a0));
  }
  const double p_side = pressure(params, state);
  if (p <= p_side) {
    // Rarefaction: logarithmic Riemann invariant, fan-constant sound speed.
    return sound_speed(params, state) *
           std::log((p - co.a0) / (co.a1 * state.rho[0]));
  }
  // Shock: (p - A0) - A1 rho_1 = A1 (rho*_1 - rho_1) > 0 here.
  const double root = std::sqrt(p - p_side) *
                      std::sqrt(1.0 - co.a1 * state.rho[0] / (p - co.a0));
  const double rho_total = state.total_density();
  return mode == ShockMode::PaperLiteral ? root / rho_total
                                         : root / std::sqrt(rho_total);
}

double f_total(double p, const RiemannState& left, const RiemannState& right,
               const EosParameters& params, ShockMode mode) {
  return f_side(p, left, Side::Left, params, mode) +
         f_side(p, right, Side::Right, params, mode) + (right.v - left.v);
}

std::vector<double> star_densities(double p_star, const RiemannState& state,
                                   const EosParameters& params) {
  state.validate();
  const PressureCoefficients co = pressure_coefficients(params, state);
  if (!(p_star > co.a0)) {
    throw DomainError("star pressure must exceed the EOS offset A0");
  }
  const double rho1_star = (p_star - co.a0) / co.a1;
  std::vector<double> rho_star(state.rho.size());
  rho_star[0] = rho1_star;
  for (std::size_t a = 1; a < state.rho.size(); ++a) {
    rho_star[a] = state.rho[a] / state.rho[0] * rho1_star;
  }
  return rho_star;
}

ShockSpeedResult shock_speed(const RiemannState& state,
                             std::span<const double> rho_star, double v_star,
                             Side /*side*/) {
  state.validate();
  if (rho_star.size() != state.rho.size()) {
    throw ContractError("star density count mismatch");
  }
  if (rho_star[0] == state.rho[0]) {
    throw DegenerateWaveError(
        "zero-strength wave: shock speed is indeterminate");
  }
  const double speed = (state.rho[0] * state.v - rho_star[0] * v_star) /
                       (state.rho[0] - rho_star[0]);
  MassFlux flux;
  flux.q.resize(state.rho.size());
  for (std::size_t a = 0; a < state.rho.size(); ++a) {
    flux.q[a] = state.rho[a] * (state.v - speed);
  }
  return {speed, std::move(flux)};
}

FanSpeeds rarefaction_speeds(const RiemannState& state, double v_star,
                             Side side, const EosParameters& params) {
  const double a = sound_speed(params, state);
  if (side == Side::Left) {
    return {state.v - a, v_star - a};
  }
  return {state.v + a, v_star + a};
}

} // namespace pfr
