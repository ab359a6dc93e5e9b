#ifndef PFR_WAVE_CURVES_HPP
#define PFR_WAVE_CURVES_HPP

#include <string>
#include <vector>

#include "pfr/eos.hpp"
#include "pfr/state.hpp"

namespace pfr {

enum class Side { Left, Right };

/// The two shock-branch formulas. They differ only in the shock denominator:
/// PaperLiteral divides sqrt(p - p_s) by sum(rho_alpha), RhConsistent by
/// sqrt(sum(rho_alpha)); the latter is the value forced by the
/// Rankine-Hugoniot mass/momentum chain. Rarefaction branches are identical.
enum class ShockMode { PaperLiteral, RhConsistent };

std::string to_string(ShockMode mode);

enum class WaveKind { Shock, Rarefaction, ZeroStrength };

std::string to_string(WaveKind kind);

/// One outer wave. For a shock head == tail == S; for a rarefaction head is
/// the edge adjacent to the initial state; a zero-strength wave carries the
/// collapsed fan speed v* -/+ A in both fields.
/// Left wave: head <= tail <= v*; right wave: v* <= tail <= head.
struct WaveDescriptor {
  WaveKind kind = WaveKind::ZeroStrength;
  double head = 0.0;
  double tail = 0.0;

  double shock_speed() const { return head; }
  /// Smallest / largest signal speed of the wave.
  double min_speed() const { return head < tail ? head : tail; }
  double max_speed() const { return head < tail ? tail : head; }
};

/// Per-component relative mass fluxes Q_alpha = rho_alpha (v - S) across a
/// shock; same sign for every alpha.
struct MassFlux {
  std::vector<double> q;
};

/// Velocity increment along one side's wave curve, with the sign convention
///   v* = v_left - f_side(p, left)  and  v* = v_right + f_side(p, right).
/// Shock branch for p > p_side, rarefaction branch for p <= p_side.
double f_side(double p, const RiemannState& state, Side side,
              const EosParameters& params, ShockMode mode);

/// f_left + f_right + (v_+ - v_-); its unique root is the star pressure.
double f_total(double p, const RiemannState& left, const RiemannState& right,
               const EosParameters& params, ShockMode mode);

/// Star-region partial densities rho*_alpha = c_alpha (p* - A0) / A1 for the
/// given side's chi and concentrations.
std::vector<double> star_densities(double p_star, const RiemannState& state,
                                   const EosParameters& params);

struct ShockSpeedResult {
  double speed; ///< S [m/s]
  MassFlux flux;
};

/// Shock speed from the mass jump condition, S = (rho_1 v - rho*_1 v*) /
/// (rho_1 - rho*_1), plus the per-component relative mass fluxes.
/// Throws DegenerateWaveError when rho*_1 == rho_1.
ShockSpeedResult shock_speed(const RiemannState& state,
                             std::span<const double> rho_star, double v_star,
                             Side side);

struct FanSpeeds {
  double head;
  double tail;
};

/// Rarefaction head/tail speeds; the sound speed is constant across the fan
/// because chi and the concentrations are Riemann invariants there.
FanSpeeds rarefaction_speeds(const RiemannState& state, double v_star,
                             Side side, const EosParameters& params);

} // namespace pfr

#endif
