#ifndef PFR_EOS_HPP
#define PFR_EOS_HPP

#include <span>
#include <vector>

namespace pfr {

enum class Phase { Vapor, Liquid };

/// One phase's stiffened-gas law per component: p_alpha(rho) = a[alpha]^2 rho + d[alpha].
struct PhaseLaw {
  std::vector<double> a; ///< isothermal sound speed per component [m/s]
  std::vector<double> d; ///< partial-pressure offset per component [Pa]
};

/// Parameters of the phase-field mixture pressure law
///   p(chi, rho) = -W(chi) + h(chi) sum p_L,alpha(rho_alpha)
///                 + (1 - h(chi)) sum p_V,alpha(rho_alpha).
struct EosParameters {
  PhaseLaw vapor;
  PhaseLaw liquid;
  double w0 = 0.0; ///< double-well height [Pa]

  int component_count() const { return static_cast<int>(vapor.a.size()); }

  /// Throws ContractError / PositivityError on inconsistent sizes or
  /// non-positive sound speeds / negative w0.
  void validate() const;
};

/// Smooth phase interpolation, clamped to [0,1] outside chi in (-1,1).
double interp_h(double chi);

/// dh/dchi; zero for |chi| >= 1.
double interp_h_prime(double chi);

struct DoubleWell {
  double value;      ///< W(chi) [Pa]
  double derivative; ///< W'(chi) [Pa]
};

/// W(chi) = w0 (chi-1)^2 (chi+1)^2 and its derivative.
DoubleWell double_well(double chi, double w0);

/// p_{k,alpha}(rho_alpha) = a^2 rho_alpha + d for phase k. alpha is 0-based.
double partial_pressure(const EosParameters& params, Phase phase, int alpha,
                        double rho_alpha);

/// Mixture pressure p(chi, rho_1..rho_n) [Pa].
double mixture_pressure(const EosParameters& params, double chi,
                        std::span<const double> rho);

/// Coefficients of the affine form p = a0 + a1 * rho_1 at fixed chi and
/// concentrations c_alpha = rho_alpha / rho_1 (c[0] must be 1).
struct PressureCoefficients {
  double a0; ///< [Pa]
  double a1; ///< [Pa m^3 / kg]
};

PressureCoefficients pressure_coefficients(const EosParameters& params,
                                           double chi,
                                           std::span<const double> c);

/// Per-component stiffness A_alpha^2 = dp/drho_alpha [m^2/s^2].
std::vector<double> squared_stiffness(const EosParameters& params, double chi);

/// B = dp/dchi at fixed partial densities [Pa].
double dp_dchi(const EosParameters& params, double chi,
               std::span<const double> rho);

/// Mixture sound speed A = sqrt(sum A_alpha^2 rho_alpha / sum rho_alpha).
/// Depends only on chi and the concentrations, so it is constant along a
/// rarefaction fan.
double sound_speed(const EosParameters& params, double chi,
                   std::span<const double> rho);

} // namespace pfr

#endif
