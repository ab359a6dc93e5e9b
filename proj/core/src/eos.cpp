#include "pfr/eos.hpp"

#include <cmath>
#include <string>

#include "pfr/errors.hpp"

namespace pfr {

namespace {

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

void require_positive_densities(std::span<const double> rho) {
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!(rho[i] > 0.0) || !std::isfinite(rho[i])) {
      throw PositivityError("partial density rho_" + std::to_string(i + 1) +
                            " must be positive, got " + std::to_string(rho[i]));
    }
  }
}

void require_component_count(const EosParameters& params, std::size_t n) {
  if (static_cast<std::size_t>(params.component_count()) != n) {
    throw ContractError("component count mismatch: parameters have " +
                        std::to_string(params.component_count()) +
                        ", state has " + std::to_string(n));
  }
}

} // namespace

void EosParameters::validate() const {
  const std::size_t n = vapor.a.size();
  if (n < 1) {
    throw ContractError("at least one component required");
  }
  if (vapor.d.size() != n || liquid.a.size() != n || liquid.d.size() != n) {
    throw ContractError("phase-law arrays must all have length " +
                        std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(vapor.a[i] > 0.0) || !(liquid.a[i] > 0.0)) {
      throw PositivityError("sound speeds must be positive (component " +
                            std::to_string(i + 1) + ")");
    }
  }
  if (!(w0 >= 0.0)) {
    throw PositivityError("double-well height w0 must be non-negative");
  }
}

double interp_h(double chi) {
  require_finite(chi, "chi");
  if (chi <= -1.0) return 0.0;
  if (chi >= 1.0) return 1.0;
  return (0.5 - 0.25 * chi) * (chi + 1.0) * (chi + 1.0);
}

double interp_h_prime(double chi) {
  require_finite(chi, "chi");
  if (chi <= -1.0 || chi >= 1.0) return 0.0;
  return 0.75 * (1.0 - chi * chi);
}

DoubleWell double_well(double chi, double w0) {
  require_finite(chi, "chi");
  const double m = (chi - 1.0) * (chi + 1.0); // chi^2 - 1
  return {w0 * m * m, 4.0 * w0 * chi * m};
}

double partial_pressure(const EosParameters& params, Phase phase, int alpha,
                        double rho_alpha) {
  if (alpha < 0 || alpha >= params.component_count()) {
    throw ContractError("component index out of range");
  }
  if (!(rho_alpha > 0.0) || !std::isfinite(rho_alpha)) {
    throw PositivityError("partial density must be positive");
  }
  const PhaseLaw& law = phase == Phase::Liquid ? params.liquid : params.vapor;
  return law.a[alpha] * law.a[alpha] * rho_alpha + law.d[alpha];
}

double mixture_pressure(const EosParameters& params, double chi,
                        std::span<const double> rho) {
  require_component_count(params, rho.size());
  require_positive_densities(rho);
  const double hval = interp_h(chi);
  double liquid_sum = 0.0;
  double vapor_sum = 0.0;
  for (std::size_t a = 0; a < rho.size(); ++a) {
    liquid_sum += params.liquid.a[a] * params.liquid.a[a] * rho[a] +
                  params.liquid.d[a];
    vapor_sum += params.vapor.a[a] * params.vapor.a[a] * rho[a] +
                 params.vapor.d[a];
  }
  return -double_well(chi, params.w0).value + hval * liquid_sum +
         (1.0 - hval) * vapor_sum;
}

PressureCoefficients pressure_coefficients(const EosParameters& params,
                                           double chi,
                                           std::span<const double> c) {
  require_component_count(params, c.size());
  if (c[0] != 1.0) {
    throw ContractError("concentration c_1 must equal 1");
  }
  const double hval = interp_h(chi);
  double a0 = -double_well(chi, params.w0).value;
  double a1 = 0.0;
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (!(c[a] > 0.0)) {
      throw PositivityError("concentrations must be positive");
    }
    a0 += hval * params.liquid.d[a] + (1.0 - hval) * params.vapor.d[a];
    a1 += hval * params.liquid.a[a] * params.liquid.a[a] * c[a] +
          (1.0 - hval) * params.vapor.a[a] * params.vapor.a[a] * c[a];
  }
  return {a0, a1};
}

std::vector<double> squared_stiffness(const EosParameters& params, double chi) {
  const double hval = interp_h(chi);
  std::vector<double> a2(params.vapor.a.size());
  for (std::size_t a = 0; a < a2.size(); ++a) {
    a2[a] = hval * params.liquid.a[a] * params.liquid.a[a] +
            (1.0 - hval) * params.vapor.a[a] * params.vapor.a[a];
  }
  return a2;
}

double dp_dchi(const EosParameters& params, double chi,
               std::span<const double> rho) {
  require_component_count(params, rho.size());
  require_positive_densities(rho);
  const double hp = interp_h_prime(chi);
  double liquid_sum = 0.0;
  double vapor_sum = 0.0;
  for (std::size_t a = 0; a < rho.size(); ++a) {
    liquid_sum += params.liquid.a[a] * params.liquid.a[a] * rho[a] +
                  params.liquid.d[a];
    vapor_sum += params.vapor.a[a] * params.vapor.a[a] * rho[a];
  }
  return -double_well(chi, params.w0).derivative + hp * liquid_sum -
         hp * vapor_sum;
}

double sound_speed(const EosParameters& params, double chi,
                   std::span<const double> rho) {
  require_component_count(params, rho.size());
  require_positive_densities(rho);
  const std::vector<double> a2 = squared_stiffness(params, chi);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t a = 0; a < rho.size(); ++a) {
    num += a2[a] * rho[a];
    den += rho[a];
  }
  return std::sqrt(num / den);
}

} // namespace pfr
