#include "pfr/characteristics.hpp"

#include <cmath>

#include "pfr/errors.hpp"

namespace pfr {

Eigen::MatrixXd jacobian_primitive(const EosParameters& params,
                                   const RiemannState& state) {
  state.validate();
  const int n = static_cast<int>(state.rho.size());
  const double rho_total = state.total_density();
  const std::vector<double> a2 = squared_stiffness(params, state.chi);
  const double b = dp_dchi(params, state.chi, state.rho);

  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n + 2, n + 2);
  for (int i = 0; i < n + 2; ++i) j(i, i) = state.v;
  for (int a = 0; a < n; ++a) j(a + 1, n + 1) = state.rho[a];
  j(n + 1, 0) = b / rho_total;
  for (int a = 0; a < n; ++a) j(n + 1, a + 1) = a2[a] / rho_total;
  return j;
}

EigenSystem eigen_system(const EosParameters& params, const RiemannState& state,
                         double b_zero_tol) {
  state.validate();
  const int n = static_cast<int>(state.rho.size());
  const double a = sound_speed(params, state);
  const std::vector<double> a2 = squared_stiffness(params, state.chi);
  const double b = dp_dchi(params, state.chi, state.rho);

  EigenSystem sys;
  sys.eigenvalues.resize(n + 2);
  sys.eigenvalues(0) = state.v - a;
  for (int j = 1; j <= n; ++j) sys.eigenvalues(j) = state.v;
  sys.eigenvalues(n + 1) = state.v + a;

  sys.eigenvectors = Eigen::MatrixXd::Zero(n + 2, n + 2);
  // Outer acoustic eigenvectors, shared by both bases.
  for (int alpha = 0; alpha < n; ++alpha) {
    sys.eigenvectors(alpha + 1, 0) = -state.rho[alpha];
    sys.eigenvectors(alpha + 1, n + 1) = state.rho[alpha];
  }
  sys.eigenvectors(n + 1, 0) = a;
  sys.eigenvectors(n + 1, n + 1) = a;

  const auto coeffs = pressure_coefficients(params, state);
  const double pressure_scale =
      std::max(std::abs(coeffs.a0) + coeffs.a1 * state.rho[0], 1.0);
  sys.degenerate_branch = std::abs(b) <= b_zero_tol * pressure_scale;

  if (!sys.degenerate_branch) {
    // k_j = (-A_j^2, 0, ..., B at rho_j, ..., 0, 0)
    for (int j = 1; j <= n; ++j) {
      sys.eigenvectors(0, j) = -a2[j - 1];
      sys.eigenvectors(j, j) = b;
    }
  } else {
    // B = 0: k_1 = e_chi, k_j = -A_j^2 e_{rho_1} + A_1^2 e_{rho_j}.
    sys.eigenvectors(0, 1) = 1.0;
    for (int j = 2; j <= n; ++j) {
      sys.eigenvectors(1, j) = -a2[j - 1];
      sys.eigenvectors(j, j) = a2[0];
    }
  }
  return sys;
}

namespace {

// Analytic eigenvalue of field j at a (possibly perturbed) state.
double field_eigenvalue(const EosParameters& params, const RiemannState& state,
                        int field) {
  const int n = static_cast<int>(state.rho.size());
  if (field == 0) return state.v - sound_speed(params, state);
  if (field == n + 1) return state.v + sound_speed(params, state);
  return state.v;
}

} // namespace

std::vector<FieldClassification> classify_fields(const EosParameters& params,
                                                 const RiemannState& state) {
  const EigenSystem sys = eigen_system(params, state);
  const int n = static_cast<int>(state.rho.size());
  const double a = sound_speed(params, state);

  double state_scale = std::max({std::abs(state.chi), std::abs(state.v), 1.0});
  for (double r : state.rho) state_scale = std::max(state_scale, r);

  std::vector<FieldClassification> fields(n + 2);
  for (int j = 0; j < n + 2; ++j) {
    const Eigen::VectorXd k = sys.eigenvectors.col(j);
    const double knorm = k.cwiseAbs().maxCoeff();
    const double delta = 1e-6 * state_scale / knorm;

    RiemannState plus = state;
    RiemannState minus = state;
    plus.chi += delta * k(0);
    minus.chi -= delta * k(0);
    for (int alpha = 0; alpha < n; ++alpha) {
      plus.rho[alpha] += delta * k(alpha + 1);
      minus.rho[alpha] -= delta * k(alpha + 1);
    }
    plus.v += delta * k(n + 1);
    minus.v -= delta * k(n + 1);

    const double product = (field_eigenvalue(params, plus, j) -
                            field_eigenvalue(params, minus, j)) /
                           (2.0 * delta);
    fields[j].lambda_gradient_dot_k = product;
    fields[j].type = std::abs(product) < 1e-8 * a
                         ? FieldType::LinearlyDegenerate
                         : FieldType::GenuinelyNonlinear;
  }
  return fields;
}

} // namespace pfr
