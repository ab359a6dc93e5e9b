#ifndef PFR_CHARACTERISTICS_HPP
#define PFR_CHARACTERISTICS_HPP

#include <Eigen/Dense>
#include <vector>

#include "pfr/eos.hpp"
#include "pfr/state.hpp"

namespace pfr {

/// Jacobian of the quasilinear system in the primitive variables
/// (chi, rho_1, ..., rho_n, v), an (n+2) x (n+2) matrix.
Eigen::MatrixXd jacobian_primitive(const EosParameters& params,
                                   const RiemannState& state);

/// Eigenvalues v-A, v (multiplicity n), v+A with the closed-form eigenvector
/// bases. Two bases exist: the generic one (entries ~ B) and the degenerate
/// one for B = 0, selected by |B| <= b_zero_tol * pressure scale.
struct EigenSystem {
  Eigen::VectorXd eigenvalues;  ///< ordered lambda_0 <= ... <= lambda_{n+1}
  Eigen::MatrixXd eigenvectors; ///< column j is the eigenvector of lambda_j
  bool degenerate_branch = false;
};

EigenSystem eigen_system(const EosParameters& params, const RiemannState& state,
                         double b_zero_tol = 1e-12);

enum class FieldType { GenuinelyNonlinear, LinearlyDegenerate };

struct FieldClassification {
  FieldType type;
  /// grad(lambda_j) . k_j, computed by central differencing lambda_j along
  /// the eigenvector; equals the sound speed A for the outer fields and
  /// vanishes for the middle ones.
  double lambda_gradient_dot_k;
};

std::vector<FieldClassification> classify_fields(const EosParameters& params,
                                                 const RiemannState& state);

} // namespace pfr

#endif
