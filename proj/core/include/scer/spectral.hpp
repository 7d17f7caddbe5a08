#pragma once

#include <array>

#include "scer/types.hpp"

namespace scer {

/// Singular values below rel_tol * sigma_max count as zero. A non-positive
/// rel_tol selects the default policy, 1e-10 * max(rows, cols).
struct PinvConfig {
  double rel_tol = 0.0;
};

double resolve_rel_tol(const PinvConfig& cfg, Eigen::Index rows,
                       Eigen::Index cols);

/// Moore-Penrose pseudoinverse. Symmetric inputs go through a symmetric
/// eigendecomposition, general inputs through the SVD.
Eigen::MatrixXd pinv(const Eigen::MatrixXd& M, const PinvConfig& cfg = {});

/// Representation of the operator pseudoinverse in orthogonal (diagonal-Gram)
/// bases: G_dom^{-1/2} (G_cod^{1/2} A G_dom^{-1/2})^+ G_cod^{1/2}.
Eigen::MatrixXd pinv_in_bases(const Eigen::MatrixXd& A,
                              const Eigen::VectorXd& gram_dom,
                              const Eigen::VectorXd& gram_cod,
                              const PinvConfig& cfg = {});

struct PenroseReport {
  // order: M Mp M = M, Mp M Mp = Mp, (M Mp) self-adjoint, (Mp M) self-adjoint
  std::array<bool, 4> pass{};
  std::array<double, 4> residual{};
  bool all_pass() const {
    return pass[0] && pass[1] && pass[2] && pass[3];
  }
};

/// Checks the four Penrose identities in Frobenius norm. When Gram diagonals
/// are supplied, the symmetry checks are adjoint-symmetry w.r.t. those inner
/// products (G M Mp symmetric instead of M Mp itself).
PenroseReport verify_moore_penrose(const Eigen::MatrixXd& M,
                                   const Eigen::MatrixXd& Mp, double tol,
                                   const Eigen::VectorXd* gram_dom = nullptr,
                                   const Eigen::VectorXd* gram_cod = nullptr);

}  // namespace scer
