#include "scer/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace scer {
namespace {

bool is_symmetric(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) return false;
  double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  return (M - M.transpose()).cwiseAbs().maxCoeff() <= 1e-13 * scale;
}

}  // namespace

double resolve_rel_tol(const PinvConfig& cfg, Eigen::Index rows,
                       Eigen::Index cols) {
  if (cfg.rel_tol > 0.0) return cfg.rel_tol;
  return 1e-10 * static_cast<double>(std::max(rows, cols));
}

Eigen::MatrixXd pinv(const Eigen::MatrixXd& M, const PinvConfig& cfg) {
  if (!M.allFinite()) throw NonFinite("pinv: matrix has non-finite entries");
  if (M.size() == 0) return M.transpose();
  double tol = resolve_rel_tol(cfg, M.rows(), M.cols());

  if (is_symmetric(M)) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
    const auto& vals = es.eigenvalues();
    double cutoff = tol * vals.cwiseAbs().maxCoeff();
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(vals.size());
    for (Eigen::Index i = 0; i < vals.size(); ++i)
      if (std::abs(vals[i]) > cutoff) inv[i] = 1.0 / vals[i];
    return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().transpose();
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      M, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  double cutoff = tol * (sv.size() ? sv[0] : 0.0);
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cutoff) inv[i] = 1.0 / sv[i];
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Eigen::MatrixXd pinv_in_bases(const Eigen::MatrixXd& A,
                              const Eigen::VectorXd& gram_dom,
                              const Eigen::VectorXd& gram_cod,
                              const PinvConfig& cfg) {
  if (gram_dom.size() != A.cols() || gram_cod.size() != A.rows())
    throw ShapeMismatch("pinv_in_bases: Gram sizes do not match the matrix");
  if ((gram_dom.array() <= 0).any() || (gram_cod.array() <= 0).any())
    throw NonDiagonalGram("pinv_in_bases: Gram diagonals must be positive");
  Eigen::VectorXd dom_h = gram_dom.array().sqrt().matrix();
  Eigen::VectorXd cod_h = gram_cod.array().sqrt().matrix();
  Eigen::MatrixXd ortho =
      cod_h.asDiagonal() * A * dom_h.cwiseInverse().asDiagonal();
  return dom_h.cwiseInverse().asDiagonal() * pinv(ortho, cfg) *
         cod_h.asDiagonal();
}

PenroseReport verify_moore_penrose(const Eigen::MatrixXd& M,
                                   const Eigen::MatrixXd& Mp, double tol,
                                   const Eigen::VectorXd* gram_dom,
                                   const Eigen::VectorXd* gram_cod) {
  if (Mp.rows() != M.cols() || Mp.cols() != M.rows())
    throw ShapeMismatch("verify_moore_penrose: shapes incompatible");

  auto fro = [](const Eigen::MatrixXd& X) { return X.norm(); };
  Eigen::MatrixXd MMp = M * Mp;
  Eigen::MatrixXd MpM = Mp * M;

  PenroseReport rep;
  rep.residual[0] = fro(MMp * M - M);
  rep.residual[1] = fro(MpM * Mp - Mp);
  // adjoint-symmetry: G P is symmetric iff P is self-adjoint w.r.t. G
  Eigen::MatrixXd g_cod_MMp =
      gram_cod ? Eigen::MatrixXd(gram_cod->asDiagonal() * MMp) : MMp;
  Eigen::MatrixXd g_dom_MpM =
      gram_dom ? Eigen::MatrixXd(gram_dom->asDiagonal() * MpM) : MpM;
  rep.residual[2] = fro(g_cod_MMp - g_cod_MMp.transpose());
  rep.residual[3] = fro(g_dom_MpM - g_dom_MpM.transpose());

  double scale = std::max(1.0, fro(M));
  for (int i = 0; i < 4; ++i) rep.pass[i] = rep.residual[i] <= tol * scale;
  return rep;
}

}  // namespace scer
