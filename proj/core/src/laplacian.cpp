#include "scer/laplacian.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace scer {
namespace {

Eigen::VectorXd pow_diag(const Eigen::VectorXd& w, double e) {
  return w.array().pow(e).matrix();
}

// Up Laplacian at p in the orthonormal basis (symmetric). Zero matrix at the
// top dimension, where the boundary above vanishes.
Eigen::MatrixXd up_ortho(const WeightedComplex& K, int p) {
  if (p >= K.dim()) return Eigen::MatrixXd::Zero(K.size(p), K.size(p));
  Eigen::MatrixXd Bo = boundary_matrix(K, p + 1, MatrixBasis::Orthonormal).entries;
  return Bo * Bo.transpose();
}

Eigen::MatrixXd down_ortho(const WeightedComplex& K, int p) {
  if (p < 1) return Eigen::MatrixXd::Zero(K.size(p), K.size(p));
  Eigen::MatrixXd Bo = boundary_matrix(K, p, MatrixBasis::Orthonormal).entries;
  return Bo.transpose() * Bo;
}

}  // namespace

OpMatrix laplacian(const WeightedComplex& K, int p, LapKind kind, Side side,
                   MatrixBasis basis) {
  if (p < 0 || p > K.dim()) {
    std::ostringstream os;
    os << "laplacian: degree " << p << " out of range for dim " << K.dim();
    throw DimOutOfRange(os.str());
  }
  if (kind == LapKind::Down && p < 1)
    throw DimOutOfRange("laplacian: down Laplacian needs p >= 1");

  Eigen::MatrixXd L;
  switch (kind) {
    case LapKind::Up: L = up_ortho(K, p); break;
    case LapKind::Down: L = down_ortho(K, p); break;
    case LapKind::Hodge: L = up_ortho(K, p) + down_ortho(K, p); break;
  }

  // chain and cochain matrices coincide in the orthonormal bases
  if (basis == MatrixBasis::Orthonormal) {
    BasisKind k = side == Side::Chain ? BasisKind::OrthoChain
                                      : BasisKind::OrthoCochain;
    return {{p, k}, {p, k}, L};
  }

  // standard cochain: W^{-1/2} L_ortho W^{1/2}; standard chain: conjugate
  Eigen::VectorXd wh = pow_diag(K.weights(p), 0.5);
  if (side == Side::Cochain) {
    Eigen::MatrixXd M =
        wh.cwiseInverse().asDiagonal() * L * wh.asDiagonal();
    return {{p, BasisKind::StandardCochain}, {p, BasisKind::StandardCochain}, M};
  }
  Eigen::MatrixXd M = wh.asDiagonal() * L * wh.cwiseInverse().asDiagonal();
  return {{p, BasisKind::StandardChain}, {p, BasisKind::StandardChain}, M};
}

int betti(const WeightedComplex& K, int p, const PinvConfig& cfg) {
  if (p < 0 || p > K.dim())
    throw DimOutOfRange("betti: degree out of range");
  Eigen::MatrixXd L =
      laplacian(K, p, LapKind::Hodge, Side::Cochain, MatrixBasis::Orthonormal)
          .entries;
  if (L.size() == 0) return 0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
  double tol = resolve_rel_tol(cfg, L.rows(), L.cols());
  double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
  double cutoff = lmax > 0 ? tol * lmax : tol;
  int null = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i]) <= cutoff) ++null;
  return null;
}

HodgeParts hodge_decompose(const WeightedComplex& K, const Vec& f,
                           const PinvConfig& cfg) {
  if (is_chain(f.basis.kind))
    throw SideMismatch("hodge_decompose expects a cochain");
  int p = f.basis.dim;
  Vec y = change_of_basis(K, f, {p, BasisKind::OrthoCochain});

  int n = K.size(p);
  Eigen::MatrixXd P_up = Eigen::MatrixXd::Zero(n, n);    // im delta_p^*
  Eigen::MatrixXd P_down = Eigen::MatrixXd::Zero(n, n);  // im delta_{p-1}
  if (p < K.dim()) {
    Eigen::MatrixXd A =
        adjoint_coboundary_matrix(K, p, MatrixBasis::Orthonormal).entries;
    P_up = A * pinv(A, cfg);
  }
  if (p >= 1) {
    Eigen::MatrixXd D =
        coboundary_matrix(K, p - 1, MatrixBasis::Orthonormal).entries;
    P_down = D * pinv(D, cfg);
  }

  Vec up{{p, BasisKind::OrthoCochain}, P_up * y.coeffs};
  Vec down{{p, BasisKind::OrthoCochain}, P_down * y.coeffs};
  Vec harm{{p, BasisKind::OrthoCochain},
           y.coeffs - up.coeffs - down.coeffs};

  auto back = [&](const Vec& v) { return change_of_basis(K, v, f.basis); };
  return {back(up), back(harm), back(down)};
}

}  // namespace scer
