#include "scer/circuits.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace scer {
namespace {

constexpr double kFeasTol = 1e-8;

Eigen::VectorXd pow_diag(const Eigen::VectorXd& w, double e) {
  return w.array().pow(e).matrix();
}

void check_problem(const WeightedComplex& K, const CircuitProblem& prob) {
  if (prob.p < 1 || prob.p > K.dim())
    throw DimOutOfRange("circuit: need 1 <= p <= dim");
  if (prob.beta.basis.dim != prob.p - 1 || !is_chain(prob.beta.basis.kind))
    throw BasisMismatch("circuit: beta must be a (p-1)-chain");
  if (prob.beta.coeffs.size() != K.size(prob.p - 1))
    throw ShapeMismatch("circuit: beta length != n_{p-1}");
}

// flat(beta) in orthonormal cochain coordinates: W^{-1/2} beta_std
Eigen::VectorXd flat_beta_ortho(const WeightedComplex& K,
                                const CircuitProblem& prob) {
  Vec b = change_of_basis(K, prob.beta,
                          {prob.p - 1, BasisKind::StandardChain});
  return pow_diag(K.weights(prob.p - 1), -0.5).asDiagonal() * b.coeffs;
}

}  // namespace

CircuitSolution solve_circuit(const WeightedComplex& K,
                              const CircuitProblem& prob,
                              const PinvConfig& cfg) {
  check_problem(K, prob);
  int p = prob.p;
  Eigen::MatrixXd Lo =
      laplacian(K, p - 1, LapKind::Up, Side::Cochain, MatrixBasis::Orthonormal)
          .entries;
  Eigen::VectorXd y = flat_beta_ortho(K, prob);
  Eigen::VectorXd phi_o = pinv(Lo, cfg) * y;
  double scale = std::max(1.0, y.norm());
  if ((Lo * phi_o - y).norm() > kFeasTol * scale)
    throw InfeasibleBoundaryCurrent(
        "solve_circuit: flat(beta) not in the image of the up Laplacian");

  Eigen::VectorXd phi = pow_diag(K.weights(p - 1), -0.5).asDiagonal() * phi_o;
  Eigen::MatrixXd Bt =
      boundary_matrix(K, p, MatrixBasis::Standard).entries.transpose();
  Eigen::VectorXd f = Bt * phi;
  Eigen::VectorXd alpha = K.weights(p).asDiagonal() * f;

  CircuitSolution sol;
  sol.phi = {{p - 1, BasisKind::StandardCochain}, phi};
  sol.f = {{p, BasisKind::StandardCochain}, f};
  sol.alpha = {{p, BasisKind::StandardChain}, alpha};
  Vec beta_std =
      change_of_basis(K, prob.beta, {p - 1, BasisKind::StandardChain});
  sol.kcl = (Bt.transpose() * alpha - beta_std.coeffs).norm();
  sol.kvl = (Bt * phi - f).norm();
  sol.ohm = (pow_diag(K.weights(p), -1.0).asDiagonal() * alpha - f).norm();
  return sol;
}

bool check_feasible(const WeightedComplex& K, const CircuitProblem& prob,
                    const PinvConfig& cfg) {
  check_problem(K, prob);
  Eigen::MatrixXd Lo =
      laplacian(K, prob.p - 1, LapKind::Up, Side::Cochain,
                MatrixBasis::Orthonormal)
          .entries;
  Eigen::VectorXd y = flat_beta_ortho(K, prob);
  Eigen::VectorXd proj = Lo * (pinv(Lo, cfg) * y);
  return (proj - y).norm() <= kFeasTol * std::max(1.0, y.norm());
}

LawResiduals verify_laws(const WeightedComplex& K, int p, const Vec& alpha,
                         const Vec& f, const Vec* phi, const Vec* beta,
                         const PinvConfig& cfg) {
  if (p < 1 || p > K.dim()) throw DimOutOfRange("verify_laws: bad p");
  if (alpha.basis.dim != p || !is_chain(alpha.basis.kind) ||
      f.basis.dim != p || is_chain(f.basis.kind))
    throw BasisMismatch("verify_laws: alpha must be a p-chain, f a p-cochain");

  Vec a = change_of_basis(K, alpha, {p, BasisKind::StandardChain});
  Vec fv = change_of_basis(K, f, {p, BasisKind::StandardCochain});
  Eigen::MatrixXd B = boundary_matrix(K, p, MatrixBasis::Standard).entries;

  LawResiduals res;
  if (beta) {
    Vec b = change_of_basis(K, *beta, {p - 1, BasisKind::StandardChain});
    res.kcl = (B * a.coeffs - b.coeffs).norm();
  }
  Eigen::VectorXd phi_std;
  if (phi) {
    Vec ph = change_of_basis(K, *phi, {p - 1, BasisKind::StandardCochain});
    phi_std = ph.coeffs;
  } else {
    phi_std = pinv(Eigen::MatrixXd(B.transpose()), cfg) * fv.coeffs;
  }
  res.kvl = (B.transpose() * phi_std - fv.coeffs).norm();
  res.ohm = (pow_diag(K.weights(p), -1.0).asDiagonal() * a.coeffs - fv.coeffs)
                .norm();
  return res;
}

KookLeeSolution kook_lee_resistance(const WeightedComplex& X,
                                    const GeneratorAttachment& gen,
                                    const PinvConfig& cfg) {
  int d = X.dim();
  if (d < 1) throw DimOutOfRange("kook_lee_resistance: complex must have dim >= 1");
  if (static_cast<int>(gen.sigma.size()) != d + 1)
    throw NotAGenerator("generator must have d+1 vertices");
  if (gen.i_sigma == 0.0) throw NotAGenerator("i_sigma must be nonzero");
  std::vector<int> sv = gen.sigma;
  std::sort(sv.begin(), sv.end());
  if (std::adjacent_find(sv.begin(), sv.end()) != sv.end())
    throw NotAGenerator("generator repeats a vertex");
  if (gen.c.size() != X.size(d))
    throw ShapeMismatch("witness chain length != n_d");

  // boundary of the abstract simplex sigma, expressed over K_{d-1}(X)
  Eigen::VectorXd bd_sigma = Eigen::VectorXd::Zero(X.size(d - 1));
  double sign = 1.0;
  for (size_t i = 0; i < sv.size(); ++i) {
    std::vector<int> face = sv;
    face.erase(face.begin() + static_cast<long>(i));
    auto idx = X.index_of(Simplex{face});
    if (!idx) throw NotAGenerator("a face of sigma is missing from X");
    bd_sigma[*idx] += sign;
    sign = -sign;
  }

  Eigen::MatrixXd B = boundary_matrix(X, d, MatrixBasis::Standard).entries;
  Eigen::VectorXd defect = bd_sigma + B * gen.c;
  if (defect.norm() > kFeasTol * std::max(1.0, bd_sigma.norm()))
    throw NotAGenerator("boundary of sigma + boundary of c does not vanish");

  // orthonormal coordinates; sigma carries unit weight and is orthogonal
  int nd = X.size(d);
  Eigen::MatrixXd Bo = boundary_matrix(X, d, MatrixBasis::Orthonormal).entries;
  Eigen::VectorXd col =
      -(pow_diag(X.weights(d - 1), -0.5).asDiagonal() * (B * gen.c));
  Eigen::MatrixXd Bz(Bo.rows(), nd + 1);
  Bz << Bo, col;

  // orthonormal basis of ker(boundary) = H_d(X), the degree-(d+1) term of Z
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> kes(
      Eigen::MatrixXd(Bo.transpose() * Bo));
  double ktol = resolve_rel_tol(cfg, nd, nd);
  double kmax = kes.eigenvalues().size()
                    ? kes.eigenvalues().cwiseAbs().maxCoeff()
                    : 0.0;
  double kcut = kmax > 0 ? ktol * kmax : ktol;
  std::vector<Eigen::Index> kernel_cols;
  for (Eigen::Index i = 0; i < kes.eigenvalues().size(); ++i)
    if (std::abs(kes.eigenvalues()[i]) <= kcut) kernel_cols.push_back(i);
  Eigen::MatrixXd Kz =
      Eigen::MatrixXd::Zero(nd + 1, static_cast<Eigen::Index>(kernel_cols.size()));
  for (size_t j = 0; j < kernel_cols.size(); ++j)
    Kz.block(0, static_cast<Eigen::Index>(j), nd, 1) =
        kes.eigenvectors().col(kernel_cols[j]);

  Eigen::MatrixXd Lz = Bz.transpose() * Bz + Kz * Kz.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Lz);
  double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
  double cut = lmax > 0 ? resolve_rel_tol(cfg, nd + 1, nd + 1) * lmax
                        : resolve_rel_tol(cfg, nd + 1, nd + 1);
  std::vector<Eigen::Index> null_cols;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i]) <= cut) null_cols.push_back(i);
  if (null_cols.size() != 1)
    throw DegenerateKernel("kernel of the extended Hodge Laplacian is not 1-d");

  Eigen::VectorXd kvec = es.eigenvectors().col(null_cols[0]);
  if (std::abs(kvec[nd]) < 1e-12)
    throw DegenerateKernel("kernel vector has no sigma component");
  kvec *= gen.i_sigma / kvec[nd];

  KookLeeSolution sol;
  Eigen::VectorXd I_o = kvec.head(nd);
  sol.current = pow_diag(X.weights(d), 0.5).asDiagonal() * I_o;
  sol.i_sigma = gen.i_sigma;
  sol.voltage = pow_diag(X.weights(d), -0.5).asDiagonal() * I_o;
  sol.v_sigma = -I_o.squaredNorm() / gen.i_sigma;
  sol.resistance = -sol.v_sigma / gen.i_sigma;
  return sol;
}

}  // namespace scer
