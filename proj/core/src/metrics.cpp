#include "scer/metrics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace scer {
namespace {

constexpr double kMembershipTol = 1e-8;

}  // namespace

double chain_pseudometric(const WeightedComplex& K, const Vec& a,
                          const Vec& a2, const PinvConfig& cfg) {
  if (!(a.basis == a2.basis) || !is_chain(a.basis.kind))
    throw BasisMismatch("chain_pseudometric: chains in the same basis required");
  Vec diff{a.basis, a.coeffs - a2.coeffs};
  return std::sqrt(std::max(0.0, er_of_chain(K, diff, cfg)));
}

double cycle_metric(const WeightedComplex& K, const Vec& c, const Vec& c2,
                    const PinvConfig& cfg) {
  if (!(c.basis == c2.basis) || !is_chain(c.basis.kind))
    throw BasisMismatch("cycle_metric: cycles in the same basis required");
  int p = c.basis.dim;
  if (p < 0 || p > K.dim()) throw DimOutOfRange("cycle_metric: bad degree");

  Vec cs = change_of_basis(K, c, {p, BasisKind::StandardChain});
  Vec cs2 = change_of_basis(K, c2, {p, BasisKind::StandardChain});
  auto check_cycle = [&](const Eigen::VectorXd& z) {
    if (p < 1) return;  // every 0-chain is a cycle
    Eigen::MatrixXd B = boundary_matrix(K, p, MatrixBasis::Standard).entries;
    if ((B * z).norm() > kMembershipTol * std::max(1.0, z.norm()))
      throw NotACycle("cycle_metric: input is not a cycle");
  };
  check_cycle(cs.coeffs);
  check_cycle(cs2.coeffs);

  Eigen::VectorXd diff = cs.coeffs - cs2.coeffs;
  double scale = std::max(1.0, diff.norm());
  if (diff.norm() <= 1e-14 * scale) return 0.0;
  if (p + 1 > K.dim())
    throw NotABoundary("cycle_metric: no (p+1)-simplices to fill the cycle");

  Eigen::MatrixXd B = boundary_matrix(K, p + 1, MatrixBasis::Standard).entries;
  Eigen::VectorXd x = pinv(B, cfg) * diff;
  if ((B * x - diff).norm() > kMembershipTol * scale)
    throw NotABoundary("cycle_metric: difference is not null-homologous");
  Vec filler{{p + 1, BasisKind::StandardChain}, x};
  return std::sqrt(std::max(0.0, er_of_chain(K, filler, cfg)));
}

FosterReport foster_check(const WeightedComplex& K, int p, double tol,
                          const PinvConfig& cfg) {
  if (p < 1 || p > K.dim())
    throw DimOutOfRange("foster_check: need 1 <= p <= dim");
  FosterReport rep;
  rep.p = p;

  Eigen::MatrixXd R =
      er_bilinear_matrix(K, p, MatrixBasis::Standard, cfg).entries;
  rep.lhs_sum = (K.weights(p).array() * R.diagonal().array()).sum();

  Eigen::MatrixXd T =
      er_operator(K, p, Side::Chain, MatrixBasis::Orthonormal, cfg).entries;
  rep.trace_T = T.trace();

  Eigen::MatrixXd B = boundary_matrix(K, p, MatrixBasis::Standard).entries;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(B);
  const auto& sv = svd.singularValues();
  double cut = resolve_rel_tol(cfg, B.rows(), B.cols()) *
               (sv.size() ? sv[0] : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > cut) ++rank;
  rep.rank_B_transpose = rank;
  rep.rhs = K.size(p - 1) - (K.size(p - 1) - rank);  // n_{p-1} - null(B_p^T)
  rep.pass = std::abs(rep.lhs_sum - rep.rhs) <= tol &&
             std::abs(rep.trace_T - rep.rhs) <= tol;
  return rep;
}

std::vector<double> er_operator_spectrum(const WeightedComplex& K, int p,
                                         const PinvConfig& cfg) {
  Eigen::MatrixXd T =
      er_operator(K, p, Side::Chain, MatrixBasis::Orthonormal, cfg).entries;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  std::vector<double> vals(es.eigenvalues().data(),
                           es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(vals.begin(), vals.end(), std::greater<>());
  return vals;
}

}  // namespace scer
