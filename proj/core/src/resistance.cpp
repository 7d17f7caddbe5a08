#include "scer/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace scer {
namespace {

constexpr double kMembershipTol = 1e-8;

Eigen::VectorXd pow_diag(const Eigen::VectorXd& w, double e) {
  return w.array().pow(e).matrix();
}

void check_p(const WeightedComplex& K, int p) {
  if (p < 1 || p > K.dim())
    throw DimOutOfRange("resistance: need 1 <= p <= dim");
}

// T_p in the orthonormal bases: Bo^T (Bo Bo^T)^+ Bo, a symmetric projection.
Eigen::MatrixXd er_operator_ortho(const WeightedComplex& K, int p,
                                  const PinvConfig& cfg) {
  Eigen::MatrixXd Bo = boundary_matrix(K, p, MatrixBasis::Orthonormal).entries;
  return Bo.transpose() * pinv(Eigen::MatrixXd(Bo * Bo.transpose()), cfg) * Bo;
}

// components of the vertex set of a dim<=1 complex, by standard vertex index
std::vector<int> graph_components(const WeightedComplex& G) {
  int n = G.size(0);
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : G.simplices(1)) {
    int a = find(G.index_of(Simplex{{e.vertices[0]}}).value());
    int b = find(G.index_of(Simplex{{e.vertices[1]}}).value());
    parent[find(a)] = find(b);
  }
  std::vector<int> comp(n);
  for (int i = 0; i < n; ++i) comp[i] = find(i);
  return comp;
}

}  // namespace

OpMatrix er_operator(const WeightedComplex& K, int p, Side side,
                     MatrixBasis basis, const PinvConfig& cfg) {
  check_p(K, p);
  Eigen::MatrixXd T = er_operator_ortho(K, p, cfg);
  if (basis == MatrixBasis::Orthonormal) {
    BasisKind k = side == Side::Chain ? BasisKind::OrthoChain
                                      : BasisKind::OrthoCochain;
    return {{p, k}, {p, k}, T};
  }
  Eigen::VectorXd wh = pow_diag(K.weights(p), 0.5);
  if (side == Side::Chain) {
    Eigen::MatrixXd M = wh.asDiagonal() * T * wh.cwiseInverse().asDiagonal();
    return {{p, BasisKind::StandardChain}, {p, BasisKind::StandardChain}, M};
  }
  Eigen::MatrixXd M = wh.cwiseInverse().asDiagonal() * T * wh.asDiagonal();
  return {{p, BasisKind::StandardCochain}, {p, BasisKind::StandardCochain}, M};
}

OpMatrix er_bilinear_matrix(const WeightedComplex& K, int p, MatrixBasis basis,
                            const PinvConfig& cfg) {
  check_p(K, p);
  Eigen::MatrixXd T = er_operator_ortho(K, p, cfg);
  if (basis == MatrixBasis::Orthonormal)
    return {{p, BasisKind::OrthoChain}, {p, BasisKind::OrthoChain}, T};
  Eigen::VectorXd whi = pow_diag(K.weights(p), -0.5);
  Eigen::MatrixXd R = whi.asDiagonal() * T * whi.asDiagonal();
  return {{p, BasisKind::StandardChain}, {p, BasisKind::StandardChain}, R};
}

double er_of_chain(const WeightedComplex& K, const Vec& alpha,
                   const PinvConfig& cfg) {
  if (!is_chain(alpha.basis.kind))
    throw SideMismatch("er_of_chain expects a chain");
  int p = alpha.basis.dim;
  check_p(K, p);
  Vec o = change_of_basis(K, alpha, {p, BasisKind::OrthoChain});
  Eigen::MatrixXd T = er_operator_ortho(K, p, cfg);
  return o.coeffs.dot(T * o.coeffs);
}

double er_of_cochain(const WeightedComplex& K, const Vec& f,
                     const PinvConfig& cfg) {
  if (is_chain(f.basis.kind))
    throw SideMismatch("er_of_cochain expects a cochain");
  return er_of_chain(K, sharp(K, f), cfg);
}

SimplexResistance er_of_simplex(const WeightedComplex& K, const Simplex& sigma,
                                const PinvConfig& cfg) {
  int p = sigma.dim();
  check_p(K, p);
  auto idx = K.index_of(sigma);
  if (!idx) throw SimplexNotFound("simplex not in the complex");
  double r = er_bilinear_matrix(K, p, MatrixBasis::Standard, cfg)
                 .entries(*idx, *idx);
  return {r, K.weight(p, *idx) * r};
}

double boundary_form(const WeightedComplex& K, int p, const Vec& beta,
                     const Vec& beta2, const PinvConfig& cfg) {
  check_p(K, p);
  if (beta.basis.dim != p - 1 || beta2.basis.dim != p - 1 ||
      !is_chain(beta.basis.kind) || !is_chain(beta2.basis.kind))
    throw BasisMismatch("boundary_form expects (p-1)-chains");

  Eigen::MatrixXd B = boundary_matrix(K, p, MatrixBasis::Standard).entries;
  Eigen::MatrixXd Bp = pinv(B, cfg);
  auto solve = [&](const Vec& b) {
    Vec s = change_of_basis(K, b, {p - 1, BasisKind::StandardChain});
    Eigen::VectorXd x = Bp * s.coeffs;
    double res = (B * x - s.coeffs).norm();
    if (res > kMembershipTol * std::max(1.0, s.coeffs.norm()))
      throw NotABoundary("boundary_form: chain is not a p-boundary");
    return x;
  };
  Eigen::VectorXd x = solve(beta);
  Eigen::VectorXd x2 = solve(beta2);
  Eigen::MatrixXd R = er_bilinear_matrix(K, p, MatrixBasis::Standard, cfg).entries;
  return x.dot(R * x2);
}

double vertex_er(const WeightedComplex& G, int u, int v,
                 const PinvConfig& cfg) {
  if (!(G.weights(0).array() == 1.0).all())
    throw Error("vertex_er requires unit vertex weights");
  auto iu = G.index_of(Simplex{{u}});
  auto iv = G.index_of(Simplex{{v}});
  if (!iu || !iv) throw VertexNotFound("vertex id not in the complex");
  if (*iu == *iv) return 0.0;
  auto comp = graph_components(G);
  if (comp[*iu] != comp[*iv])
    throw Disconnected("vertices lie in different components");

  Eigen::MatrixXd B = boundary_matrix(G, 1, MatrixBasis::Standard).entries;
  Eigen::MatrixXd L = B * G.weights(1).asDiagonal() * B.transpose();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(G.size(0));
  b[*iu] = 1.0;
  b[*iv] = -1.0;
  return b.dot(pinv(L, cfg) * b);
}

OpMatrix osting_matrix(const WeightedComplex& K, int p,
                       const PinvConfig& cfg) {
  check_p(K, p);
  Eigen::MatrixXd B = boundary_matrix(K, p, MatrixBasis::Standard).entries;
  Eigen::MatrixXd L = B * K.weights(p).asDiagonal() * B.transpose();
  Eigen::MatrixXd R = B.transpose() * pinv(L, cfg) * B;
  return {{p, BasisKind::StandardChain}, {p, BasisKind::StandardChain}, R};
}

OpMatrix kook_lee_matrix(const WeightedComplex& K, int d,
                         const PinvConfig& cfg) {
  check_p(K, d);
  Eigen::MatrixXd B = boundary_matrix(K, d, MatrixBasis::Standard).entries;
  Eigen::MatrixXd L = B * K.weights(d).asDiagonal() * B.transpose();
  if (d >= 2) {
    Eigen::MatrixXd Bd = boundary_matrix(K, d - 1, MatrixBasis::Standard).entries;
    L += Bd.transpose() * Bd;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(L);
  const auto& sv = svd.singularValues();
  double tol = resolve_rel_tol(cfg, L.rows(), L.cols());
  if (sv.size() == 0 || sv[sv.size() - 1] <= tol * sv[0])
    throw SingularHodgeLaplacian("kook_lee_matrix: L_{d-1} is singular");
  Eigen::MatrixXd R = B.transpose() * L.inverse() * B;
  return {{d, BasisKind::StandardChain}, {d, BasisKind::StandardChain}, R};
}

std::optional<double> black_maxwell_er(const WeightedComplex& K, int p,
                                       const Vec& gamma,
                                       const PinvConfig& cfg) {
  check_p(K, p);
  if (gamma.basis.dim != p - 1 || !is_chain(gamma.basis.kind))
    throw BasisMismatch("black_maxwell_er expects a (p-1)-chain");
  Vec g = change_of_basis(K, gamma, {p - 1, BasisKind::StandardChain});
  double scale = std::max(1.0, g.coeffs.norm());
  if (p - 1 >= 1) {
    Eigen::MatrixXd Bm = boundary_matrix(K, p - 1, MatrixBasis::Standard).entries;
    if ((Bm * g.coeffs).norm() > kMembershipTol * scale)
      throw NotACycle("black_maxwell_er: input is not a cycle");
  }
  Eigen::MatrixXd B = boundary_matrix(K, p, MatrixBasis::Standard).entries;
  Eigen::VectorXd x = pinv(B, cfg) * g.coeffs;
  if ((B * x - g.coeffs).norm() > kMembershipTol * scale) return std::nullopt;
  Eigen::MatrixXd L = B * K.weights(p).asDiagonal() * B.transpose();
  return g.coeffs.dot(pinv(L, cfg) * g.coeffs);
}

}  // namespace scer
