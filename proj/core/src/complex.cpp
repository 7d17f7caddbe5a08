#include "scer/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace scer {
namespace {

std::string to_string(const std::vector<int>& vs) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  os << "]";
  return os.str();
}

void check_dim(const WeightedComplex& K, int p, int lo, int hi) {
  if (p < lo || p > hi) {
    std::ostringstream os;
    os << "dimension " << p << " out of range [" << lo << ", " << hi
       << "] for complex of dimension " << K.dim();
    throw DimOutOfRange(os.str());
  }
}

Eigen::VectorXd pow_diag(const Eigen::VectorXd& w, double e) {
  return w.array().pow(e).matrix();
}

}  // namespace

WeightedComplex WeightedComplex::from_facets(
    const std::vector<std::vector<int>>& facets,
    const std::map<std::vector<int>, double>& weights) {
  std::vector<std::set<std::vector<int>>> by_dim;

  auto insert = [&](const std::vector<int>& vs) {
    int d = static_cast<int>(vs.size()) - 1;
    if (static_cast<int>(by_dim.size()) <= d) by_dim.resize(d + 1);
    by_dim[d].insert(vs);
  };

  for (const auto& facet : facets) {
    std::vector<int> vs = facet;
    std::sort(vs.begin(), vs.end());
    if (vs.empty() || std::adjacent_find(vs.begin(), vs.end()) != vs.end())
      throw MalformedFacet("facet " + to_string(facet) +
                           " is empty or repeats a vertex");
    for (int v : vs)
      if (v < 0) throw MalformedFacet("negative vertex id in " + to_string(facet));

    // enumerate all non-empty subsets: downward closure
    int n = static_cast<int>(vs.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) face.push_back(vs[i]);
      insert(face);
    }
  }

  for (const auto& [vs, w] : weights) {
    std::vector<int> key = vs;
    std::sort(key.begin(), key.end());
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      throw MalformedFacet("weighted simplex " + to_string(vs) +
                           " repeats a vertex");
    if (!(w > 0.0))
      throw NonPositiveWeight("weight of " + to_string(vs) + " must be > 0");
    insert(key);  // a weighted simplex is part of the complex
  }

  WeightedComplex K;
  for (auto& level : by_dim) {
    Level lv;
    lv.simplices.reserve(level.size());
    lv.weights = Eigen::VectorXd::Ones(static_cast<Eigen::Index>(level.size()));
    int i = 0;
    for (const auto& vs : level) {
      lv.simplices.push_back(Simplex{vs});
      if (auto it = weights.find(vs); it != weights.end())
        lv.weights[i] = it->second;
      ++i;
    }
    K.levels_.push_back(std::move(lv));
  }
  // weighted simplices may name faces outside every facet's closure
  for (int p = K.dim(); p >= 1; --p) {
    for (const auto& s : K.simplices(p)) {
      for (size_t i = 0; i < s.vertices.size(); ++i) {
        std::vector<int> face = s.vertices;
        face.erase(face.begin() + static_cast<long>(i));
        if (!K.index_of(Simplex{face}))
          throw MalformedFacet("complex not closed under faces at " +
                               to_string(face));
      }
    }
  }
  return K;
}

int WeightedComplex::size(int p) const {
  if (p < 0 || p > dim()) return 0;
  return static_cast<int>(levels_[p].simplices.size());
}

const std::vector<Simplex>& WeightedComplex::simplices(int p) const {
  static const std::vector<Simplex> empty;
  if (p < 0 || p > dim()) return empty;
  return levels_[p].simplices;
}

std::optional<int> WeightedComplex::index_of(const Simplex& s) const {
  int p = s.dim();
  if (p < 0 || p > dim()) return std::nullopt;
  const auto& list = levels_[p].simplices;
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || !(*it == s)) return std::nullopt;
  return static_cast<int>(it - list.begin());
}

OpMatrix boundary_matrix(const WeightedComplex& K, int p, MatrixBasis basis) {
  check_dim(K, p, 1, K.dim());
  Eigen::MatrixXd B = Eigen::MatrixXd::Zero(K.size(p - 1), K.size(p));
  const auto& cols = K.simplices(p);
  for (int j = 0; j < K.size(p); ++j) {
    const auto& vs = cols[j].vertices;
    double sign = 1.0;
    for (size_t i = 0; i < vs.size(); ++i) {
      std::vector<int> face = vs;
      face.erase(face.begin() + static_cast<long>(i));
      int row = K.index_of(Simplex{face}).value();
      B(row, j) = sign;
      sign = -sign;
    }
  }
  if (basis == MatrixBasis::Orthonormal) {
    B = pow_diag(K.weights(p - 1), -0.5).asDiagonal() * B *
        pow_diag(K.weights(p), 0.5).asDiagonal();
    return {{p, BasisKind::OrthoChain}, {p - 1, BasisKind::OrthoChain}, B};
  }
  return {{p, BasisKind::StandardChain}, {p - 1, BasisKind::StandardChain}, B};
}

OpMatrix coboundary_matrix(const WeightedComplex& K, int p, MatrixBasis basis) {
  check_dim(K, p, 0, K.dim() - 1);
  Eigen::MatrixXd Bt =
      boundary_matrix(K, p + 1, MatrixBasis::Standard).entries.transpose();
  if (basis == MatrixBasis::Orthonormal) {
    Bt = pow_diag(K.weights(p + 1), 0.5).asDiagonal() * Bt *
         pow_diag(K.weights(p), -0.5).asDiagonal();
    return {{p, BasisKind::OrthoCochain}, {p + 1, BasisKind::OrthoCochain}, Bt};
  }
  return {{p, BasisKind::StandardCochain},
          {p + 1, BasisKind::StandardCochain},
          Bt};
}

OpMatrix adjoint_boundary_matrix(const WeightedComplex& K, int p,
                                 MatrixBasis basis) {
  check_dim(K, p, 1, K.dim());
  Eigen::MatrixXd Bt =
      boundary_matrix(K, p, MatrixBasis::Standard).entries.transpose();
  if (basis == MatrixBasis::Orthonormal) {
    Eigen::MatrixXd M = pow_diag(K.weights(p), 0.5).asDiagonal() * Bt *
                        pow_diag(K.weights(p - 1), -0.5).asDiagonal();
    return {{p - 1, BasisKind::OrthoChain}, {p, BasisKind::OrthoChain}, M};
  }
  Eigen::MatrixXd M = K.weights(p).asDiagonal() * Bt *
                      pow_diag(K.weights(p - 1), -1.0).asDiagonal();
  return {{p - 1, BasisKind::StandardChain}, {p, BasisKind::StandardChain}, M};
}

OpMatrix adjoint_coboundary_matrix(const WeightedComplex& K, int p,
                                   MatrixBasis basis) {
  check_dim(K, p, 0, K.dim() - 1);
  Eigen::MatrixXd B = boundary_matrix(K, p + 1, MatrixBasis::Standard).entries;
  if (basis == MatrixBasis::Orthonormal) {
    Eigen::MatrixXd M = pow_diag(K.weights(p), -0.5).asDiagonal() * B *
                        pow_diag(K.weights(p + 1), 0.5).asDiagonal();
    return {{p + 1, BasisKind::OrthoCochain}, {p, BasisKind::OrthoCochain}, M};
  }
  Eigen::MatrixXd M = pow_diag(K.weights(p), -1.0).asDiagonal() * B *
                      K.weights(p + 1).asDiagonal();
  return {{p + 1, BasisKind::StandardCochain},
          {p, BasisKind::StandardCochain},
          M};
}

OpMatrix gram_matrix(const WeightedComplex& K, int p, Side side) {
  check_dim(K, p, 0, K.dim());
  BasisKind kind = side == Side::Chain ? BasisKind::StandardChain
                                       : BasisKind::StandardCochain;
  Eigen::VectorXd d = gram_diagonal(K, {p, kind});
  return {{p, kind}, {p, kind}, Eigen::MatrixXd(d.asDiagonal())};
}

Eigen::VectorXd gram_diagonal(const WeightedComplex& K, const BasisTag& tag) {
  check_dim(K, tag.dim, 0, K.dim());
  if (!is_standard(tag.kind)) return Eigen::VectorXd::Ones(K.size(tag.dim));
  return is_chain(tag.kind) ? pow_diag(K.weights(tag.dim), -1.0)
                            : K.weights(tag.dim);
}

OpMatrix flat_matrix(const WeightedComplex& K, int p) {
  check_dim(K, p, 0, K.dim());
  Eigen::MatrixXd M = pow_diag(K.weights(p), -1.0).asDiagonal();
  return {{p, BasisKind::StandardChain}, {p, BasisKind::StandardCochain}, M};
}

OpMatrix sharp_matrix(const WeightedComplex& K, int p) {
  check_dim(K, p, 0, K.dim());
  Eigen::MatrixXd M = K.weights(p).asDiagonal();
  return {{p, BasisKind::StandardCochain}, {p, BasisKind::StandardChain}, M};
}

Vec change_of_basis(const WeightedComplex& K, const Vec& v, BasisTag target) {
  if (v.basis.dim != target.dim || is_chain(v.basis.kind) != is_chain(target.kind))
    throw SideMismatch("change_of_basis keeps dimension and chain/cochain side");
  if (v.basis.kind == target.kind) return {target, v.coeffs};
  // standard chain -> ortho chain: multiply by W^{-1/2}; cochain by W^{1/2}.
  double e = is_chain(v.basis.kind) ? -0.5 : 0.5;
  if (!is_standard(v.basis.kind)) e = -e;  // ortho -> standard
  Eigen::VectorXd scale = pow_diag(K.weights(v.basis.dim), e);
  return {target, scale.asDiagonal() * v.coeffs};
}

double inner_product(const WeightedComplex& K, const Vec& u, const Vec& v) {
  if (!(u.basis == v.basis))
    throw BasisMismatch("inner_product requires identical basis tags");
  Eigen::VectorXd g = gram_diagonal(K, u.basis);
  return u.coeffs.dot(g.asDiagonal() * v.coeffs);
}

Vec flat(const WeightedComplex& K, const Vec& chain) {
  if (!is_chain(chain.basis.kind)) throw SideMismatch("flat expects a chain");
  Vec std_chain =
      change_of_basis(K, chain, {chain.basis.dim, BasisKind::StandardChain});
  Vec out{{chain.basis.dim, BasisKind::StandardCochain},
          flat_matrix(K, chain.basis.dim).entries * std_chain.coeffs};
  if (!is_standard(chain.basis.kind))
    return change_of_basis(K, out, {chain.basis.dim, BasisKind::OrthoCochain});
  return out;
}

Vec sharp(const WeightedComplex& K, const Vec& cochain) {
  if (is_chain(cochain.basis.kind)) throw SideMismatch("sharp expects a cochain");
  Vec std_co = change_of_basis(K, cochain,
                               {cochain.basis.dim, BasisKind::StandardCochain});
  Vec out{{cochain.basis.dim, BasisKind::StandardChain},
          sharp_matrix(K, cochain.basis.dim).entries * std_co.coeffs};
  if (!is_standard(cochain.basis.kind))
    return change_of_basis(K, out, {cochain.basis.dim, BasisKind::OrthoChain});
  return out;
}

}  // namespace scer
