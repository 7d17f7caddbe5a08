#pragma once

#include <map>
#include <optional>
#include <vector>

#include "scer/types.hpp"

namespace scer {

/// An oriented simplex: strictly increasing vertex ids fix the orientation.
struct Simplex {
  std::vector<int> vertices;

  int dim() const { return static_cast<int>(vertices.size()) - 1; }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex& a, const Simplex& b) {
    return a.vertices <=> b.vertices;
  }
};

/// Oriented finite simplicial complex with positive weights per simplex.
/// Simplices of each dimension are kept in lexicographic order; that order
/// defines the standard basis index. Immutable after construction.
class WeightedComplex {
 public:
  /// Builds the downward closure of the given facets. Unspecified weights
  /// default to 1. Explicit weights may be attached to any simplex,
  /// including implied faces.
  static WeightedComplex from_facets(
      const std::vector<std::vector<int>>& facets,
      const std::map<std::vector<int>, double>& weights = {});

  int dim() const { return static_cast<int>(levels_.size()) - 1; }
  int size(int p) const;  // n_p; 0 outside [0, dim]

  const std::vector<Simplex>& simplices(int p) const;
  double weight(int p, int i) const { return levels_.at(p).weights[i]; }
  const Eigen::VectorXd& weights(int p) const { return levels_.at(p).weights; }

  std::optional<int> index_of(const Simplex& s) const;

 private:
  struct Level {
    std::vector<Simplex> simplices;
    Eigen::VectorXd weights;
  };
  std::vector<Level> levels_;
};

// ---- matrix assembly -----------------------------------------------------

/// B_p, the incidence matrix of the boundary map (n_{p-1} x n_p); the
/// orthonormal form is W_{p-1}^{-1/2} B_p W_p^{1/2}. Requires 1 <= p <= dim.
OpMatrix boundary_matrix(const WeightedComplex& K, int p, MatrixBasis basis);

/// Coboundary at degree p (uses B_{p+1}); requires 0 <= p < dim.
OpMatrix coboundary_matrix(const WeightedComplex& K, int p, MatrixBasis basis);

OpMatrix adjoint_boundary_matrix(const WeightedComplex& K, int p,
                                 MatrixBasis basis);
OpMatrix adjoint_coboundary_matrix(const WeightedComplex& K, int p,
                                   MatrixBasis basis);

/// Inner product matrix: W_p^{-1} on chains, W_p on cochains.
OpMatrix gram_matrix(const WeightedComplex& K, int p, Side side);

/// Diagonal of the Gram matrix for an arbitrary basis tag (identity for the
/// orthonormal bases).
Eigen::VectorXd gram_diagonal(const WeightedComplex& K, const BasisTag& tag);

OpMatrix flat_matrix(const WeightedComplex& K, int p);   // chains -> cochains
OpMatrix sharp_matrix(const WeightedComplex& K, int p);  // cochains -> chains

Vec change_of_basis(const WeightedComplex& K, const Vec& v, BasisTag target);

double inner_product(const WeightedComplex& K, const Vec& u, const Vec& v);

Vec flat(const WeightedComplex& K, const Vec& chain);
Vec sharp(const WeightedComplex& K, const Vec& cochain);

}  // namespace scer
