#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace scer {

/// Which of the four bases a coefficient vector or matrix refers to.
enum class BasisKind {
  StandardChain,
  StandardCochain,
  OrthoChain,
  OrthoCochain,
};

inline bool is_chain(BasisKind k) {
  return k == BasisKind::StandardChain || k == BasisKind::OrthoChain;
}
inline bool is_standard(BasisKind k) {
  return k == BasisKind::StandardChain || k == BasisKind::StandardCochain;
}

struct BasisTag {
  int dim = 0;
  BasisKind kind = BasisKind::StandardChain;

  friend bool operator==(const BasisTag&, const BasisTag&) = default;
};

/// A p-chain or p-cochain: coefficients relative to a tagged basis.
struct Vec {
  BasisTag basis;
  Eigen::VectorXd coeffs;
};

/// Dense matrix with explicit domain and codomain bases.
struct OpMatrix {
  BasisTag domain;
  BasisTag codomain;
  Eigen::MatrixXd entries;

  Eigen::Index rows() const { return entries.rows(); }
  Eigen::Index cols() const { return entries.cols(); }
};

enum class Side { Chain, Cochain };
enum class MatrixBasis { Standard, Orthonormal };

// ---- error types ---------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveWeight : Error { using Error::Error; };
struct MalformedFacet : Error { using Error::Error; };
struct DimOutOfRange : Error { using Error::Error; };
struct SideMismatch : Error { using Error::Error; };
struct BasisMismatch : Error { using Error::Error; };
struct NonFinite : Error { using Error::Error; };
struct NonDiagonalGram : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct SimplexNotFound : Error { using Error::Error; };
struct NotABoundary : Error { using Error::Error; };
struct NotACycle : Error { using Error::Error; };
struct Disconnected : Error { using Error::Error; };
struct VertexNotFound : Error { using Error::Error; };
struct SingularHodgeLaplacian : Error { using Error::Error; };
struct InfeasibleBoundaryCurrent : Error { using Error::Error; };
struct DegenerateKernel : Error { using Error::Error; };
struct NotAGenerator : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct IOErr : Error { using Error::Error; };

}  // namespace scer
