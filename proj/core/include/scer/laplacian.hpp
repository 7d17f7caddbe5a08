#pragma once

#include "scer/complex.hpp"
#include "scer/spectral.hpp"

namespace scer {

enum class LapKind { Up, Down, Hodge };

/// Matrix of the up/down/Hodge Laplacian operator at degree p, on the chosen
/// side and basis. The up Laplacian at the top dimension is the zero matrix;
/// Down requires p >= 1.
OpMatrix laplacian(const WeightedComplex& K, int p, LapKind kind, Side side,
                   MatrixBasis basis);

/// Betti number: nullity of the Hodge Laplacian at degree p.
int betti(const WeightedComplex& K, int p, const PinvConfig& cfg = {});

struct HodgeParts {
  Vec im_coboundary_adjoint;  // image of delta_p^*
  Vec harmonic;               // kernel of the Hodge Laplacian
  Vec im_coboundary;          // image of delta_{p-1}
};

/// Orthogonal decomposition of a p-cochain into the three Hodge summands.
/// Components come back in the basis of the input.
HodgeParts hodge_decompose(const WeightedComplex& K, const Vec& f,
                           const PinvConfig& cfg = {});

}  // namespace scer
