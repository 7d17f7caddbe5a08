#pragma once

#include <optional>

#include "scer/laplacian.hpp"

namespace scer {

/// Matrix of the effective resistance operator T_p (chain side) or T^p
/// (cochain side) in the requested basis. Requires 1 <= p <= dim.
OpMatrix er_operator(const WeightedComplex& K, int p, Side side,
                     MatrixBasis basis, const PinvConfig& cfg = {});

/// Matrix of the effective resistance bilinear form R_p. In the standard
/// basis this is B^T Wm^{-1/2} (Wm^{-1/2} B Wp B^T Wm^{-1/2})^+ Wm^{-1/2} B;
/// the orthonormal representation is Wp^{1/2} [R]_std Wp^{1/2}.
OpMatrix er_bilinear_matrix(const WeightedComplex& K, int p, MatrixBasis basis,
                            const PinvConfig& cfg = {});

double er_of_chain(const WeightedComplex& K, const Vec& alpha,
                   const PinvConfig& cfg = {});
double er_of_cochain(const WeightedComplex& K, const Vec& f,
                     const PinvConfig& cfg = {});

struct SimplexResistance {
  double r;         // r_sigma
  double relative;  // w(sigma) * r_sigma
};

SimplexResistance er_of_simplex(const WeightedComplex& K, const Simplex& sigma,
                                const PinvConfig& cfg = {});

/// Bilinear form on (p-1)-boundaries: solves B_p x = beta by least squares
/// and evaluates R_p(x, x'). Throws NotABoundary when a residual exceeds
/// 1e-8 relative.
double boundary_form(const WeightedComplex& K, int p, const Vec& beta,
                     const Vec& beta2, const PinvConfig& cfg = {});

/// Classical vertex effective resistance on a graph (dim-1 complex with unit
/// vertex weights). Vertices are user ids.
double vertex_er(const WeightedComplex& G, int u, int v,
                 const PinvConfig& cfg = {});

/// R_p = B_p^T (B_p W_p B_p^T)^+ B_p; disregards the (p-1)-weights.
OpMatrix osting_matrix(const WeightedComplex& K, int p,
                       const PinvConfig& cfg = {});

/// R'_d = B_d^T L_{d-1}^{-1} B_d with the Hodge Laplacian taken with unit
/// weights below the top dimension. Throws SingularHodgeLaplacian when
/// L_{d-1} is not invertible.
OpMatrix kook_lee_matrix(const WeightedComplex& K, int d,
                         const PinvConfig& cfg = {});

/// Resistance of a (p-1)-cycle; nullopt encodes "not a boundary" (the
/// literature's infinity). Throws NotACycle for non-cycles.
std::optional<double> black_maxwell_er(const WeightedComplex& K, int p,
                                       const Vec& gamma,
                                       const PinvConfig& cfg = {});

}  // namespace scer
