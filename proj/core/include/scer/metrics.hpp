#pragma once

#include <vector>

#include "scer/resistance.hpp"

namespace scer {

/// sqrt(R_p(a - a', a - a')); vanishes on chains differing by a cycle.
double chain_pseudometric(const WeightedComplex& K, const Vec& a,
                          const Vec& a2, const PinvConfig& cfg = {});

/// Metric on p-cycles induced by R_{p+1}: solves the boundary-filling
/// problem for c - c' and measures the filling chain. Throws NotACycle for
/// non-cycles and NotABoundary when c - c' is not null-homologous.
double cycle_metric(const WeightedComplex& K, const Vec& c, const Vec& c2,
                    const PinvConfig& cfg = {});

struct FosterReport {
  int p = 0;
  double lhs_sum = 0;          // sum of w(sigma) r_sigma
  double trace_T = 0;          // trace of the ER operator
  int rank_B_transpose = 0;    // numerical rank of B_p^T
  int rhs = 0;                 // n_{p-1} - null(B_p^T)
  bool pass = false;
};

FosterReport foster_check(const WeightedComplex& K, int p, double tol = 1e-7,
                          const PinvConfig& cfg = {});

/// Eigenvalues of T_p in the orthonormal basis, sorted descending; they lie
/// in {0, 1} up to numerical noise.
std::vector<double> er_operator_spectrum(const WeightedComplex& K, int p,
                                         const PinvConfig& cfg = {});

}  // namespace scer
