#pragma once

#include <optional>

#include "scer/resistance.hpp"

namespace scer {

/// Boundary current beta lives in the standard chain basis at degree p-1.
/// Terminals are implied by the sign of beta's support.
struct CircuitProblem {
  int p = 1;
  Vec beta;
};

struct CircuitSolution {
  Vec alpha;  // current, p-chain
  Vec f;      // voltage, p-cochain
  Vec phi;    // potential, (p-1)-cochain (minimal norm)
  double kcl = 0, kvl = 0, ohm = 0;
};

/// Solves KVL + KCL + Ohm for the given boundary current via
/// phi = (L_up^{p-1})^+ flat(beta). Throws InfeasibleBoundaryCurrent when
/// flat(beta) is not in the image of the up Laplacian.
CircuitSolution solve_circuit(const WeightedComplex& K,
                              const CircuitProblem& prob,
                              const PinvConfig& cfg = {});

/// True iff flat(beta) is orthogonal to ker(L_up^{p-1}); for connected
/// graphs this is the zero-sum condition on beta.
bool check_feasible(const WeightedComplex& K, const CircuitProblem& prob,
                    const PinvConfig& cfg = {});

struct LawResiduals {
  double kcl = 0, kvl = 0, ohm = 0;
};

/// Residuals of the three laws for a candidate (alpha, f, phi). When beta is
/// absent, KCL is checked against the boundary of alpha itself (residual 0);
/// when phi is absent, the best least-squares potential is reconstructed.
LawResiduals verify_laws(const WeightedComplex& K, int p, const Vec& alpha,
                         const Vec& f, const Vec* phi = nullptr,
                         const Vec* beta = nullptr,
                         const PinvConfig& cfg = {});

/// Kook-Lee current generator: a d-simplex sigma outside X whose boundary
/// is minus the boundary of the witness chain c in C_d(X).
struct GeneratorAttachment {
  std::vector<int> sigma;  // d+1 vertex ids, strictly increasing
  Eigen::VectorXd c;       // witness, standard chain coeffs over K_d(X)
  double i_sigma = 1.0;
};

struct KookLeeSolution {
  Eigen::VectorXd current;  // I over C_d(X), standard chain coeffs
  double i_sigma = 0;       // sigma-component of I_sigma
  Eigen::VectorXd voltage;  // V = flat(I), standard cochain coeffs
  double v_sigma = 0;
  double resistance = 0;  // r' = -v_sigma / i_sigma
};

/// Runs the Kook-Lee construction on the extended complex Z: finds the
/// one-dimensional kernel of its d-th Hodge Laplacian, scales the kernel
/// vector so the sigma-component equals i_sigma, and derives the voltage and
/// the resistance.
KookLeeSolution kook_lee_resistance(const WeightedComplex& X,
                                    const GeneratorAttachment& gen,
                                    const PinvConfig& cfg = {});

}  // namespace scer
