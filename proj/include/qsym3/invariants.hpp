#pragma once

#include "qsym3/correlations.hpp"
#include "qsym3/state.hpp"

namespace qsym3 {

struct InvariantSet {
  double tau;          // three-tangle, clamped to [0, 1]
  double concurrence;  // pairwise concurrence of the reduced pair, clamped
};

/// Three-tangle of canonical_d33(y, alpha, beta):
/// [2 y sin^3(beta/2) / (1 + y^2 + 2 y cos^3(beta/2) cos alpha)]^2.
/// The squared form is the one that agrees with the hyperdeterminant.
double tangle_closed_d33(double y, double alpha, double beta);

/// Pairwise concurrence of canonical_d33:
/// y sin(beta) sin(beta/2) / (1 + y^2 + 2 y cos^3(beta/2) cos alpha).
double concurrence_closed_d33(double y, double alpha, double beta);

/// Pairwise concurrence of canonical_d32:
/// (2 - 2 cos^2(beta/2)) / (3 + 6 cos^2(beta/2)).
double concurrence_closed_d32(double beta);

/// Wootters concurrence max{0, l1 - l2 - l3 - l4} with l_i the decreasing
/// square-rooted eigenvalues of rho (sigma2 x sigma2) rho* (sigma2 x sigma2).
double wootters_concurrence(const TwoQubitDensity& rho);

/// Three-tangle tau = 4|d1 - 2 d2 + 4 d3| from the degree-4 amplitude
/// polynomial (Cayley hyperdeterminant form).
double three_tangle(const PureState3& state);

/// Oracle-evaluated invariants of an arbitrary state (three-tangle plus the
/// Wootters concurrence of the C-traced pair), clamped to [0, 1].
InvariantSet invariants_of(const PureState3& state);

}  // namespace qsym3
