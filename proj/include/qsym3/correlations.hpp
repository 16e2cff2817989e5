#pragma once

#include <array>

#include "qsym3/state.hpp"
#include "qsym3/types.hpp"

namespace qsym3 {

/// A two-qubit density matrix: hermitian, unit trace, positive semidefinite
/// (all within the documented tolerances).
class TwoQubitDensity {
public:
  explicit TwoQubitDensity(const Mat4c& rho);
  const Mat4c& matrix() const { return rho_; }

private:
  Mat4c rho_;
};

enum class Party { A, B, C };

/// Partial trace of |psi><psi| over the named party. The remaining qubits
/// keep their A < B < C order.
TwoQubitDensity reduce_to_pair(const PureState3& state, Party traced);

/// Hilbert-Schmidt data of a two-qubit state: Bloch vectors of both marginals
/// and the 3x3 correlation matrix t_ij = Tr[rho (sigma_i (x) sigma_j)].
struct CorrelationDecomposition {
  Vec3d s;         // first-qubit marginal, s_i = Tr[rho (sigma_i (x) I)]
  Vec3d s_second;  // second-qubit marginal
  Mat3d T;
  bool asymmetric_marginals;  // marginals differ beyond 1e-10

  /// Rebuilds rho = (1/4)[I(x)I + sum s_i sigma_i(x)I + sum s'_i I(x)sigma_i
  ///                      + sum t_ij sigma_i (x) sigma_j].
  Mat4c reconstruct() const;
};

CorrelationDecomposition hilbert_schmidt_decompose(const TwoQubitDensity& rho);

/// Optimal CHSH value 2 sqrt(t1^2 + t2^2) with t1^2, t2^2 the two largest
/// eigenvalues of T^T T (squared singular values of T).
double chsh_optimum(const Mat3d& T);

/// Closed-form correlation-matrix eigenvalues of the reduced pair of
/// canonical_d32(beta), returned in the printed order (t1, t2, t3).
std::array<double, 3> d32_t_eigenvalues(double beta);

/// Closed-form largest two correlation eigenvalues of the reduced pair of
/// canonical_d33(y, alpha, beta) on the two published slices.
std::array<double, 2> d33_t12_case_i(double y);   // beta = pi/2, alpha = pi
std::array<double, 2> d33_t12_case_ii(double y);  // beta = pi/3, alpha = 0

struct DirectGrid {
  int theta_steps = 24;
  int phi_steps = 48;
  int refine_rounds = 3;
};

/// Grid-plus-refinement maximization of
/// |<A1 B1> + <A1 B2> + <A2 B1> - <A2 B2>| over four unit Bloch vectors,
/// with Alice's two vectors aligned exactly (Cauchy-Schwarz) against the
/// gridded Bob vectors. Independent of the singular-value route; never
/// exceeds chsh_optimum and reaches it within ~1e-3 at default resolution.
double chsh_optimize_direct(const TwoQubitDensity& rho, const DirectGrid& grid = {});

}  // namespace qsym3
