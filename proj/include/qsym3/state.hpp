#pragma once

#include <array>

#include "qsym3/types.hpp"

namespace qsym3 {

/// A single-qubit pure state (a0|0> + a1|1>), kept unit-norm.
class Spinor {
public:
  /// Requires |a0|^2 + |a1|^2 = 1 within 1e-12.
  Spinor(complexd a0, complexd a1);

  /// cos(beta/2)|0> + e^{i alpha} sin(beta/2)|1>, 0 <= alpha < 2pi, 0 <= beta <= pi.
  static Spinor from_angles(double alpha, double beta);

  /// Rescales arbitrary nonzero amplitudes to unit norm.
  static Spinor normalized(complexd a0, complexd a1);

  static Spinor zero() { return Spinor(1.0, 0.0); }
  static Spinor one() { return Spinor(0.0, 1.0); }
  static Spinor plus() { return Spinor(M_SQRT1_2, M_SQRT1_2); }

  complexd a0() const { return a0_; }
  complexd a1() const { return a1_; }

  /// <this|other>
  complexd overlap(const Spinor& other) const;

  /// Fubini-Study angle arccos|<this|other>| in [0, pi/2].
  double fubini_study(const Spinor& other) const;

  /// Phase convention used when comparing against printed tables: largest
  /// amplitude rotated real-positive, preferring a real-positive a0.
  Spinor canonical_phase() const;

private:
  complexd a0_, a1_;
};

/// A three-qubit pure state |q_A q_B q_C> with amplitude index 4a + 2b + c
/// (party A first slot, C last / Charlie's qubit). Unit norm within 1e-12.
class PureState3 {
public:
  explicit PureState3(const Vec8c& amplitudes);

  /// Rescales to unit norm; throws DomainError on a zero vector.
  static PureState3 normalized(const Vec8c& amplitudes);

  const Vec8c& amplitudes() const { return amp_; }
  complexd amplitude(int a, int b, int c) const { return amp_[4 * a + 2 * b + c]; }

  complexd overlap(const PureState3& other) const;
  /// |<this|other>|^2
  double fidelity(const PureState3& other) const;

private:
  Vec8c amp_;
};

PureState3 basis_state(int a, int b, int c);
PureState3 w_state();
PureState3 obverse_w_state();
PureState3 ghz_state();

/// N * sum over all 3! slot permutations of s1 (x) s2 (x) s3, normalized.
/// Invariant under reordering of the inputs. Throws DegenerateSymmetrization
/// if the sum cancels to zero.
PureState3 symmetrize(const std::array<Spinor, 3>& spinors);

/// Two-distinct-spinor canonical family: symmetrize({|0>,|0>,|beta>}) with
/// |beta> = cos(beta/2)|0> + sin(beta/2)|1>, 0 < beta <= pi.
/// beta = 0 is the product point and throws ProductStateError.
PureState3 canonical_d32(double beta);

/// Three-distinct-spinor canonical family
/// N(|000> + y e^{i alpha} |beta>^{(x)3}) with 0 < y <= 1, 0 <= alpha <= 2pi,
/// 0 < beta <= pi; 1/N^2 = 1 + y^2 + 2 y cos(alpha) cos^3(beta/2).
PureState3 canonical_d33(double y, double alpha, double beta);

/// Squared norm of the canonical-family normalization: 1/N^2 of
/// canonical_d33(y, alpha, beta).
double canonical_d33_norm2(double y, double alpha, double beta);

/// Relabels the qubit slots: the result amplitude at bits (x0, x1, x2) is the
/// source amplitude at (x_{perm[0]}, x_{perm[1]}, x_{perm[2]}); perm is a
/// permutation of {0,1,2} (0 = A, 1 = B, 2 = C).
PureState3 permute_qubits(const PureState3& state, const std::array<int, 3>& perm);

struct SymmetryCheck {
  bool symmetric;
  double residual;  // max over the 6 permutations of ||P psi - psi||
};

SymmetryCheck is_permutation_symmetric(const PureState3& state, double tol);

/// Majorana decomposition: three spinors (order unspecified) whose
/// symmetrization reproduces the state. Roots solve
/// d0 z^3 - sqrt(3) d1 z^2 + sqrt(3) d2 z - d3 = 0 with d_k the Dicke
/// amplitudes and z the |1>/|0> amplitude ratio; each drop in polynomial
/// degree contributes one spinor |1> (root at infinity).
/// Throws NotSymmetricError if the symmetry residual exceeds tol.
std::array<Spinor, 3> majorana_roots(const PureState3& state, double tol = 1e-8);

enum class SloccClass { Separable, TwoDistinct, ThreeDistinct, NotSymmetric };

const char* to_string(SloccClass c);

/// Counts distinct Majorana spinors under the Fubini-Study angle threshold
/// tol: 1 -> Separable, 2 -> TwoDistinct, 3 -> ThreeDistinct. Returns
/// NotSymmetric when the permutation-symmetry residual exceeds tol.
SloccClass slocc_class(const PureState3& state, double tol = 1e-6);

struct LocalUnitaryTriple {
  Mat2c u_a, u_b, u_c;
};

/// (U_A (x) U_B (x) U_C)|psi>. Throws NonUnitaryError unless each factor
/// satisfies U^dag U = I within 1e-10.
PureState3 apply_local_unitary(const PureState3& state, const LocalUnitaryTriple& u);

}  // namespace qsym3
