#pragma once

#include <array>

#include "qsym3/correlations.hpp"
#include "qsym3/state.hpp"
#include "qsym3/types.hpp"

namespace qsym3 {

/// Orientation of Charlie's projective measurement.
struct CharlieSetting {
  double theta = 0.0;  // polar angle in [0, pi]
  double phi = 0.0;    // azimuth in [0, 2pi)

  Vec3d axis() const;
};

/// P_c = (I + c sigma.n)/2 for outcome c = +1 or -1.
Mat2c projector(int c, const CharlieSetting& setting);

struct ConditionResult {
  double p;
  TwoQubitDensity rho_ab;  // normalized post-measurement Alice-Bob state
};

/// Projects Charlie's qubit on outcome c. Throws OutcomeImpossible when the
/// outcome probability is at most epsilon.
ConditionResult condition_on_charlie(const PureState3& state, int c,
                                     const CharlieSetting& setting,
                                     double epsilon = 1e-12);

/// Conditional correlation data for both outcomes of one Charlie setting.
/// Zero-probability branches carry p = 0, zero matrices, and contribute
/// nothing to the combined value.
struct ConditionalReport {
  double p_plus = 0.0;
  double p_minus = 0.0;
  Mat3d T_plus = Mat3d::Zero();   // of the normalized conditional state
  Mat3d T_minus = Mat3d::Zero();
  std::array<double, 3> eig_plus{};   // ordered by |t| descending
  std::array<double, 3> eig_minus{};
  std::array<double, 2> chsh_c_opt{};  // per-outcome optimum, {c=+1, c=-1}
  double chsh_con_opt = 0.0;  // 2 sum_c p(c) sqrt((t1^c)^2 + (t2^c)^2)
};

ConditionalReport conditional_chsh(const PureState3& state, const CharlieSetting& setting);

/// Unnormalized conditional correlation matrix
/// <psi| sigma_i (x) sigma_j (x) P_c |psi> = p(c) * T^c.
Mat3d conditional_t_unnormalized(const PureState3& state, int c, const CharlieSetting& setting);

/// Closed forms for the canonical two-distinct-spinor family.
struct D32Conditional {
  double mu;
  double p;
  std::array<double, 3> t;  // (1, t2, -t2)
};

/// mu_c = 6 + 5c cos(th) + (3 + 4c cos(th)) cos(beta) + 3c cos(phi) sin(beta) sin(th),
/// p = mu_c / (6(2 + cos beta)), t2 = (1 + c cos th)(1 - cos beta)/mu_c.
/// Throws MuDegenerate on a probability-zero branch.
D32Conditional closed_form_d32(double beta, double theta, double phi, int c);

/// Closed forms for the three-distinct-spinor family on the published
/// y = 1, alpha = 0 slice (refuses other parameter values by construction:
/// the slice is baked into the signature).
struct D33Conditional {
  double nu;
  double p;
  std::array<double, 3> t;  // (1, t2, -t2)
};

D33Conditional closed_form_d33(double beta, double theta, double phi, int c);

struct ConditionalGrid {
  int theta_steps = 181;  // inclusive grid over [0, pi]
  int phi_steps = 91;     // inclusive grid over [0, 2pi]
  int refine_rounds = 3;  // local 11x11 scans, step shrinking x0.1 per round
};

struct ConditionalOptimum {
  CharlieSetting setting;
  ConditionalReport report;
};

/// Maximizes chsh_con_opt over Charlie's orientation. Deterministic: fixed
/// grids, ties broken toward smaller theta, then smaller phi.
ConditionalOptimum optimize_conditional(const PureState3& state,
                                        const ConditionalGrid& grid = {});

/// Q = max{0, (max chsh_con_opt - 2)/(2 sqrt2 - 2)}, clamped to [0, 1].
double quantifier_q(const PureState3& state, const ConditionalGrid& grid = {});

}  // namespace qsym3
