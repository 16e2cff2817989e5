#include "qsym3/conditional.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qsym3 {

namespace {

constexpr double kTwoSqrt2 = 2.0 * M_SQRT2;

// |t| triple in descending order: singular values, which agree with the
// absolute eigenvalues whenever the correlation matrix is symmetric and stay
// correct for non-symmetric input.
std::array<double, 3> ordered_abs_eigenvalues(const Mat3d& T) {
  Eigen::JacobiSVD<Mat3d> svd(T);
  return {svd.singularValues()[0], svd.singularValues()[1], svd.singularValues()[2]};
}

}  // namespace

Vec3d CharlieSetting::axis() const {
  return Vec3d(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
               std::cos(theta));
}

Mat2c projector(int c, const CharlieSetting& setting) {
  if (c != 1 && c != -1) throw DomainError("outcome must be +1 or -1");
  return 0.5 * (Mat2c::Identity() + static_cast<double>(c) * pauli_dot(setting.axis()));
}

ConditionResult condition_on_charlie(const PureState3& state, int c,
                                     const CharlieSetting& setting, double epsilon) {
  const Mat2c P = projector(c, setting);
  Vec8c projected = Vec8c::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          projected[4 * a + 2 * b + i] += P(i, j) * state.amplitudes()[4 * a + 2 * b + j];

  const double p = state.amplitudes().dot(projected).real();
  if (p <= epsilon) throw OutcomeImpossible("outcome has (numerically) zero probability");

  // normalize by ||P psi||^2 (equal to p up to round-off) so the trace is
  // exactly one even on low-probability branches
  const double norm2 = projected.squaredNorm();
  Mat4c rho = Mat4c::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      complexd acc = 0.0;
      for (int t = 0; t < 2; ++t)
        acc += projected[2 * i + t] * std::conj(projected[2 * j + t]);
      rho(i, j) = acc / norm2;
    }
  return ConditionResult{p, TwoQubitDensity(rho)};
}

ConditionalReport conditional_chsh(const PureState3& state, const CharlieSetting& setting) {
  ConditionalReport report;
  for (int c : {1, -1}) {
    double p = 0.0;
    Mat3d T = Mat3d::Zero();
    std::array<double, 3> eig{};
    double chsh = 0.0;
    try {
      const ConditionResult cond = condition_on_charlie(state, c, setting);
      p = cond.p;
      T = hilbert_schmidt_decompose(cond.rho_ab).T;
      eig = ordered_abs_eigenvalues(T);
      chsh = 2.0 * std::sqrt(eig[0] * eig[0] + eig[1] * eig[1]);
    } catch (const OutcomeImpossible&) {
      // zero-weight branch: contributes p * (anything) = 0
    }
    if (c == 1) {
      report.p_plus = p;
      report.T_plus = T;
      report.eig_plus = eig;
      report.chsh_c_opt[0] = chsh;
    } else {
      report.p_minus = p;
      report.T_minus = T;
      report.eig_minus = eig;
      report.chsh_c_opt[1] = chsh;
    }
  }
  report.chsh_con_opt =
      report.p_plus * report.chsh_c_opt[0] + report.p_minus * report.chsh_c_opt[1];
  return report;
}

Mat3d conditional_t_unnormalized(const PureState3& state, int c,
                                 const CharlieSetting& setting) {
  try {
    const ConditionResult cond = condition_on_charlie(state, c, setting);
    return cond.p * hilbert_schmidt_decompose(cond.rho_ab).T;
  } catch (const OutcomeImpossible&) {
    return Mat3d::Zero();
  }
}

D32Conditional closed_form_d32(double beta, double theta, double phi, int c) {
  if (!(beta > 0.0 && beta <= M_PI)) throw DomainError("beta must lie in (0, pi]");
  if (c != 1 && c != -1) throw DomainError("outcome must be +1 or -1");
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double mu = 6.0 + 5.0 * c * ct + (3.0 + 4.0 * c * ct) * cb +
                    3.0 * c * std::cos(phi) * sb * st;
  if (mu <= 1e-12) throw MuDegenerate("probability-zero branch (mu <= 1e-12)");
  const double p = mu / (6.0 * (2.0 + cb));
  const double t2 = (1.0 + c * ct) * (1.0 - cb) / mu;
  return D32Conditional{mu, p, {1.0, t2, -t2}};
}

D33Conditional closed_form_d33(double beta, double theta, double phi, int c) {
  if (!(beta > 0.0 && beta <= M_PI)) throw DomainError("beta must lie in (0, pi]");
  if (c != 1 && c != -1) throw DomainError("outcome must be +1 or -1");
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double ch = std::cos(beta / 2), sh = std::sin(beta / 2);
  const double ch3 = ch * ch * ch;

  const double p_num = 2.0 + c * ct * (1.0 + cb) + 2.0 * ch3 * (1.0 + c * ct) +
                       c * std::cos(phi) * st * sb * (1.0 + ch);
  const double p = p_num / (4.0 * (1.0 + ch3));
  // nu = 8 p(c) sin(beta/2)(1 + cos^3(beta/2)): the normalizer that turns the
  // radicand below into the conditional-state concurrence
  const double nu = 2.0 * sh * p_num;
  if (std::abs(nu) <= 1e-12) throw NuDegenerate("vanishing denominator nu");
  const double radicand = 2.0 * (1.0 + c * ct) * std::pow(1.0 - cb, 3) *
                          (1.0 + c * ct * cb + c * std::cos(phi) * st * sb);
  const double t2 = std::sqrt(std::max(radicand, 0.0)) / nu;
  return D33Conditional{nu, p, {1.0, t2, -t2}};
}

ConditionalOptimum optimize_conditional(const PureState3& state,
                                        const ConditionalGrid& grid) {
  const int nth = std::max(grid.theta_steps, 2);
  const int nph = std::max(grid.phi_steps, 2);
  const double th_step0 = M_PI / (nth - 1);
  const double ph_step0 = 2.0 * M_PI / (nph - 1);

  // Ties within float noise go to the earliest (smallest theta, then
  // smallest phi) grid point.
  constexpr double kImprovement = 1e-12;

  double best = -1.0, best_th = 0.0, best_ph = 0.0;
  for (int i = 0; i < nth; ++i) {
    const double th = th_step0 * i;
    for (int j = 0; j < nph; ++j) {
      const double ph = ph_step0 * j;
      const double v = conditional_chsh(state, CharlieSetting{th, ph}).chsh_con_opt;
      if (v > best + kImprovement) {
        best = v;
        best_th = th;
        best_ph = ph;
      }
    }
  }

  double th_step = th_step0, ph_step = ph_step0;
  for (int round = 0; round < grid.refine_rounds; ++round) {
    th_step *= 0.1;
    ph_step *= 0.1;
    double loc_best = best, loc_th = best_th, loc_ph = best_ph;
    for (int di = -5; di <= 5; ++di)
      for (int dj = -5; dj <= 5; ++dj) {
        const double th = std::clamp(best_th + di * th_step, 0.0, M_PI);
        const double ph = best_ph + dj * ph_step;
        const double v = conditional_chsh(state, CharlieSetting{th, ph}).chsh_con_opt;
        if (v > loc_best + kImprovement) {
          loc_best = v;
          loc_th = th;
          loc_ph = ph;
        }
      }
    best = loc_best;
    best_th = loc_th;
    best_ph = loc_ph;
  }

  const CharlieSetting setting{best_th, best_ph};
  return ConditionalOptimum{setting, conditional_chsh(state, setting)};
}

double quantifier_q(const PureState3& state, const ConditionalGrid& grid) {
  const double value = optimize_conditional(state, grid).report.chsh_con_opt;
  const double q = (value - 2.0) / (kTwoSqrt2 - 2.0);
  return std::clamp(q, 0.0, 1.0);
}

}  // namespace qsym3
