#include "qsym3/correlations.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace qsym3 {

namespace {

Mat4c kron2(const Mat2c& a, const Mat2c& b) {
  Mat4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

double real_trace_product(const Mat4c& rho, const Mat4c& op) {
  return (rho * op).trace().real();
}

Vec3d unit_vector(double theta, double phi) {
  return Vec3d(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
               std::cos(theta));
}

}  // namespace

TwoQubitDensity::TwoQubitDensity(const Mat4c& rho) : rho_(rho) {
  if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("density matrix is not hermitian within 1e-12");
  if (std::abs(rho_.trace().real() - 1.0) > 1e-12 || std::abs(rho_.trace().imag()) > 1e-12)
    throw DomainError("density matrix trace differs from 1 beyond 1e-12");
  Eigen::SelfAdjointEigenSolver<Mat4c> solver(rho_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10)
    throw DomainError("density matrix has an eigenvalue below -1e-10");
}

TwoQubitDensity reduce_to_pair(const PureState3& state, Party traced) {
  const Vec8c& amp = state.amplitudes();
  auto index = [&](int kept_hi, int kept_lo, int t) {
    switch (traced) {
      case Party::A: return 4 * t + 2 * kept_hi + kept_lo;        // keep B, C
      case Party::B: return 4 * kept_hi + 2 * t + kept_lo;        // keep A, C
      default:       return 4 * kept_hi + 2 * kept_lo + t;        // keep A, B
    }
  };
  Mat4c rho = Mat4c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          complexd acc = 0.0;
          for (int t = 0; t < 2; ++t)
            acc += amp[index(i, j, t)] * std::conj(amp[index(k, l, t)]);
          rho(2 * i + j, 2 * k + l) = acc;
        }
  return TwoQubitDensity(rho);
}

namespace {

struct PauliKronTable {
  Mat4c first[3];    // sigma_i (x) I
  Mat4c second[3];   // I (x) sigma_i
  Mat4c both[3][3];  // sigma_i (x) sigma_j

  PauliKronTable() {
    for (int i = 0; i < 3; ++i) {
      first[i] = kron2(pauli(i + 1), identity2());
      second[i] = kron2(identity2(), pauli(i + 1));
      for (int j = 0; j < 3; ++j) both[i][j] = kron2(pauli(i + 1), pauli(j + 1));
    }
  }
};

const PauliKronTable& pauli_kron() {
  static const PauliKronTable table;
  return table;
}

}  // namespace

CorrelationDecomposition hilbert_schmidt_decompose(const TwoQubitDensity& rho) {
  CorrelationDecomposition out;
  const Mat4c& m = rho.matrix();
  const PauliKronTable& ops = pauli_kron();
  for (int i = 0; i < 3; ++i) {
    out.s[i] = real_trace_product(m, ops.first[i]);
    out.s_second[i] = real_trace_product(m, ops.second[i]);
    for (int j = 0; j < 3; ++j) out.T(i, j) = real_trace_product(m, ops.both[i][j]);
  }
  out.asymmetric_marginals = (out.s - out.s_second).cwiseAbs().maxCoeff() > 1e-10;
  return out;
}

Mat4c CorrelationDecomposition::reconstruct() const {
  const PauliKronTable& ops = pauli_kron();
  Mat4c m = Mat4c::Identity();
  for (int i = 0; i < 3; ++i) {
    m += s[i] * ops.first[i];
    m += s_second[i] * ops.second[i];
    for (int j = 0; j < 3; ++j) m += T(i, j) * ops.both[i][j];
  }
  return 0.25 * m;
}

double chsh_optimum(const Mat3d& T) {
  Eigen::JacobiSVD<Mat3d> svd(T);
  const auto& sv = svd.singularValues();
  return 2.0 * std::sqrt(sv[0] * sv[0] + sv[1] * sv[1]);
}

std::array<double, 3> d32_t_eigenvalues(double beta) {
  if (!(beta > 0.0 && beta <= M_PI)) throw DomainError("beta must lie in (0, pi]");
  const double cb = std::cos(beta);
  const double root = std::sqrt(5.0 + 4.0 * cb);
  const double den6 = 6.0 * (2.0 + cb);
  return {(5.0 + 4.0 * cb + 3.0 * root) / den6,
          (1.0 - cb) / (3.0 * (2.0 + cb)),
          (5.0 + 4.0 * cb - 3.0 * root) / den6};
}

std::array<double, 2> d33_t12_case_i(double y) {
  const double r2 = M_SQRT2;
  const double t1 = (1.0 - r2 * y + y * y + std::sqrt(1.0 + y * y * y * y)) /
                    (2.0 - r2 * y + 2.0 * y * y);
  const double t2 = y / (r2 * (1.0 + y * y) - y);
  return {t1, t2};
}

std::array<double, 2> d33_t12_case_ii(double y) {
  const double r3 = std::sqrt(3.0);
  const double den = 4.0 + 3.0 * r3 * y + 4.0 * y * y;
  const double rad = std::sqrt(1.0 + r3 * y + 2.0 * y * y + r3 * y * y * y + y * y * y * y);
  return {2.0 * (1.0 + r3 * y + y * y + rad) / den,
          2.0 * (1.0 + r3 * y + y * y - rad) / den};
}

namespace {

// Correlation of one Bob direction against each of Alice's Pauli axes,
// m_i(b) = Tr[rho (sigma_i (x) b.sigma)], read off the density matrix alone.
Vec3d bob_correlation(const Mat4c& rho, const Vec3d& b) {
  const Mat2c bs = pauli_dot(b);
  Vec3d m;
  for (int i = 0; i < 3; ++i)
    m[i] = real_trace_product(rho, kron2(pauli(i + 1), bs));
  return m;
}

// CHSH value for Bob directions (b1, b2) with Alice's two directions aligned
// exactly: |m(b1) + m(b2)| + |m(b1) - m(b2)|.
double chsh_given_bobs(const Mat4c& rho, const Vec3d& b1, const Vec3d& b2) {
  const Vec3d m1 = bob_correlation(rho, b1);
  const Vec3d m2 = bob_correlation(rho, b2);
  return (m1 + m2).norm() + (m1 - m2).norm();
}

}  // namespace

double chsh_optimize_direct(const TwoQubitDensity& rho, const DirectGrid& grid) {
  const Mat4c& m = rho.matrix();
  const int nth = std::max(grid.theta_steps, 2);
  const int nph = std::max(grid.phi_steps, 1);

  struct Candidate {
    double theta, phi;
    Vec3d corr;
  };
  std::vector<Candidate> points;
  points.reserve(static_cast<std::size_t>(nth) * nph);
  for (int i = 0; i < nth; ++i) {
    const double th = M_PI * i / (nth - 1);
    for (int j = 0; j < nph; ++j) {
      const double ph = 2.0 * M_PI * j / nph;
      points.push_back({th, ph, bob_correlation(m, unit_vector(th, ph))});
    }
  }

  double best = -1.0;
  double b1_th = 0, b1_ph = 0, b2_th = 0, b2_ph = 0;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = 0; j < points.size(); ++j) {
      const double v = (points[i].corr + points[j].corr).norm() +
                       (points[i].corr - points[j].corr).norm();
      if (v > best) {
        best = v;
        b1_th = points[i].theta; b1_ph = points[i].phi;
        b2_th = points[j].theta; b2_ph = points[j].phi;
      }
    }

  double th_step = M_PI / (nth - 1);
  double ph_step = 2.0 * M_PI / nph;
  for (int round = 0; round < grid.refine_rounds; ++round) {
    th_step *= 0.1;
    ph_step *= 0.1;
    for (int sweep = 0; sweep < 2; ++sweep)
      for (int which = 0; which < 2; ++which) {
        double& cth = which == 0 ? b1_th : b2_th;
        double& cph = which == 0 ? b1_ph : b2_ph;
        const Vec3d other = unit_vector(which == 0 ? b2_th : b1_th,
                                        which == 0 ? b2_ph : b1_ph);
        double loc_best = -1.0, loc_th = cth, loc_ph = cph;
        for (int di = -5; di <= 5; ++di)
          for (int dj = -5; dj <= 5; ++dj) {
            const double th = std::clamp(cth + di * th_step, 0.0, M_PI);
            const double ph = cph + dj * ph_step;
            const Vec3d mv = bob_correlation(m, unit_vector(th, ph));
            const Vec3d mo = bob_correlation(m, other);
            const double v = (mv + mo).norm() + (mv - mo).norm();
            if (v > loc_best) {
              loc_best = v;
              loc_th = th;
              loc_ph = ph;
            }
          }
        cth = loc_th;
        cph = loc_ph;
        best = std::max(best, loc_best);
      }
  }
  return std::max(best, chsh_given_bobs(m, unit_vector(b1_th, b1_ph),
                                        unit_vector(b2_th, b2_ph)));
}

}  // namespace qsym3
