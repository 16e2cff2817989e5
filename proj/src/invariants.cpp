#include "qsym3/invariants.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace qsym3 {

namespace {

double d33_denominator(double y, double alpha, double beta) {
  const double ch = std::cos(beta / 2);
  return 1.0 + y * y + 2.0 * y * std::cos(alpha) * ch * ch * ch;
}

void check_d33_domain(double y, double alpha, double beta) {
  if (!(y > 0.0 && y <= 1.0)) throw DomainError("y must lie in (0, 1]");
  if (!(alpha >= 0.0 && alpha <= 2 * M_PI)) throw DomainError("alpha must lie in [0, 2pi]");
  if (!(beta > 0.0 && beta <= M_PI)) throw DomainError("beta must lie in (0, pi]");
}

}  // namespace

double tangle_closed_d33(double y, double alpha, double beta) {
  check_d33_domain(y, alpha, beta);
  const double sh = std::sin(beta / 2);
  const double base = 2.0 * y * sh * sh * sh / d33_denominator(y, alpha, beta);
  return base * base;
}

double concurrence_closed_d33(double y, double alpha, double beta) {
  check_d33_domain(y, alpha, beta);
  return y * std::sin(beta) * std::sin(beta / 2) / d33_denominator(y, alpha, beta);
}

double concurrence_closed_d32(double beta) {
  if (!(beta > 0.0 && beta <= M_PI)) throw DomainError("beta must lie in (0, pi]");
  const double c2 = std::cos(beta / 2) * std::cos(beta / 2);
  return (2.0 - 2.0 * c2) / (3.0 + 6.0 * c2);
}

double wootters_concurrence(const TwoQubitDensity& rho) {
  const Mat4c& m = rho.matrix();
  Mat4c yy = Mat4c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      yy.block<2, 2>(2 * i, 2 * j) = pauli(2)(i, j) * pauli(2);

  // With rho = M M^dag (M the subnormalized eigenvector frame), the nonzero
  // spectrum of rho (sy x sy) rho* (sy x sy) equals the squared singular
  // values of M^T (sy x sy) M, so the lambda_i come out of one SVD instead
  // of square roots of near-zero eigenvalues.
  Eigen::SelfAdjointEigenSolver<Mat4c> rho_eigen(m);
  std::vector<int> kept;
  for (int i = 0; i < 4; ++i) {
    double v = rho_eigen.eigenvalues()[i];
    if (v < 0.0 && v > -1e-12) v = 0.0;  // round-off clamp
    if (v > 1e-14) kept.push_back(i);
  }
  const int rank = static_cast<int>(kept.size());
  if (rank == 0) return 0.0;
  Eigen::MatrixXcd frame(4, rank);
  for (int c = 0; c < rank; ++c)
    frame.col(c) = std::sqrt(std::max(rho_eigen.eigenvalues()[kept[c]], 0.0)) *
                   rho_eigen.eigenvectors().col(kept[c]);
  const Eigen::MatrixXcd s_matrix = frame.transpose() * yy * frame;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s_matrix);

  std::array<double, 4> lambda{0.0, 0.0, 0.0, 0.0};
  for (int i = 0; i < rank; ++i) lambda[i] = svd.singularValues()[i];
  std::sort(lambda.begin(), lambda.end(), std::greater<double>());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double three_tangle(const PureState3& state) {
  auto a = [&](int i, int j, int k) { return state.amplitude(i, j, k); };
  auto sq = [](complexd v) { return v * v; };

  const complexd d1 = sq(a(0, 0, 0)) * sq(a(1, 1, 1)) + sq(a(0, 0, 1)) * sq(a(1, 1, 0)) +
                      sq(a(0, 1, 0)) * sq(a(1, 0, 1)) + sq(a(1, 0, 0)) * sq(a(0, 1, 1));
  const complexd d2 = a(0, 0, 0) * a(1, 1, 1) * a(0, 1, 1) * a(1, 0, 0) +
                      a(0, 0, 0) * a(1, 1, 1) * a(1, 0, 1) * a(0, 1, 0) +
                      a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 0) * a(0, 0, 1) +
                      a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1) * a(0, 1, 0) +
                      a(0, 1, 1) * a(1, 0, 0) * a(1, 1, 0) * a(0, 0, 1) +
                      a(1, 0, 1) * a(0, 1, 0) * a(1, 1, 0) * a(0, 0, 1);
  const complexd d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                      a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
  return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

InvariantSet invariants_of(const PureState3& state) {
  const double tau = three_tangle(state);
  const double con = wootters_concurrence(reduce_to_pair(state, Party::C));
  return InvariantSet{std::clamp(tau, 0.0, 1.0), std::clamp(con, 0.0, 1.0)};
}

}  // namespace qsym3
