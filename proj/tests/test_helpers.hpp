#pragma once

#include <array>
#include <random>

#include "qsym3/state.hpp"

namespace qsym3::testing {

inline Spinor random_spinor(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const complexd a0(normal(rng), normal(rng));
  const complexd a1(normal(rng), normal(rng));
  return Spinor::normalized(a0, a1);
}

inline PureState3 random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Vec8c amp;
  for (int i = 0; i < 8; ++i) amp[i] = complexd(normal(rng), normal(rng));
  return PureState3::normalized(amp);
}

inline PureState3 random_symmetric_state(std::mt19937_64& rng) {
  return symmetrize({random_spinor(rng), random_spinor(rng), random_spinor(rng)});
}

/// Independent symmetrization oracle: the six tensor products written out
/// term by term, no shared code with qsym3::symmetrize.
inline Vec8c brute_symmetrized_sum(const std::array<std::array<complexd, 2>, 3>& s) {
  Vec8c sum = Vec8c::Zero();
  const int orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& ord : orders)
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          sum[4 * a + 2 * b + c] += s[ord[0]][a] * s[ord[1]][b] * s[ord[2]][c];
  return sum;
}

inline Mat2c random_unitary2(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Mat2c m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = complexd(normal(rng), normal(rng));
  const Eigen::HouseholderQR<Mat2c> qr(m);
  Mat2c q = qr.householderQ();
  Mat2c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) {
    const complexd d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qsym3::testing
