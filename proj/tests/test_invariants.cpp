#include <doctest.h>

#include <cmath>
#include <random>

#include "qsym3/invariants.hpp"
#include "test_helpers.hpp"

using namespace qsym3;
using namespace qsym3::testing;

TEST_CASE("wootters concurrence anchors") {
  Eigen::Vector4cd phi_plus;
  phi_plus << M_SQRT1_2, 0.0, 0.0, M_SQRT1_2;
  CHECK(wootters_concurrence(TwoQubitDensity(phi_plus * phi_plus.adjoint())) ==
        doctest::Approx(1.0).epsilon(1e-12));

  CHECK(wootters_concurrence(reduce_to_pair(basis_state(0, 0, 0), Party::C)) ==
        doctest::Approx(0.0).epsilon(1e-12));

  CHECK(wootters_concurrence(reduce_to_pair(w_state(), Party::C)) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("three tangle anchors") {
  CHECK(three_tangle(ghz_state()) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(three_tangle(w_state()) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(three_tangle(basis_state(0, 0, 0)) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("closed forms for the d33 family") {
  CHECK(tangle_closed_d33(1.0, 0.0, M_PI) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(tangle_closed_d33(1e-6, 0.5, 2.0) == doctest::Approx(0.0).epsilon(1e-5));
  CHECK(concurrence_closed_d33(1.0, 0.0, M_PI) == doctest::Approx(0.0).epsilon(1e-13));

  // tangle at (1, 0, pi/2) against the hyperdeterminant oracle
  const double base = 2.0 * std::pow(M_SQRT1_2, 3) / (2.0 + 2.0 * std::pow(M_SQRT1_2, 3));
  CHECK(tangle_closed_d33(1.0, 0.0, M_PI / 2) ==
        doctest::Approx(base * base).epsilon(1e-13));
  CHECK(three_tangle(canonical_d33(1.0, 0.0, M_PI / 2)) ==
        doctest::Approx(base * base).epsilon(1e-12));

  CHECK(concurrence_closed_d33(1.0, 0.0, M_PI / 2) ==
        doctest::Approx(wootters_concurrence(
            reduce_to_pair(canonical_d33(1.0, 0.0, M_PI / 2), Party::C)))
            .epsilon(1e-9));

  CHECK_THROWS_AS(tangle_closed_d33(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(concurrence_closed_d33(1.0, 7.0, 1.0), DomainError);
}

TEST_CASE("closed forms for the d32 family") {
  CHECK(concurrence_closed_d32(M_PI) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
  CHECK(concurrence_closed_d32(M_PI / 2) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
  CHECK(concurrence_closed_d32(1e-6) == doctest::Approx(0.0).epsilon(1e-10));
  CHECK_THROWS_AS(concurrence_closed_d32(0.0), DomainError);
  CHECK_THROWS_AS(concurrence_closed_d32(4.0), DomainError);
}

TEST_CASE("closed forms against the oracles on random draws") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> uy(1e-3, 1.0), ua(0.0, 2 * M_PI), ub(1e-2, M_PI);
  double worst_tau = 0.0, worst_c33 = 0.0, worst_c32 = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const double y = uy(rng), alpha = ua(rng), beta = ub(rng);
    const PureState3 st = canonical_d33(y, alpha, beta);
    worst_tau = std::max(worst_tau,
                         std::abs(three_tangle(st) - tangle_closed_d33(y, alpha, beta)));
    worst_c33 = std::max(worst_c33,
                         std::abs(wootters_concurrence(reduce_to_pair(st, Party::C)) -
                                  concurrence_closed_d33(y, alpha, beta)));
    const double b32 = ub(rng);
    worst_c32 = std::max(
        worst_c32, std::abs(wootters_concurrence(reduce_to_pair(canonical_d32(b32), Party::C)) -
                            concurrence_closed_d32(b32)));
  }
  CHECK(worst_tau < 1e-8);
  CHECK(worst_c33 < 1e-8);
  CHECK(worst_c32 < 1e-8);
}

TEST_CASE("tangle denominator shares the d33 normalization constant") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> uy(1e-2, 1.0), ua(0.0, 2 * M_PI), ub(1e-2, M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    const double y = uy(rng), alpha = ua(rng), beta = ub(rng);
    const double n2_inv = canonical_d33_norm2(y, alpha, beta);
    const double sh = std::sin(beta / 2);
    const double base = 2.0 * y * sh * sh * sh / n2_inv;
    CHECK(std::abs(tangle_closed_d33(y, alpha, beta) - base * base) < 1e-12);
  }
}

TEST_CASE("oracles are invariant under local unitaries") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState3 st = random_state(rng);
    const LocalUnitaryTriple u{random_unitary2(rng), random_unitary2(rng),
                               random_unitary2(rng)};
    const PureState3 rotated = apply_local_unitary(st, u);
    CHECK(std::abs(three_tangle(st) - three_tangle(rotated)) < 1e-10);
    CHECK(std::abs(wootters_concurrence(reduce_to_pair(st, Party::C)) -
                   wootters_concurrence(reduce_to_pair(
                       apply_local_unitary(st, {u.u_a, u.u_b, Mat2c::Identity()}),
                       Party::C))) < 1e-10);
  }
}

TEST_CASE("invariant set clamps to the unit interval") {
  const auto ghz = invariants_of(ghz_state());
  CHECK(ghz.tau == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ghz.concurrence == doctest::Approx(0.0).epsilon(1e-9));
  const auto w = invariants_of(w_state());
  CHECK(w.tau == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(w.concurrence == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto inv = invariants_of(random_state(rng));
    CHECK(inv.tau >= 0.0);
    CHECK(inv.tau <= 1.0);
    CHECK(inv.concurrence >= 0.0);
    CHECK(inv.concurrence <= 1.0);
  }
}
