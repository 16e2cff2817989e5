#include <doctest.h>

#include <cmath>
#include <random>

#include "qsym3/bell322.hpp"
#include "qsym3/json_io.hpp"
#include "test_helpers.hpp"

using namespace qsym3;
using namespace qsym3::testing;

namespace {

int nonzero_count(const BellExpression322& e) {
  int n = 0;
  for (double v : e.tensor())
    if (v != 0.0) ++n;
  return n;
}

}  // namespace

TEST_CASE("parsing the class-2 inequality") {
  const auto e = parse_expression("(A1 B1 + A2 B2) C1 + (A2 B1 - A1 B2) C2 <= 2");
  CHECK(nonzero_count(e) == 4);
  CHECK(e.coefficient(1, 1, 1) == 1.0);
  CHECK(e.coefficient(2, 2, 1) == 1.0);
  CHECK(e.coefficient(2, 1, 2) == 1.0);
  CHECK(e.coefficient(1, 2, 2) == -1.0);
  CHECK(e.stated_bound() == 2.0);
}

TEST_CASE("parser basics and errors") {
  const auto single = parse_expression("A1");
  CHECK(nonzero_count(single) == 1);
  CHECK(single.coefficient(1, 0, 0) == 1.0);
  CHECK_FALSE(single.stated_bound().has_value());

  CHECK(parse_expression("2.5 A1 B2").coefficient(1, 2, 0) == 2.5);
  CHECK(parse_expression("A1 * B2").coefficient(1, 2, 0) == 1.0);
  CHECK(parse_expression("-A1 + A1").coefficient(1, 0, 0) == 0.0);
  CHECK(parse_expression("A1 (B1 - B1)").coefficient(1, 1, 0) == 0.0);

  CHECK_THROWS_AS(parse_expression("A1 A2"), DegreeError);
  CHECK_THROWS_AS(parse_expression("A1 (A2 + B1)"), DegreeError);
  CHECK_THROWS_AS(parse_expression("B2 B2"), DegreeError);
  CHECK_THROWS_AS(parse_expression("A3"), ParseError);
  CHECK_THROWS_AS(parse_expression("(A1"), ParseError);
  CHECK_THROWS_AS(parse_expression("A1 +"), ParseError);
  CHECK_THROWS_AS(parse_expression("A1 <= x"), ParseError);
  CHECK_THROWS_AS(parse_expression("1 + A1"), ParseError);  // constant term
  CHECK_THROWS_AS(parse_expression("A1 ) B1"), ParseError);

  // error positions point at the offending token
  try {
    parse_expression("A1 + Q1");
    CHECK(false);
  } catch (const ParseError& err) {
    CHECK(err.position() == 5);
  }
}

TEST_CASE("class 26 expands to 13 monomials") {
  const auto e = builtin_class(26).expression;
  CHECK(nonzero_count(e) == 13);
  CHECK(e.coefficient(1, 2, 2) == 2.0);
  CHECK(e.coefficient(0, 2, 2) == -2.0);
  CHECK(e.coefficient(1, 1, 1) == -1.0);
}

TEST_CASE("render/parse round trip") {
  for (int k : kBuiltinClasses) {
    const auto e = builtin_class(k).expression;
    const auto back = parse_expression(render_expression(e));
    CHECK(back == e);
  }
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 27> t{};
    for (int i = 1; i < 27; ++i) t[i] = coef(rng) * 0.5;
    const BellExpression322 e(t, trial % 2 ? std::optional<double>(coef(rng)) : std::nullopt);
    CHECK(parse_expression(render_expression(e)) == e);
  }
}

TEST_CASE("classical bounds by strategy enumeration") {
  const std::array<double, 6> expected{2, 3, 4, 5, 6, 6};
  for (std::size_t i = 0; i < kBuiltinClasses.size(); ++i) {
    const auto b = builtin_class(kBuiltinClasses[i]);
    CHECK(classical_bound(b.expression) == expected[i]);
    CHECK(classical_bound(b.expression) == b.expression.stated_bound().value());
  }

  // invariant under relabeling the two settings of any party
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    std::array<double, 27> t{};
    for (int i = 1; i < 27; ++i) t[i] = coef(rng);
    const BellExpression322 e(t);
    for (int party = 0; party < 3; ++party) {
      std::array<double, 27> swapped{};
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          for (int c = 0; c < 3; ++c) {
            const int a2 = party == 0 && a ? 3 - a : a;
            const int b2 = party == 1 && b ? 3 - b : b;
            const int c2 = party == 2 && c ? 3 - c : c;
            swapped[9 * a2 + 3 * b2 + c2] = t[9 * a + 3 * b + c];
          }
      CHECK(classical_bound(BellExpression322(swapped)) == classical_bound(e));
    }
  }
}

TEST_CASE("quantum values at the published optima") {
  const auto c2 = builtin_class(2);
  CHECK(quantum_value(c2.expression, c2.observables, c2.state) ==
        doctest::Approx(4.0).epsilon(1e-12));

  // |000> with the class-2 observables: only the Z Z Z term survives
  CHECK(quantum_value(c2.expression, c2.observables, basis_state(0, 0, 0)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  const auto c26 = builtin_class(26);
  CHECK(quantum_value(c26.expression, c26.observables, c26.state) ==
        doctest::Approx(1.0 + 4.0 * std::sqrt(3.0)).epsilon(1e-12));

  const auto c5 = builtin_class(5);
  CHECK(quantum_value(c5.expression, c5.observables, c5.state) ==
        doctest::Approx(8.0 * std::sqrt(5.0) - 13.0).epsilon(1e-12));

  for (int k : {22, 33, 39}) {
    const auto b = builtin_class(k);
    CHECK(std::abs(quantum_value(b.expression, b.observables, b.state) - b.expected_max) <
          1e-3);
  }

  Mat2c not_hermitian = Mat2c::Zero();
  not_hermitian(0, 1) = 1.0;
  CHECK_THROWS_AS(quantum_value(c2.expression,
                                {PartyObservables{not_hermitian, pauli(1)},
                                 PartyObservables{pauli(3), pauli(1)},
                                 PartyObservables{pauli(3), pauli(1)}},
                                c2.state),
                  DomainError);
}

TEST_CASE("builtin classes") {
  CHECK_THROWS_AS(builtin_class(7), UnknownClass);
  const auto c5 = builtin_class(5);
  const double r5 = std::sqrt(5.0);
  CHECK(std::abs(c5.state.amplitudes().squaredNorm() - 1.0) < 1e-12);
  // shipped first observable is a valid dichotomic +-1 observable
  Eigen::SelfAdjointEigenSolver<Mat2c> eig(c5.observables[0].setting1);
  CHECK(eig.eigenvalues()[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(eig.eigenvalues()[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c5.expected_max == doctest::Approx(8.0 * r5 - 13.0));

  // every shipped observable is a genuine dichotomic +-1 observable
  for (int k : kBuiltinClasses) {
    const auto b = builtin_class(k);
    for (const auto& party : b.observables)
      for (const Mat2c* obs : {&party.setting1, &party.setting2}) {
        Eigen::SelfAdjointEigenSolver<Mat2c> e(*obs, Eigen::EigenvaluesOnly);
        CHECK(std::abs(e.eigenvalues()[0] + 1.0) < 1e-9);
        CHECK(std::abs(e.eigenvalues()[1] - 1.0) < 1e-9);
      }
  }

  const auto c22 = builtin_class(22);
  CHECK(std::abs(c22.state.amplitude(0, 0, 0).real() - 0.161337) < 1e-6);
  CHECK(std::abs(c22.state.amplitude(1, 1, 1).real() + 0.664411) < 1e-6);

  // six-decimal tabulated amplitudes are symmetric well within 1e-4
  const auto check33 = is_permutation_symmetric(builtin_class(33).state, 1e-4);
  CHECK(check33.symmetric);
  CHECK(check33.residual < 1e-4);

  // raw tabulated amplitudes are unit-norm within 1e-4, guarding the reading
  // of the ket labels (the builtin renormalizes the residue away)
  const std::array<std::array<double, 3>, 3> raw{{{0.161337, -0.664411, 0.421319},
                                                  {-0.024223, -0.621262, 0.452197},
                                                  {0.177347, -0.386311, 0.522594}}};
  for (const auto& [a, b, c] : raw)
    CHECK(std::abs(a * a + b * b + 3 * c * c - 1.0) < 1e-4);
}

TEST_CASE("symmetric-form verification of all six classes") {
  for (int k : kBuiltinClasses) {
    const ClassVerification v = verify_symmetric_form(k);
    CAPTURE(k);
    CHECK(v.pass);
    CHECK(v.quantum_value > v.classical_bound);
    CHECK(v.spinor_residual <= 1e-3);
    CHECK(v.symmetry_residual <= 1e-4);
  }

  const auto v2 = verify_symmetric_form(2);
  CHECK(v2.fidelity >= 1.0 - 1e-9);  // U(2) psi(2) = GHZ

  const auto v26 = verify_symmetric_form(26);
  CHECK(v26.fidelity >= 1.0 - 1e-9);
  REQUIRE(v26.printed_form_fidelity.has_value());
  CHECK(*v26.printed_form_fidelity < 1e-6);  // the printed sign is unreachable
  CHECK_FALSE(v26.notes.empty());

  const auto v33 = verify_symmetric_form(33);
  REQUIRE(v33.spinor_residual_printed.has_value());
  CHECK(*v33.spinor_residual_printed > 1e-2);  // the misprint is visible
  CHECK(v33.spinor_residual <= 1e-3);

  const auto v5 = verify_symmetric_form(5);
  REQUIRE(v5.alternate_quantum_values.has_value());
  CHECK((*v5.alternate_quantum_values)[0] == doctest::Approx(5.159995).epsilon(1e-5));
  CHECK((*v5.alternate_quantum_values)[1] == doctest::Approx(4.484011).epsilon(1e-5));
}

TEST_CASE("verification rows serialize with the documented fields") {
  const auto j = to_json(verify_symmetric_form(26));
  CHECK(j.contains("class"));
  CHECK(j.contains("classical_bound"));
  CHECK(j.contains("quantum_value"));
  CHECK(j.contains("expected_max"));
  CHECK(j["residuals"].contains("fidelity"));
  CHECK(j["residuals"].contains("symmetry"));
  CHECK(j["residuals"].contains("spinors"));
}

TEST_CASE("parser never crashes on token soup") {
  std::mt19937_64 rng(515);
  const std::array<std::string, 12> tokens{"A1", "A2", "B1", "B2",  "C1", "C2",
                                           "+",  "-",  "*",  "(",   ")",  "2.5"};
  std::uniform_int_distribution<std::size_t> pick(0, tokens.size() - 1);
  std::uniform_int_distribution<int> length(0, 24);
  int parsed = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    const int n = length(rng);
    for (int i = 0; i < n; ++i) {
      text += tokens[pick(rng)];
      text += ' ';
    }
    try {
      const auto expr = parse_expression(text);
      const auto back = parse_expression(render_expression(expr));
      CHECK(back == expr);
      ++parsed;
    } catch (const ParseError&) {
    } catch (const DegreeError&) {
    }
  }
  CHECK(parsed > 0);  // the generator does produce valid expressions
}

TEST_CASE("correlation decomposition serializes to the documented schema") {
  const auto d = hilbert_schmidt_decompose(reduce_to_pair(w_state(), Party::C));
  const auto j = to_json(d);
  REQUIRE(j.contains("s"));
  REQUIRE(j.contains("T"));
  CHECK(j["s"].size() == 3);
  CHECK(j["T"].size() == 3);
  CHECK(j["T"][0].size() == 3);
  CHECK(j["s"][2].get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(j["T"][0][0].get<double>() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("state json round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState3 st = random_state(rng);
    const PureState3 back = state_from_json(to_json(st));
    CHECK(back.fidelity(st) == doctest::Approx(1.0).epsilon(1e-14));
  }
}
