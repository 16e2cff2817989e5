#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsym3/state.hpp"
#include "qsym3/types.hpp"

namespace qsym3 {

/// A multilinear (3,2,2) Bell expression: real coefficients over monomials
/// O_A(a) O_B(b) O_C(c) with per-party index 0 = identity, 1/2 = setting.
/// No constant term (coefficient at (0,0,0) is zero).
class BellExpression322 {
public:
  BellExpression322();
  explicit BellExpression322(const std::array<double, 27>& coeff,
                             std::optional<double> stated_bound = std::nullopt);

  double coefficient(int a, int b, int c) const { return coeff_[9 * a + 3 * b + c]; }
  void set_coefficient(int a, int b, int c, double v);
  const std::array<double, 27>& tensor() const { return coeff_; }

  /// Bound given after "<=" in the parsed text, if any. Advisory: the
  /// enumerated classical bound is authoritative.
  std::optional<double> stated_bound() const { return stated_bound_; }
  void set_stated_bound(std::optional<double> b) { stated_bound_ = b; }

  bool operator==(const BellExpression322& other) const;

private:
  std::array<double, 27> coeff_{};
  std::optional<double> stated_bound_;
};

/// Parses "A1 B1 C2", "+", "-", numeric coefficients, parentheses,
/// juxtaposition products and an optional "<= bound" suffix. Throws
/// ParseError (with position) on malformed input and DegreeError on
/// same-party products such as "A1 A2".
BellExpression322 parse_expression(std::string_view text);

/// Canonical text form; parse_expression(render_expression(e)) == e.
std::string render_expression(const BellExpression322& expr);

/// Maximum over all 64 deterministic local strategies (each party assigns
/// +-1 to each of its two settings).
double classical_bound(const BellExpression322& expr);

/// One party's two dichotomic observables (settings 1 and 2).
struct PartyObservables {
  Mat2c setting1;
  Mat2c setting2;
};

/// <psi| B |psi> with B = sum coeff[a][b][c] O_A(a) (x) O_B(b) (x) O_C(c),
/// index 0 meaning the identity. Observables must be hermitian.
double quantum_value(const BellExpression322& expr,
                     const std::array<PartyObservables, 3>& observables,
                     const PureState3& state);

/// One of the six built-in tight-Bell-inequality classes.
struct BuiltinClass {
  int k = 0;
  BellExpression322 expression;
  std::array<PartyObservables, 3> observables;
  PureState3 state;
  double expected_max = 0.0;

  BuiltinClass(int k_, BellExpression322 e, std::array<PartyObservables, 3> o,
               PureState3 s, double m)
      : k(k_), expression(std::move(e)), observables(o), state(std::move(s)),
        expected_max(m) {}
};

constexpr std::array<int, 6> kBuiltinClasses{2, 5, 22, 26, 33, 39};

/// Throws UnknownClass outside {2, 5, 22, 26, 33, 39}.
BuiltinClass builtin_class(int k);

/// Full verification row for one class: bound, quantum value, local-unitary
/// map to the symmetric form, Majorana spinors against the published table.
struct ClassVerification {
  int k = 0;
  double classical_bound = 0.0;
  double stated_bound = 0.0;
  double quantum_value = 0.0;
  double expected_max = 0.0;
  double fidelity = 0.0;           // |<psi_sym | U psi_ABC>|^2
  double symmetry_residual = 0.0;  // of psi_sym
  double spinor_residual = 0.0;    // vs validated table values, after
                                   // ordering and per-spinor phase
  std::vector<std::array<complexd, 2>> spinors;  // computed Majorana spinors
  /// Residual against the table row exactly as printed, where that differs
  /// from the validated values (class 33 third spinor misprint).
  std::optional<double> spinor_residual_printed;
  /// Fidelity of the mapped state against the printed symmetric form, where
  /// that differs from the round-trip-validated form (class 26 sign).
  std::optional<double> printed_form_fidelity;
  /// Quantum values under rejected readings of the printed observable
  /// (class 5): {as-printed matrix, Bloch direction (2,0,1)/sqrt5}.
  std::optional<std::array<double, 2>> alternate_quantum_values;
  std::string notes;
  bool pass = false;
};

ClassVerification verify_symmetric_form(int k);

}  // namespace qsym3
