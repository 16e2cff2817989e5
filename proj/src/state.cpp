#include "qsym3/state.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qsym3 {

namespace {

constexpr double kNormTol = 1e-12;

const std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

const Mat2c& pauli(int i) {
  static const Mat2c x = (Mat2c() << 0.0, 1.0, 1.0, 0.0).finished();
  static const Mat2c y =
      (Mat2c() << 0.0, complexd(0, -1), complexd(0, 1), 0.0).finished();
  static const Mat2c z = (Mat2c() << 1.0, 0.0, 0.0, -1.0).finished();
  switch (i) {
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw DomainError("pauli index must be 1, 2 or 3");
  }
}

const Mat2c& identity2() {
  static const Mat2c id = Mat2c::Identity();
  return id;
}

Mat2c pauli_dot(const Vec3d& n) {
  return n[0] * pauli(1) + n[1] * pauli(2) + n[2] * pauli(3);
}

Spinor::Spinor(complexd a0, complexd a1) : a0_(a0), a1_(a1) {
  const double n2 = std::norm(a0) + std::norm(a1);
  if (std::abs(n2 - 1.0) > kNormTol)
    throw DomainError("spinor amplitudes are not unit-norm");
}

Spinor Spinor::from_angles(double alpha, double beta) {
  return Spinor(std::cos(beta / 2),
                std::exp(complexd(0, alpha)) * std::sin(beta / 2));
}

Spinor Spinor::normalized(complexd a0, complexd a1) {
  const double n = std::sqrt(std::norm(a0) + std::norm(a1));
  if (n == 0.0) throw DomainError("cannot normalize the zero spinor");
  return Spinor(a0 / n, a1 / n);
}

complexd Spinor::overlap(const Spinor& other) const {
  return std::conj(a0_) * other.a0_ + std::conj(a1_) * other.a1_;
}

double Spinor::fubini_study(const Spinor& other) const {
  return std::acos(std::min(1.0, std::abs(overlap(other))));
}

Spinor Spinor::canonical_phase() const {
  const complexd anchor = std::abs(a0_) > 1e-6 ? a0_ : a1_;
  const complexd phase = std::abs(anchor) > 0 ? anchor / std::abs(anchor) : 1.0;
  return Spinor(a0_ / phase, a1_ / phase);
}

PureState3::PureState3(const Vec8c& amplitudes) : amp_(amplitudes) {
  if (std::abs(amp_.squaredNorm() - 1.0) > kNormTol)
    throw DomainError("three-qubit amplitudes are not unit-norm");
}

PureState3 PureState3::normalized(const Vec8c& amplitudes) {
  const double n = amplitudes.norm();
  if (n < 1e-300) throw DomainError("cannot normalize the zero state");
  return PureState3(Vec8c(amplitudes / n));
}

complexd PureState3::overlap(const PureState3& other) const {
  return amp_.dot(other.amp_);
}

double PureState3::fidelity(const PureState3& other) const {
  return std::norm(overlap(other));
}

PureState3 basis_state(int a, int b, int c) {
  Vec8c v = Vec8c::Zero();
  v[4 * a + 2 * b + c] = 1.0;
  return PureState3(v);
}

PureState3 w_state() {
  Vec8c v = Vec8c::Zero();
  v[1] = v[2] = v[4] = 1.0 / std::sqrt(3.0);
  return PureState3(v);
}

PureState3 obverse_w_state() {
  Vec8c v = Vec8c::Zero();
  v[3] = v[5] = v[6] = 1.0 / std::sqrt(3.0);
  return PureState3(v);
}

PureState3 ghz_state() {
  Vec8c v = Vec8c::Zero();
  v[0] = v[7] = M_SQRT1_2;
  return PureState3(v);
}

PureState3 symmetrize(const std::array<Spinor, 3>& spinors) {
  std::array<std::array<complexd, 2>, 3> amp;
  for (int k = 0; k < 3; ++k) amp[k] = {spinors[k].a0(), spinors[k].a1()};

  Vec8c sum = Vec8c::Zero();
  for (const auto& perm : kPermutations) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          sum[4 * a + 2 * b + c] += amp[perm[0]][a] * amp[perm[1]][b] * amp[perm[2]][c];
  }
  const double n = sum.norm();
  if (n < 1e-7)
    throw DegenerateSymmetrization("symmetrized tensor sum cancelled to zero");
  return PureState3(Vec8c(sum / n));
}

PureState3 canonical_d32(double beta) {
  if (beta == 0.0) throw ProductStateError("beta = 0 is the product point, not in the family");
  if (!(beta > 0.0 && beta <= M_PI)) throw DomainError("beta must lie in (0, pi]");
  const double cb = std::cos(beta / 2), sb = std::sin(beta / 2);
  Vec8c v = Vec8c::Zero();
  v[0] = 3.0 * cb;
  v[1] = v[2] = v[4] = sb;
  // ||v||^2 = 3 (2 + cos beta), the constant in the closed-form T denominators
  return PureState3::normalized(v);
}

double canonical_d33_norm2(double y, double alpha, double beta) {
  const double cb = std::cos(beta / 2);
  return 1.0 + y * y + 2.0 * y * std::cos(alpha) * cb * cb * cb;
}

PureState3 canonical_d33(double y, double alpha, double beta) {
  if (!(y > 0.0 && y <= 1.0)) throw DomainError("y must lie in (0, 1]");
  if (!(alpha >= 0.0 && alpha <= 2 * M_PI)) throw DomainError("alpha must lie in [0, 2pi]");
  if (!(beta > 0.0 && beta <= M_PI)) throw DomainError("beta must lie in (0, pi]");
  const double cb = std::cos(beta / 2), sb = std::sin(beta / 2);
  const complexd w = y * std::exp(complexd(0, alpha));
  Vec8c v = Vec8c::Zero();
  v[0] = 1.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int weight = a + b + c;
        v[4 * a + 2 * b + c] += w * std::pow(cb, 3 - weight) * std::pow(sb, weight);
      }
  return PureState3::normalized(v);
}

PureState3 permute_qubits(const PureState3& state, const std::array<int, 3>& perm) {
  Vec8c out = Vec8c::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const std::array<int, 3> bits{a, b, c};
        out[4 * a + 2 * b + c] =
            state.amplitudes()[4 * bits[perm[0]] + 2 * bits[perm[1]] + bits[perm[2]]];
      }
  return PureState3(out);
}

SymmetryCheck is_permutation_symmetric(const PureState3& state, double tol) {
  double residual = 0.0;
  for (const auto& perm : kPermutations) {
    const PureState3 permuted = permute_qubits(state, perm);
    residual = std::max(residual,
                        (permuted.amplitudes() - state.amplitudes()).norm());
  }
  return SymmetryCheck{residual <= tol, residual};
}

namespace {

// Dicke amplitudes (d0, d1, d2, d3) of the symmetric projection.
std::array<complexd, 4> dicke_amplitudes(const Vec8c& amp) {
  const double r3 = std::sqrt(3.0);
  return {amp[0],
          (amp[1] + amp[2] + amp[4]) / r3,
          (amp[3] + amp[5] + amp[6]) / r3,
          amp[7]};
}

// Roots of a complex polynomial given by descending coefficients (degree
// <= 3), via the companion matrix plus a couple of Newton polish steps.
std::vector<complexd> poly_roots(std::vector<complexd> coeff) {
  const int deg = static_cast<int>(coeff.size()) - 1;
  std::vector<complexd> roots;
  if (deg <= 0) return roots;
  const complexd lead = coeff[0];
  for (auto& c : coeff) c /= lead;
  if (deg == 1) {
    roots.push_back(-coeff[1]);
  } else if (deg == 2) {
    const complexd disc = std::sqrt(coeff[1] * coeff[1] - 4.0 * coeff[2]);
    roots.push_back((-coeff[1] + disc) / 2.0);
    roots.push_back((-coeff[1] - disc) / 2.0);
  } else {
    Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
    companion(1, 0) = 1.0;
    companion(2, 1) = 1.0;
    companion(0, 2) = -coeff[3];
    companion(1, 2) = -coeff[2];
    companion(2, 2) = -coeff[1];
    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(companion, false);
    if (solver.info() != Eigen::Success)
      throw NumericalRootFailure("companion-matrix eigensolver did not converge");
    for (int i = 0; i < 3; ++i) roots.push_back(solver.eigenvalues()[i]);
  }
  // Newton polish on the monic polynomial.
  for (auto& z : roots) {
    for (int it = 0; it < 3; ++it) {
      complexd p = coeff[0], dp = 0.0;
      for (std::size_t i = 1; i < coeff.size(); ++i) {
        dp = dp * z + p;
        p = p * z + coeff[i];
      }
      if (std::abs(dp) < 1e-300) break;
      const complexd step = p / dp;
      if (!std::isfinite(std::abs(step))) break;
      z -= step;
    }
  }
  return roots;
}

}  // namespace

std::array<Spinor, 3> majorana_roots(const PureState3& state, double tol) {
  const SymmetryCheck check = is_permutation_symmetric(state, tol);
  if (!check.symmetric)
    throw NotSymmetricError("state is not permutation symmetric within tolerance");

  const auto d = dicke_amplitudes(state.amplitudes());
  const double r3 = std::sqrt(3.0);
  std::vector<complexd> coeff{d[0], -r3 * d[1], r3 * d[2], -d[3]};
  double scale = 0.0;
  for (const auto& c : coeff) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw NumericalRootFailure("zero state has no Majorana roots");
  for (auto& c : coeff) c /= scale;

  // Each vanishing leading coefficient is a root at infinity -> spinor |1>;
  // vanishing trailing coefficients factor out exact roots at z = 0, which
  // keeps repeated-root cases away from the companion solver.
  int at_infinity = 0;
  while (!coeff.empty() && std::abs(coeff.front()) < 1e-12 && at_infinity < 3) {
    coeff.erase(coeff.begin());
    ++at_infinity;
  }
  int at_zero = 0;
  while (coeff.size() > 1 && std::abs(coeff.back()) < 1e-12) {
    coeff.pop_back();
    ++at_zero;
  }

  std::array<Spinor, 3> spinors{Spinor::one(), Spinor::one(), Spinor::one()};
  int idx = at_infinity;
  for (int k = 0; k < at_zero; ++k) spinors[idx++] = Spinor::zero();
  for (const complexd& z : poly_roots(coeff)) {
    if (idx >= 3) throw NumericalRootFailure("root count exceeded degree");
    spinors[idx++] = Spinor::normalized(1.0, z);
  }
  if (idx != 3) throw NumericalRootFailure("root count deficit");
  return spinors;
}

const char* to_string(SloccClass c) {
  switch (c) {
    case SloccClass::Separable: return "Separable";
    case SloccClass::TwoDistinct: return "TwoDistinct";
    case SloccClass::ThreeDistinct: return "ThreeDistinct";
    case SloccClass::NotSymmetric: return "NotSymmetric";
  }
  return "unknown";
}

SloccClass slocc_class(const PureState3& state, double tol) {
  if (!is_permutation_symmetric(state, tol).symmetric) return SloccClass::NotSymmetric;
  const auto roots = majorana_roots(state, tol);
  int distinct = 1;
  if (roots[0].fubini_study(roots[1]) > tol) ++distinct;
  const bool c_vs_a = roots[2].fubini_study(roots[0]) > tol;
  const bool c_vs_b = roots[2].fubini_study(roots[1]) > tol;
  if (distinct == 1) {
    if (c_vs_a || c_vs_b) ++distinct;
  } else {
    if (c_vs_a && c_vs_b) ++distinct;
  }
  switch (distinct) {
    case 1: return SloccClass::Separable;
    case 2: return SloccClass::TwoDistinct;
    default: return SloccClass::ThreeDistinct;
  }
}

PureState3 apply_local_unitary(const PureState3& state, const LocalUnitaryTriple& u) {
  for (const Mat2c* m : {&u.u_a, &u.u_b, &u.u_c}) {
    const double dev = (m->adjoint() * (*m) - Mat2c::Identity()).cwiseAbs().maxCoeff();
    if (dev > 1e-10) throw NonUnitaryError("local factor is not unitary within 1e-10");
  }
  Vec8c out = Vec8c::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        complexd acc = 0.0;
        for (int ap = 0; ap < 2; ++ap)
          for (int bp = 0; bp < 2; ++bp)
            for (int cp = 0; cp < 2; ++cp)
              acc += u.u_a(a, ap) * u.u_b(b, bp) * u.u_c(c, cp) *
                     state.amplitudes()[4 * ap + 2 * bp + cp];
        out[4 * a + 2 * b + c] = acc;
      }
  // factors within 1e-10 of unitary can drift the norm past the state
  // constructor's 1e-12; rescale the residue away
  return PureState3::normalized(out);
}

}  // namespace qsym3
