#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qsym3 {

using complexd = std::complex<double>;
using Vec8c = Eigen::Matrix<complexd, 8, 1>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat3d = Eigen::Matrix3d;
using Vec3d = Eigen::Vector3d;

/// Pauli matrix sigma_i, i in {1,2,3}: sigma_1 = X, sigma_2 = Y with -i in the
/// upper-right corner, sigma_3 = diag(1,-1). This convention is fixed
/// project-wide; the conditional-correlation sign checks depend on it.
const Mat2c& pauli(int i);

const Mat2c& identity2();

/// sigma . n for a unit vector n.
Mat2c pauli_dot(const Vec3d& n);

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
public:
  using Error::Error;
};

/// Symmetrized tensor sum vanished (contrived antipodal phase cancellation).
class DegenerateSymmetrization : public Error {
public:
  using Error::Error;
};

/// A canonical-family constructor was asked for a product (separable) point.
class ProductStateError : public Error {
public:
  using Error::Error;
};

class NotSymmetricError : public Error {
public:
  using Error::Error;
};

class NumericalRootFailure : public Error {
public:
  using Error::Error;
};

class NonUnitaryError : public Error {
public:
  using Error::Error;
};

/// Conditioning on an outcome of (numerically) zero probability.
class OutcomeImpossible : public Error {
public:
  using Error::Error;
};

class MuDegenerate : public Error {
public:
  using Error::Error;
};

class NuDegenerate : public Error {
public:
  using Error::Error;
};

class UnknownClass : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_ = 0;
};

/// Same-party operator product (e.g. "A1 A2"): not expressible in a (3,2,2)
/// correlation tensor of per-party degree one.
class DegreeError : public Error {
public:
  DegreeError(const std::string& message, std::size_t position)
      : Error(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_ = 0;
};

}  // namespace qsym3
