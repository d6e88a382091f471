#pragma once

#include <stdexcept>
#include <string>

namespace deepzero {

// Base of everything the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (negative degree, |rho| != 1, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Truncated unitary lost more column mass than the caller allows.
class TailLeakageError : public Error {
 public:
  TailLeakageError(double leak, double tolerance);
  double leak() const noexcept { return leak_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double leak_;
  double tolerance_;
};

// Quadrature grid problems: underresolved, asymmetric, mismatched.
class GridError : public Error {
 public:
  using Error::Error;
};

// Panel refinement did not settle to the requested relative tolerance.
class QuadratureNotConverged : public Error {
 public:
  QuadratureNotConverged(double last_value, double last_change, int levels);
  double last_value() const noexcept { return last_value_; }
  double last_change() const noexcept { return last_change_; }
  int levels() const noexcept { return levels_; }

 private:
  double last_value_;
  double last_change_;
  int levels_;
};

class EigenNotConverged : public Error {
 public:
  using Error::Error;
};

}  // namespace deepzero
