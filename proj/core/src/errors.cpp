#include "deepzero/errors.hpp"

#include <sstream>

namespace deepzero {

namespace {

std::string leak_message(double leak, double tolerance) {
  std::ostringstream os;
  os << "excessive tail leakage: " << leak << " exceeds tolerance " << tolerance;
  return os.str();
}

std::string quad_message(double value, double change, int levels) {
  std::ostringstream os;
  os << "quadrature not converged after " << levels
     << " refinement levels (last value " << value << ", relative change " << change << ")";
  return os.str();
}

}  // namespace

TailLeakageError::TailLeakageError(double leak, double tolerance)
    : Error(leak_message(leak, tolerance)), leak_(leak), tolerance_(tolerance) {}

QuadratureNotConverged::QuadratureNotConverged(double last_value, double last_change, int levels)
    : Error(quad_message(last_value, last_change, levels)),
      last_value_(last_value),
      last_change_(last_change),
      levels_(levels) {}

}  // namespace deepzero
