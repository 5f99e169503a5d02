#pragma once

#include <stdexcept>
#include <string>

namespace lnf {

// Composite interface coefficients have a vanishing denominator.
struct SingularGeometryError : std::runtime_error {
  explicit SingularGeometryError(const std::string& msg) : std::runtime_error(msg) {}
};

// Im G(x,x) <= 0, so no positive normalization exists.
struct DegenerateLdosError : std::runtime_error {
  explicit DegenerateLdosError(const std::string& msg) : std::runtime_error(msg) {}
};

// The quadrature oracle failed to stabilize.
struct ConvergenceError : std::runtime_error {
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace lnf
