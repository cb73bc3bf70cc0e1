#ifndef REFHOM_ERRORS_HPP
#define REFHOM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace refhom {

// Error taxonomy shared across the engine.  Validators are report-valued and
// do not throw; these exceptions mark structural violations detected while
// *building* derived objects, where continuing would silently corrupt output.

struct NotInSpan : std::runtime_error {
  explicit NotInSpan(const std::string& what) : std::runtime_error("NotInSpan: " + what) {}
};

struct CompositionNonzero : std::runtime_error {
  explicit CompositionNonzero(const std::string& what)
      : std::runtime_error("CompositionNonzero: " + what) {}
};

struct SquareZeroViolation : std::runtime_error {
  explicit SquareZeroViolation(const std::string& what)
      : std::runtime_error("SquareZeroViolation: " + what) {}
};

struct TwoNotInvertible : std::runtime_error {
  explicit TwoNotInvertible(const std::string& what)
      : std::runtime_error("TwoNotInvertible: " + what) {}
};

struct IllDefinedDifferential : std::runtime_error {
  explicit IllDefinedDifferential(const std::string& what)
      : std::runtime_error("IllDefinedDifferential: " + what) {}
};

struct IllDefinedInvolution : std::runtime_error {
  explicit IllDefinedInvolution(const std::string& what)
      : std::runtime_error("IllDefinedInvolution: " + what) {}
};

struct NotInvolution : std::runtime_error {
  explicit NotInvolution(const std::string& what)
      : std::runtime_error("NotInvolution: " + what) {}
};

struct NotAGroup : std::runtime_error {
  explicit NotAGroup(const std::string& what) : std::runtime_error("NotAGroup: " + what) {}
};

struct OrbitNotInversionClosed : std::runtime_error {
  explicit OrbitNotInversionClosed(const std::string& what)
      : std::runtime_error("OrbitNotInversionClosed: " + what) {}
};

struct ValidationFailed : std::runtime_error {
  explicit ValidationFailed(const std::string& what)
      : std::runtime_error("ValidationFailed: " + what) {}
};

}  // namespace refhom

#endif  // REFHOM_ERRORS_HPP
