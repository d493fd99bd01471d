#ifndef PARAHIGGS_ERRORS_HPP
#define PARAHIGGS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parahiggs {

// Base for everything thrown by this library. what() is always of the
// form "<Kind>: <detail>" so front ends can print it directly.
class Error : public std::runtime_error {
 public:
  Error(const std::string& kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(kind) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

// Rejected input: weights out of range, unsupported degrees, weight
// systems the closed-form classification does not cover.
class ValidationError : public Error {
  using Error::Error;
};

// A self-check tripped: the two evaluation routes disagree, or an exact
// cancellation that must happen did not. Signals a defect, not bad input.
class InternalCheckError : public Error {
  using Error::Error;
};

struct InvalidWeights : ValidationError {
  explicit InvalidWeights(const std::string& d) : ValidationError("InvalidWeights", d) {}
};

struct UnsupportedDelta : ValidationError {
  explicit UnsupportedDelta(const std::string& d) : ValidationError("UnsupportedDelta", d) {}
};

struct NonGenericWeights : ValidationError {
  explicit NonGenericWeights(const std::string& d) : ValidationError("NonGenericWeights", d) {}
};

struct UnclassifiableWeights : ValidationError {
  explicit UnclassifiableWeights(const std::string& d)
      : ValidationError("UnclassifiableWeights", d) {}
};

struct UnsupportedPunctures : ValidationError {
  explicit UnsupportedPunctures(const std::string& d)
      : ValidationError("UnsupportedPunctures", d) {}
};

struct BadInput : ValidationError {
  explicit BadInput(const std::string& d) : ValidationError("BadInput", d) {}
};

struct NonUnitLeadingTerm : InternalCheckError {
  explicit NonUnitLeadingTerm(const std::string& d)
      : InternalCheckError("NonUnitLeadingTerm", d) {}
};

struct NonPolynomialResult : InternalCheckError {
  explicit NonPolynomialResult(const std::string& d)
      : InternalCheckError("NonPolynomialResult", d) {}
};

struct MethodMismatch : InternalCheckError {
  explicit MethodMismatch(const std::string& d) : InternalCheckError("MethodMismatch", d) {}
};

}  // namespace parahiggs

#endif
