#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lefschetz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands disagree on a shape that must match (column counts, moduli).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain.
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

/// A Hilbert function stayed positive past the configured degree cap.
class DegreeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// No closed form is available for the requested parameters.
class UnsupportedParameters : public Error {
 public:
  using Error::Error;
};

/// A closed form was evaluated outside the degree range where it holds.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

/// Where a number came from.
enum class Provenance {
  Oracle,      // randomized exact linear algebra over F_p
  Reduction,   // fat-point reduction to a non-special standard form
  ClosedForm,  // a formula
};

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Oracle:
      return "oracle";
    case Provenance::Reduction:
      return "reduction";
    case Provenance::ClosedForm:
      return "closed-form";
  }
  return "unknown";
}

/// C(n, 2) with the convention that it vanishes for n < 2.
constexpr std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// C(n, 2) as the polynomial n(n-1)/2, also for negative n.
constexpr std::int64_t choose2_poly(std::int64_t n) { return n * (n - 1) / 2; }

}  // namespace lefschetz
