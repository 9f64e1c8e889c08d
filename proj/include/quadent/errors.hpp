#pragma once

#include <stdexcept>
#include <string>

namespace quadent {

/// A coefficient set whose squared magnitudes do not sum to one (beyond the
/// accepted residual), or a state that cannot be normalized at all.
class NormalizationError : public std::invalid_argument {
 public:
  explicit NormalizationError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// Failure of a numerical procedure: insufficient grid coverage, an
/// unachievable truncation bound, a decomposition that produced no usable
/// singular values, or non-finite intermediates.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or incomplete state-spec document.
class SpecParseError : public std::runtime_error {
 public:
  explicit SpecParseError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace quadent
