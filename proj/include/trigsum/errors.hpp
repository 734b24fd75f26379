#pragma once

#include <stdexcept>
#include <string>

#include "trigsum/rational.hpp"

namespace trigsum {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a denominator or pole is hit exactly. Carries the reduced
// argument (or exponent over its order) and, for sums, the term index.
class SingularTerm : public std::domain_error {
 public:
  SingularTerm(const std::string& what, Rational at, long term = -1)
      : std::domain_error(what), at_(at), term_(term) {}
  Rational at() const { return at_; }
  long term() const { return term_; }

 private:
  Rational at_;
  long term_;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace trigsum
