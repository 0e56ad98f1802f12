#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace kbranch {

// Multiplicities and tableau counts. Arbitrary precision, never negative in practice.
using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

// Binomial coefficient; zero when k < 0 or k > n, and zero for negative n.
Count binomial(long n, long k);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input parsed but violates a membership or precondition check.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Stable branching requested outside the range where the LR-sum formula holds.
class StableRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace kbranch
