#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace purelie {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IndexSet = std::vector<std::size_t>;

// Bad input: malformed type string, non-dominant weight, index out of range.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured enumeration cap was hit. Never converted into a partial answer.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Worker count for data-parallel loops; PURELIE_THREADS overrides.
unsigned worker_count();

}  // namespace purelie
