#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace suptilt {

/// Arbitrary-precision integer used for every count in the library.
using ExactInt = boost::multiprecision::cpp_int;

inline std::string to_string(const ExactInt& value) { return value.str(); }

}  // namespace suptilt
