#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace cubedet {

// GMP-backed, expression templates off so values compose cleanly inside
// Eigen expressions and generic code.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses an optionally signed decimal integer of any length. Throws
/// Error(ErrorCode::Parse) on anything else, including empty input.
Integer parse_integer(std::string_view text);

inline std::string to_string(const Integer& v) { return v.str(); }
std::string to_string(const Rational& v);

/// Non-negative gcd; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

inline Integer cube(const Integer& v) { return v * v * v; }

}  // namespace cubedet

namespace Eigen {

template <>
struct NumTraits<cubedet::Integer> : GenericNumTraits<cubedet::Integer> {
  using Real = cubedet::Integer;
  using NonInteger = cubedet::Integer;
  using Literal = cubedet::Integer;
  using Nested = cubedet::Integer;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<cubedet::Rational> : GenericNumTraits<cubedet::Rational> {
  using Real = cubedet::Rational;
  using NonInteger = cubedet::Rational;
  using Literal = cubedet::Rational;
  using Nested = cubedet::Rational;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
