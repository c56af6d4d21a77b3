#include "cubedet/integer.hpp"

#include "cubedet/error.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <cctype>

namespace cubedet {

Integer parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size())
    throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorCode::Parse, "expected an integer, got '" + std::string(text) + "'");
  }
  // gmp rejects a leading '+'
  if (text[0] == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

std::string to_string(const Rational& v) {
  if (boost::multiprecision::denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroRowOrColumn: return "ZeroRowOrColumn";
    case ErrorCode::InvalidTransform: return "InvalidTransform";
    case ErrorCode::NonIntegralResult: return "NonIntegralResult";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::DegenerateRows: return "DegenerateRows";
    case ErrorCode::NotOnCurve: return "NotOnCurve";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::InflectionPoint: return "InflectionPoint";
    case ErrorCode::LineOnCurve: return "LineOnCurve";
    case ErrorCode::MissingVariable: return "MissingVariable";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::DegenerateCofactors: return "DegenerateCofactors";
    case ErrorCode::WorkBudgetExceeded: return "WorkBudgetExceeded";
  }
  return "Unknown";
}

}  // namespace cubedet
