#pragma once

#include "cubedet/integer.hpp"

#include <chrono>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cubedet {

/// Sparse multivariate polynomial with Integer coefficients.
///
/// Variables are kept as a sorted name list; binary operations first align
/// both operands to the union of their variables. Terms are stored in
/// graded-lex order, leading term first, with no zero coefficients, so two
/// polynomials over the same variables are equal iff their term vectors are.
class MPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using Term = std::pair<Exponents, Integer>;

  MPoly() = default;
  MPoly(const Integer& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  MPoly(T constant) : MPoly(Integer(constant)) {}  // NOLINT

  static MPoly variable(const std::string& name);

  /// Builds from raw terms over `variables` (need not be sorted); zero
  /// coefficients are dropped and like terms merged.
  static MPoly from_terms(std::vector<std::string> variables, std::vector<Term> terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;

  /// Re-expresses over `vars`, which must contain every variable in use.
  MPoly aligned_to(const std::vector<std::string>& vars) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b);

  MPoly pow(unsigned n) const;

  /// Values listed in variables() order.
  Integer eval(std::span<const Integer> values) const;
  /// Throws MissingVariable when a used variable has no value.
  Integer eval(const std::map<std::string, Integer>& assignment) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;
  std::vector<Term> terms_;

  void canonicalize();
};

/// Thrown by MPoly multiplication when a DeadlineScope on the calling
/// thread has expired.
class DeadlineExpired : public std::exception {
 public:
  const char* what() const noexcept override { return "polynomial work budget expired"; }
};

/// While alive, multiplications on this thread throw DeadlineExpired once the
/// deadline passes. Scopes nest; the innermost wins.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::steady_clock::time_point deadline);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::optional<std::chrono::steady_clock::time_point> previous_;
};

}  // namespace cubedet

namespace Eigen {

template <>
struct NumTraits<cubedet::MPoly> : GenericNumTraits<cubedet::MPoly> {
  using Real = cubedet::MPoly;
  using NonInteger = cubedet::MPoly;
  using Literal = cubedet::MPoly;
  using Nested = cubedet::MPoly;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 64,
    MulCost = 256
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
