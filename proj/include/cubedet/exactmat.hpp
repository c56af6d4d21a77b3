#pragma once

#include "cubedet/integer.hpp"

#include <Eigen/Core>

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubedet {

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

using Mat3 = Matrix3<Integer>;

/// Cofactor expansion along the first row. Works for any ring scalar
/// (machine integers, Integer, MPoly); exact whenever the scalar is.
template <typename Derived>
typename Derived::Scalar det3(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const S c0 = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  const S c1 = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  const S c2 = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  return m(0, 0) * c0 + m(0, 1) * c1 + m(0, 2) * c2;
}

/// Entrywise (Hadamard) cube, not the matrix power.
template <typename Derived>
Matrix3<typename Derived::Scalar> cube_map(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  return m.unaryExpr([](const S& x) -> S { return x * x * x; });
}

struct PropertyReport {
  Integer det;
  Integer cube_det;
  bool holds = false;     // cube_det == det^3
  bool has_zero = false;  // some entry is 0
  bool has_unit = false;  // some entry is +1 or -1
};

PropertyReport check_property(const Mat3& m);

enum class Side { Row, Col };

struct ReductionStep {
  Side side;
  int index;  // 0-based
};

/// Rows 0..2, then columns 0..2.
std::vector<ReductionStep> default_reduction_order();

struct RowColFactorization {
  Mat3 reduced;
  std::array<Integer, 3> row_gcds{1, 1, 1};
  std::array<Integer, 3> col_gcds{1, 1, 1};
  Integer total_factor{1};
};

/// Divides each listed row/column by the (positive) gcd of its entries, in
/// the given order. Lines not listed keep factor 1. Throws ZeroRowOrColumn if
/// a listed line is identically zero.
RowColFactorization normalize_gcd(const Mat3& m,
                                  std::span<const ReductionStep> order);
RowColFactorization normalize_gcd(const Mat3& m);

/// Row-major lexicographic comparison.
template <typename Scalar>
bool lex_less(const Matrix3<Scalar>& a, const Matrix3<Scalar>& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (a(i, j) < b(i, j)) return true;
      if (b(i, j) < a(i, j)) return false;
    }
  return false;
}

/// Matrix text format: three rows separated by ';', entries separated by
/// whitespace and/or ','. Throws Error(Parse) on anything else.
Mat3 parse_matrix(std::string_view text);
std::string format_matrix(const Mat3& m);

/// Parses a triple "a b c" or "a,b,c".
std::array<Integer, 3> parse_triple(std::string_view text);

/// Splits on whitespace and commas, parsing each token as an Integer.
std::vector<Integer> parse_integer_list(std::string_view text);

template <typename Scalar, typename T>
Matrix3<Scalar> make_matrix(std::initializer_list<std::initializer_list<T>> rows) {
  Matrix3<Scalar> m;
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const auto& v : row) m(i, j++) = Scalar(v);
    ++i;
  }
  return m;
}

inline Mat3 make_mat3(std::initializer_list<std::initializer_list<long long>> rows) {
  return make_matrix<Integer>(rows);
}

}  // namespace cubedet
