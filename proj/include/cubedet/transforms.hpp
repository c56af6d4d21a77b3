#pragma once

#include "cubedet/exactmat.hpp"

#include <array>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cubedet {

// Property-preserving transformations of a 3x3 matrix. Indices in the
// specs below are 1-based, matching the CLI encoding.

struct Transpose {};

/// Negate two distinct rows (left multiplication) or two columns (right).
struct NegatePair {
  Side side = Side::Row;
  int i1 = 1;
  int i2 = 2;
};

struct LineSwap {
  Side side = Side::Row;
  int i1 = 1;
  int i2 = 2;
};

/// Two swaps applied in sequence: rows/rows, cols/cols, or one of each.
struct SwapPair {
  LineSwap first;
  LineSwap second;
};

/// Row i times alpha, then column j times 1/alpha.
struct ConjugateScale {
  int i = 1;
  int j = 1;
  Rational alpha{1};
};

using TransformSpec = std::variant<Transpose, NegatePair, SwapPair, ConjugateScale>;

/// Throws InvalidTransform when indices are out of range, a pair repeats an
/// index, or alpha is zero.
void validate(const TransformSpec& t);

/// Applies t to m. ConjugateScale throws NonIntegralResult when an entry of
/// the scaled matrix is not an integer.
Mat3 apply_transform(const Mat3& m, const TransformSpec& t);

/// Text encoding: "transpose", "negrows i1 i2", "negcols i1 i2",
/// "swap rows i1 i2 cols j1 j2", "conj i j num/den".
TransformSpec parse_transform(std::string_view text);
std::string format_transform(const TransformSpec& t);

/// One element of the finite group generated by Transpose, NegatePair and
/// SwapPair, acting as
///   N(i,j) = row_sign[i] * col_sign[j] * M(row_perm[i], col_perm[j])
/// followed by a transpose when `transpose` is set. Permutation parities
/// agree and each sign vector has product +1.
struct GroupElement {
  bool transpose = false;
  std::array<int, 3> row_perm{0, 1, 2};
  std::array<int, 3> col_perm{0, 1, 2};
  std::array<int, 3> row_sign{1, 1, 1};
  std::array<int, 3> col_sign{1, 1, 1};
};

/// All 576 elements (2 transposes x 18 permutation pairs x 16 sign pairs).
const std::vector<GroupElement>& finite_group();

/// Elements that keep row 1 in place, without transpose. Their action on
/// rows 2,3 only depends on rows 2,3.
const std::vector<GroupElement>& row1_stabilizer();

template <typename Scalar>
Matrix3<Scalar> apply_group_element(const GroupElement& g, const Matrix3<Scalar>& m) {
  Matrix3<Scalar> n;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Scalar v = m(g.row_perm[i], g.col_perm[j]);
      if (g.row_sign[i] * g.col_sign[j] < 0) v = -v;
      if (g.transpose)
        n(j, i) = v;
      else
        n(i, j) = v;
    }
  return n;
}

/// Lexicographically smallest member of the orbit under finite_group().
template <typename Scalar>
Matrix3<Scalar> orbit_canonical_of(const Matrix3<Scalar>& m) {
  Matrix3<Scalar> best = m;
  for (const auto& g : finite_group()) {
    Matrix3<Scalar> candidate = apply_group_element(g, m);
    if (lex_less(candidate, best)) best = std::move(candidate);
  }
  return best;
}

Mat3 orbit_canonical(const Mat3& m);

/// Distinct orbit members, sorted lexicographically.
std::vector<Mat3> orbit(const Mat3& m);

}  // namespace cubedet
