#pragma once

#include "cubedet/exactmat.hpp"
#include "cubedet/transforms.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace cubedet {

/// Exponentiation by squaring for any ring scalar.
template <typename S>
S power(const S& base, unsigned e) {
  S result(1);
  S b = base;
  while (e) {
    if (e & 1u) result = result * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Five-term family with zero sum and zero sum of cubes, and the bordered
// matrix built from it.

template <typename S>
std::array<S, 5> quintuple_values(const S& p, const S& q, const S& r, const S& s) {
  const S r2 = r * r;
  const S p2 = p * p;
  const S q2 = q * q;
  const S pq = p * q;
  const S rs = r + s;
  return {
      pq * (r2 - s * s) + q2 * r2,
      -(p2 * s * rs - q2 * r * s),
      p2 * r * rs + pq * r2 - q2 * r * s,
      -(p2 * r * rs + pq * (r2 - s * s)),
      p2 * s * rs - pq * r2 - q2 * r2,
  };
}

/// [[x2, -x3, 1], [-x4, x5, 1], [1, 1, 0]]; its determinant is x1 and the
/// determinant of its entrywise cube is x1^3.
template <typename S>
Matrix3<S> bordered_from(const std::array<S, 5>& x) {
  Matrix3<S> b;
  b << x[1], -x[2], S(1),
       -x[3], x[4], S(1),
       S(1), S(1), S(0);
  return b;
}

/// Bordered matrix at p = 36t+3, q = -1, r = 144t+11, s = -144t-9, where
/// x1 == 1 identically.
template <typename S>
Matrix3<S> matrix_c_of(const S& t) {
  return bordered_from(quintuple_values<S>(S(36) * t + S(3), S(-1), S(144) * t + S(11),
                                           S(-144) * t - S(9)));
}

/// Closed-form unimodular family; t = 0 gives [[7,11,2],[13,20,3],[2,3,0]].
template <typename S>
Matrix3<S> matrix_a_closed_of(const S& t) {
  const S t2 = t * t;
  Matrix3<S> a;
  a << (S(16) * t + S(1)) * (S(2592) * t2 + S(288) * t + S(7)),
       (S(18) * t + S(1)) * (S(24) * t + S(1)) * (S(144) * t + S(11)),
       S(2),
       (S(12) * t + S(1)) * (S(5184) * t2 + S(540) * t + S(13)),
       (S(72) * t + S(5)) * (S(1296) * t2 + S(153) * t + S(4)),
       S(3),
       S(2), S(3), S(0);
  return a;
}

// ---------------------------------------------------------------------------
// Tangent-point family with det(A) = k, det(A^(3)) = k^3.

struct PhiTerm {
  std::int32_t coefficient;
  std::array<std::uint8_t, 6> exponents;  // a1 a2 a3 b1 b2 b3
};

/// The 28 monomials of phi(a1, a2, a3, b1, b2, b3) in expanded form.
const std::array<PhiTerm, 28>& phi_terms();

template <typename S>
S phi_of(const S& a1, const S& a2, const S& a3, const S& b1, const S& b2, const S& b3) {
  const std::array<const S*, 6> args{&a1, &a2, &a3, &b1, &b2, &b3};
  // powers[k][e] = args[k]^e; max exponent in phi is 8
  std::array<std::array<S, 9>, 6> powers;
  for (std::size_t k = 0; k < 6; ++k) {
    powers[k][0] = S(1);
    for (std::size_t e = 1; e < 9; ++e) powers[k][e] = powers[k][e - 1] * *args[k];
  }
  S sum(0);
  for (const auto& term : phi_terms()) {
    S mono(term.coefficient);
    for (std::size_t k = 0; k < 6; ++k)
      if (term.exponents[k]) mono = mono * powers[k][term.exponents[k]];
    sum = sum + mono;
  }
  return sum;
}

/// k = pqr(pv-qu)(pw-ru)(qw-rv)(p²v²+pquv+q²u²)(p²w²+pruw+r²u²)
///       (q²w²+qrvw+r²v²)(pqw+prv+qru)
template <typename S>
S theorem2_k_of(const S& p, const S& q, const S& r, const S& u, const S& v, const S& w) {
  return p * q * r * (p * v - q * u) * (p * w - r * u) * (q * w - r * v) *
         (p * p * v * v + p * q * u * v + q * q * u * u) *
         (p * p * w * w + p * r * u * w + r * r * u * u) *
         (q * q * w * w + q * r * v * w + r * r * v * v) * (p * q * w + p * r * v + q * r * u);
}

template <typename S>
Vector3<S> phi_triple_of(const S& p, const S& q, const S& r, const S& u, const S& v, const S& w) {
  return Vector3<S>(phi_of(p, q, r, u, v, w), phi_of(q, r, p, v, w, u), phi_of(r, p, q, w, u, v));
}

template <typename S>
Matrix3<S> theorem2_matrix_of(const S& p, const S& q, const S& r, const S& u, const S& v,
                              const S& w) {
  Matrix3<S> a;
  a.row(0) = phi_triple_of(p, q, r, u, v, w).transpose();
  a.row(1) << p, q, r;
  a.row(2) << u, v, w;
  return a;
}

// ---------------------------------------------------------------------------
// Integer entry points.

struct Quintuple {
  std::array<Integer, 5> x;
  std::array<Integer, 4> params;  // p, q, r, s
};

Quintuple quintuple(const Integer& p, const Integer& q, const Integer& r, const Integer& s);
Mat3 bordered_matrix(const Integer& p, const Integer& q, const Integer& r, const Integer& s);
Mat3 matrix_c(const Integer& t);
Mat3 matrix_a_closed(const Integer& t);

/// The four scaling conjugations taking matrix_c(t) to matrix_a_closed(t),
/// each applied to the previous result.
std::vector<ConjugateScale> theorem1_chain();

/// matrix_c(t) pushed through theorem1_chain(). Propagates NonIntegralResult.
Mat3 matrix_a_chain(const Integer& t);

Integer phi_eval(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& b1,
                 const Integer& b2, const Integer& b3);

struct Theorem2Params {
  Integer p, q, r, u, v, w;
};

Integer theorem2_k(const Theorem2Params& params);

struct Theorem2Result {
  Mat3 matrix;
  Integer k;           // det(matrix)
  Integer row_gcd{1};  // factor removed from row 1 (1 when not normalizing)
};

/// Throws DegenerateParams when k == 0 or the phi row vanishes. With
/// `normalize`, row 1 is divided by its gcd and k by the same factor.
Theorem2Result theorem2_matrix(const Theorem2Params& params, bool normalize);

}  // namespace cubedet
