#include "cubedet/generators.hpp"

#include "cubedet/error.hpp"

namespace cubedet {

const std::array<PhiTerm, 28>& phi_terms() {
  static const std::array<PhiTerm, 28> terms{{
      {1, {1, 5, 7, 7, 2, 0}},
      {1, {1, 7, 5, 7, 0, 2}},
      {1, {2, 4, 7, 6, 3, 0}},
      {1, {2, 5, 6, 6, 2, 1}},
      {1, {2, 6, 5, 6, 1, 2}},
      {1, {2, 7, 4, 6, 0, 3}},
      {2, {3, 4, 6, 5, 3, 1}},
      {2, {3, 5, 5, 5, 2, 2}},
      {2, {3, 6, 4, 5, 1, 3}},
      {-1, {4, 2, 7, 4, 5, 0}},
      {1, {4, 3, 6, 4, 4, 1}},
      {1, {4, 4, 5, 4, 3, 2}},
      {1, {4, 5, 4, 4, 2, 3}},
      {1, {4, 6, 3, 4, 1, 4}},
      {-1, {4, 7, 2, 4, 0, 5}},
      {-2, {5, 4, 4, 3, 3, 3}},
      {-1, {6, 1, 6, 2, 6, 1}},
      {-1, {6, 2, 5, 2, 5, 2}},
      {-1, {6, 3, 4, 2, 4, 3}},
      {-1, {6, 4, 3, 2, 3, 4}},
      {-1, {6, 5, 2, 2, 2, 5}},
      {-1, {6, 6, 1, 2, 1, 6}},
      {-1, {7, 0, 6, 1, 7, 1}},
      {-1, {7, 1, 5, 1, 6, 2}},
      {-1, {7, 5, 1, 1, 2, 6}},
      {-1, {7, 6, 0, 1, 1, 7}},
      {-1, {8, 2, 3, 0, 5, 4}},
      {-1, {8, 3, 2, 0, 4, 5}},
  }};
  return terms;
}

Quintuple quintuple(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  return {quintuple_values(p, q, r, s), {p, q, r, s}};
}

Mat3 bordered_matrix(const Integer& p, const Integer& q, const Integer& r, const Integer& s) {
  return bordered_from(quintuple_values(p, q, r, s));
}

Mat3 matrix_c(const Integer& t) { return matrix_c_of(t); }

Mat3 matrix_a_closed(const Integer& t) { return matrix_a_closed_of(t); }

std::vector<ConjugateScale> theorem1_chain() {
  return {
      {1, 3, Rational(1, 3)},
      {2, 3, Rational(1, 2)},
      {3, 1, Rational(3)},
      // Applied to the third matrix of the chain, not to C itself.
      {3, 2, Rational(2)},
  };
}

Mat3 matrix_a_chain(const Integer& t) {
  Mat3 m = matrix_c(t);
  for (const auto& step : theorem1_chain()) m = apply_transform(m, step);
  return m;
}

Integer phi_eval(const Integer& a1, const Integer& a2, const Integer& a3, const Integer& b1,
                 const Integer& b2, const Integer& b3) {
  return phi_of(a1, a2, a3, b1, b2, b3);
}

Integer theorem2_k(const Theorem2Params& x) {
  return theorem2_k_of(x.p, x.q, x.r, x.u, x.v, x.w);
}

Theorem2Result theorem2_matrix(const Theorem2Params& x, bool normalize) {
  Theorem2Result out;
  out.k = theorem2_k(x);
  if (out.k == 0)
    throw Error(ErrorCode::DegenerateParams, "parameters give k = 0");
  out.matrix = theorem2_matrix_of(x.p, x.q, x.r, x.u, x.v, x.w);
  if (out.matrix(0, 0) == 0 && out.matrix(0, 1) == 0 && out.matrix(0, 2) == 0)
    throw Error(ErrorCode::DegenerateParams, "phi row vanishes");
  if (normalize) {
    const std::array<ReductionStep, 1> first_row{{{Side::Row, 0}}};
    const auto f = normalize_gcd(out.matrix, first_row);
    out.matrix = f.reduced;
    out.row_gcd = f.total_factor;
    out.k /= f.total_factor;
  }
  return out;
}

}  // namespace cubedet
