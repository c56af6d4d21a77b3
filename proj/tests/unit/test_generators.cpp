#include "cubedet/curve.hpp"
#include "cubedet/error.hpp"
#include "cubedet/generators.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

using namespace cubedet;
using namespace cubedet::testing;

namespace {

std::array<Integer, 5> xs(long long a, long long b, long long c, long long d, long long e) {
  return {a, b, c, d, e};
}

}  // namespace

TEST_CASE("quintuple values") {
  CHECK(quintuple(1, 1, 1, 0).x == xs(2, 0, 2, -2, -2));
  CHECK(quintuple(3, -1, 11, -9).x == xs(1, 63, -66, -78, 80));
  CHECK(quintuple(0, 0, 0, 0).x == xs(0, 0, 0, 0, 0));
  CHECK(quintuple(3, -1, 11, -9).params == std::array<Integer, 4>{3, -1, 11, -9});
}

TEST_CASE("quintuple sums vanish on random parameters") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> d(-1000, 1000);
  for (int n = 0; n < 10000; ++n) {
    const auto q = quintuple(d(rng), d(rng), d(rng), d(rng));
    Integer sum = 0, cubes = 0;
    for (const auto& v : q.x) {
      sum += v;
      cubes += cube(v);
    }
    REQUIRE(sum == 0);
    REQUIRE(cubes == 0);
  }
}

TEST_CASE("bordered matrix") {
  const Mat3 b = bordered_matrix(3, -1, 11, -9);
  CHECK(b == make_mat3({{63, 66, 1}, {78, 80, 1}, {1, 1, 0}}));
  CHECK(det3(b) == 1);
  CHECK(det3(cube_map(b)) == 1);

  const Mat3 b2 = bordered_matrix(1, 1, 1, 0);
  CHECK(b2 == make_mat3({{0, -2, 1}, {2, -2, 1}, {1, 1, 0}}));
  CHECK(det3(b2) == 2);
  CHECK(det3(cube_map(b2)) == 8);

  const Mat3 b0 = bordered_matrix(0, 0, 0, 0);
  CHECK(b0 == make_mat3({{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}));
  CHECK(det3(b0) == 0);
  CHECK(det3(cube_map(b0)) == 0);

  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> d(-300, 300);
  for (int n = 0; n < 2000; ++n) {
    const Integer p = d(rng), q = d(rng), r = d(rng), s = d(rng);
    const Integer x1 = quintuple(p, q, r, s).x[0];
    const Mat3 m = bordered_matrix(p, q, r, s);
    REQUIRE(det3(m) == x1);
    REQUIRE(det3(cube_map(m)) == cube(x1));
  }
}

TEST_CASE("matrix C(t)") {
  CHECK(matrix_c(0) == make_mat3({{63, 66, 1}, {78, 80, 1}, {1, 1, 0}}));
  const Mat3 c1 = matrix_c(1);
  CHECK(c1(0, 0) == 9 * 17 * 2887);
  CHECK(c1(0, 1) == 6 * 19 * 25 * 155);
  CHECK(c1(0, 0) == 441711);
  CHECK(c1(0, 1) == 441750);
  CHECK(c1(0, 2) == 1);
  for (int t = -50; t <= 50; ++t) {
    const auto r = check_property(matrix_c(t));
    REQUIRE(r.det == 1);
    REQUIRE(r.cube_det == 1);
  }
}

TEST_CASE("matrix C(t) matches its factored entries") {
  for (int ti = -30; ti <= 30; ++ti) {
    const Integer t = ti;
    const Mat3 c = matrix_c(t);
    REQUIRE(c(0, 0) == 9 * (16 * t + 1) * (2592 * t * t + 288 * t + 7));
    REQUIRE(c(0, 1) == 6 * (18 * t + 1) * (24 * t + 1) * (144 * t + 11));
    REQUIRE(c(1, 0) == 6 * (12 * t + 1) * (5184 * t * t + 540 * t + 13));
    REQUIRE(c(1, 1) == 4 * (72 * t + 5) * (1296 * t * t + 153 * t + 4));
  }
}

TEST_CASE("matrix A(t) closed form") {
  CHECK(matrix_a_closed(0) == a1());
  CHECK(matrix_a_closed(1) == a2());
  const auto r = check_property(matrix_a_closed(2));
  CHECK(r.det == 1);
  CHECK(r.cube_det == 1);
  for (int t = -100; t <= 100; ++t) {
    const Mat3 a = matrix_a_closed(t);
    REQUIRE(a.row(2) == make_mat3({{2, 3, 0}, {0, 0, 0}, {0, 0, 0}}).row(0));
    REQUIRE(a.col(2) == make_mat3({{2, 0, 0}, {3, 0, 0}, {0, 0, 0}}).col(0));
  }
}

TEST_CASE("matrix A(t) via the conjugation chain") {
  CHECK(matrix_a_chain(0) == a1());
  CHECK(matrix_a_chain(1) == a2());
  for (int t = -20; t <= 20; ++t) REQUIRE(matrix_a_chain(t) == matrix_a_closed(t));
  // The last step only lands on A(t) when applied to the third
  // intermediate, not to C itself.
  const Mat3 literal = apply_transform(matrix_c(0), ConjugateScale{3, 2, Rational(2)});
  CHECK(literal == make_mat3({{63, 33, 1}, {78, 40, 1}, {2, 1, 0}}));
  CHECK(literal != a1());
}

TEST_CASE("phi special values") {
  CHECK(phi_eval(1, 1, 1, 1, 1, 1) == 0);

  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> d(-20, 20);
  for (int n = 0; n < 200; ++n) {
    const Integer a1v = d(rng), a2 = d(rng), a3 = d(rng), b2 = d(rng), b3 = d(rng);
    const Integer only_first_term = -(a2 * b3 + a3 * b2) * pow(a1v, 8) * a2 * a2 * a3 * a3 *
                                    pow(b2, 4) * pow(b3, 4);
    REQUIRE(phi_eval(a1v, a2, a3, 0, b2, b3) == only_first_term);
  }

  const auto raw = theorem2_matrix({2, -3, 3, 3, -2, 4}, false);
  const auto reduced = theorem2_matrix({2, -3, 3, 3, -2, 4}, true);
  CHECK(phi_eval(2, -3, 3, 3, -2, 4) == reduced.row_gcd * -57797);
  CHECK(raw.matrix(0, 0) == phi_eval(2, -3, 3, 3, -2, 4));
}

TEST_CASE("phi term list agrees with the tangent construction") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<int> d(-12, 12);
  int checked = 0;
  while (checked < 100) {
    const Theorem2Params x{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    if (theorem2_k(x) == 0) continue;
    const Triple row2{x.p, x.q, x.r}, row3{x.u, x.v, x.w};
    const ProjPoint third = tangent_third_point(cubic_from_rows(row2, row3), ProjPoint::from(row2));
    const auto triple = phi_triple_of(x.p, x.q, x.r, x.u, x.v, x.w);
    REQUIRE(ProjPoint::from(triple[0], triple[1], triple[2]) == third);
    ++checked;
  }
}

TEST_CASE("theorem-2 matrix") {
  SUBCASE("normalized example") {
    const auto r = theorem2_matrix({2, -3, 3, 3, -2, 4}, true);
    CHECK(r.matrix == make_mat3({{-57797, -109147, -22789}, {2, -3, 3}, {3, -2, 4}}));
    CHECK(r.k == 123690);
    const auto p = check_property(r.matrix);
    CHECK(p.det == 123690);
    CHECK(p.cube_det == cube(Integer(123690)));
    CHECK(p.holds);
  }
  SUBCASE("raw example") {
    const auto r = theorem2_matrix({2, -3, 3, 3, -2, 4}, false);
    CHECK(r.k == Integer("247426507440"));
    CHECK(r.row_gcd == 1);
    CHECK(Integer(123690) * 2000376 == r.k);
    CHECK(gcd(gcd(r.matrix(0, 0), r.matrix(0, 1)), r.matrix(0, 2)) == 2000376);
    CHECK(det3(r.matrix) == r.k);
  }
  SUBCASE("degenerate parameters") {
    for (const Theorem2Params& bad :
         {Theorem2Params{1, 1, 1, 1, 1, 1}, Theorem2Params{1, 2, 3, 2, 4, 6},
          Theorem2Params{0, 1, 2, 3, 4, 5}, Theorem2Params{0, 0, 0, 1, 2, 3}}) {
      try {
        theorem2_matrix(bad, false);
        FAIL("expected DegenerateParams");
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateParams);
      }
    }
  }
}

TEST_CASE("theorem-2 determinant identities on random parameters") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<int> d(-10, 10);
  int checked = 0;
  while (checked < 300) {
    const Theorem2Params x{d(rng), d(rng), d(rng), d(rng), d(rng), d(rng)};
    if (theorem2_k(x) == 0) continue;
    for (bool normalize : {false, true}) {
      const auto r = theorem2_matrix(x, normalize);
      const auto p = check_property(r.matrix);
      REQUIRE(p.det == r.k);
      REQUIRE(p.cube_det == cube(r.k));
    }
    ++checked;
  }
}
