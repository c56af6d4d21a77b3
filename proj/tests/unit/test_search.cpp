#include "cubedet/error.hpp"
#include "cubedet/generators.hpp"
#include "cubedet/search.hpp"
#include "cubedet/transforms.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <set>
#include <tuple>

using namespace cubedet;
using namespace cubedet::testing;

namespace {

using Key = std::vector<std::string>;

Key key_of(const Mat3& m) {
  Key k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) k.push_back(m(i, j).str());
  return k;
}

std::set<Key> canonical_set(const std::vector<SearchHit>& hits) {
  std::set<Key> out;
  for (const auto& h : hits) out.insert(key_of(h.canonical));
  return out;
}

bool has_row1(const std::vector<SearchHit>& hits, Triple row) {
  for (const auto& h : hits)
    if (h.matrix(0, 0) == row[0] && h.matrix(0, 1) == row[1] && h.matrix(0, 2) == row[2])
      return true;
  return false;
}

SearchConfig two_rows(Triple r2, Triple r3, long long k, std::int64_t bound) {
  SearchConfig c;
  c.mode = SearchMode::TwoRows;
  c.bound = bound;
  c.k_target = KRange::exactly(k);
  c.row2 = r2;
  c.row3 = r3;
  return c;
}

using Quad = std::tuple<long long, long long, long long, long long>;

std::vector<Quad> bordered_loops(long long bound, long long k) {
  std::vector<Quad> out;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c)
        for (long long d = -bound; d <= bound; ++d)
          if (-a + b + c - d == k && -a * a * a + b * b * b + c * c * c - d * d * d == k * k * k)
            out.emplace_back(a, b, c, d);
  return out;
}

std::vector<Quad> quads(const std::vector<SearchHit>& hits) {
  std::vector<Quad> out;
  for (const auto& h : hits) {
    const Mat3& m = h.matrix;
    REQUIRE(m(0, 2) == 1);
    REQUIRE(m(1, 2) == 1);
    REQUIRE(m(2, 0) == 1);
    REQUIRE(m(2, 1) == 1);
    REQUIRE(m(2, 2) == 0);
    out.emplace_back(m(0, 0).convert_to<long long>(), m(0, 1).convert_to<long long>(),
                     m(1, 0).convert_to<long long>(), m(1, 1).convert_to<long long>());
  }
  return out;
}

SearchConfig rows_enum(std::int64_t row_bound, std::int64_t bound) {
  SearchConfig c;
  c.mode = SearchMode::RowsEnumerate;
  c.row_bound = row_bound;
  c.bound = bound;
  return c;
}

SearchConfig brute(std::int64_t bound) {
  SearchConfig c;
  c.mode = SearchMode::Brute;
  c.bound = bound;
  return c;
}

}  // namespace

TEST_CASE("two rows given recovers planted matrices") {
  const auto a = search_two_rows_given({13, 20, 3}, {2, 3, 0}, two_rows({13, 20, 3}, {2, 3, 0}, 1, 15));
  CHECK(has_row1(a, {7, 11, 2}));
  const auto m = search_two_rows_given({5, 3, 11}, {3, 2, 7}, two_rows({5, 3, 11}, {3, 2, 7}, 7, 12));
  CHECK(has_row1(m, {-5, 4, 10}));
  for (const auto& h : m) {
    CHECK(h.k == 7);
    CHECK(check_property(h.matrix).holds);
  }
  CHECK_THROWS_AS(search(two_rows({1, 0, 0}, {2, 0, 0}, 1, 3)), Error);
  try {
    search(two_rows({1, 0, 0}, {2, 0, 0}, 1, 3));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateCofactors);
  }
}

TEST_CASE("two rows given matches a three-loop oracle") {
  std::mt19937_64 rng(103);
  std::uniform_int_distribution<int> d(-3, 3);
  const std::int64_t bound = 6;
  std::vector<std::pair<Triple, Triple>> pairs = {
      {{1, 0, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}}, {{1, 2, 0}, {2, 4, 1}}, {{0, 0, 2}, {1, 0, 0}}};
  while (pairs.size() < 40) pairs.push_back({{d(rng), d(rng), d(rng)}, {d(rng), d(rng), d(rng)}});
  for (const auto& [r2, r3] : pairs) {
    const Triple cof{r2[1] * r3[2] - r2[2] * r3[1], r2[2] * r3[0] - r2[0] * r3[2],
                     r2[0] * r3[1] - r2[1] * r3[0]};
    if (cof == Triple{0, 0, 0}) continue;
    for (long long k : {1LL, -1LL, 2LL, 7LL}) {
      std::set<Key> expected;
      for (long long x = -bound; x <= bound; ++x)
        for (long long y = -bound; y <= bound; ++y)
          for (long long z = -bound; z <= bound; ++z) {
            Mat3 m;
            m << x, y, z, r2[0], r2[1], r2[2], r3[0], r3[1], r3[2];
            if (leibniz_det(m) == k && leibniz_det(cube_map(m)) == cube(Integer(k)))
              expected.insert(key_of(m));
          }
      std::set<Key> got;
      for (const auto& h : search_two_rows_given(r2, r3, two_rows(r2, r3, k, bound)))
        REQUIRE(got.insert(key_of(h.matrix)).second);
      REQUIRE(got == expected);
    }
  }
}

TEST_CASE("two rows given in the wide arithmetic path") {
  // Rows 1, 2 of C(t) for large t as the fixed rows, with its row (1,1,0)
  // moved to the front (a cyclic shift, so det stays 1).
  for (long long t : {10000LL, -123456LL, 98765432LL}) {
    const Mat3 c = matrix_c(t);
    const Triple r2{c(0, 0), c(0, 1), c(0, 2)};
    const Triple r3{c(1, 0), c(1, 1), c(1, 2)};
    const auto hits = search_two_rows_given(r2, r3, two_rows(r2, r3, 1, 1));
    CHECK(has_row1(hits, {1, 1, 0}));
    for (const auto& h : hits) CHECK(check_property(h.matrix).holds);
  }
  const auto raw = theorem2_matrix({2, -3, 3, 3, -2, 4}, false);
  CHECK(raw.k == Integer("247426507440"));
  const Triple r1{raw.matrix(0, 0), raw.matrix(0, 1), raw.matrix(0, 2)};
  const Triple r3{raw.matrix(2, 0), raw.matrix(2, 1), raw.matrix(2, 2)};
  // Swapping rows 1 and 2 negates k.
  const auto hits = search_two_rows_given(r1, r3, two_rows(r1, r3, -247426507440LL, 4));
  CHECK(has_row1(hits, {2, -3, 3}));
}

TEST_CASE("bordered search") {
  const auto hits80 = search_bordered(80, 1);
  bool found = false;
  for (const auto& q : quads(hits80)) found |= q == Quad{63, 66, 78, 80};
  CHECK(found);

  const auto zero = quads(search_bordered(2, 0));
  for (long long a = -2; a <= 2; ++a)
    for (long long c = -2; c <= 2; ++c)
      CHECK(std::find(zero.begin(), zero.end(), Quad{a, a, c, c}) != zero.end());

  for (long long k : {1LL, 0LL, -3LL, 4LL}) CHECK(quads(search_bordered(5, k)) == bordered_loops(5, k));
  CHECK(quads(search_bordered(5, 1, 4)) == bordered_loops(5, 1));
  CHECK(search_bordered(3, 13).empty());
  for (const auto& h : search_bordered(20, 1)) {
    CHECK(h.k == 1);
    CHECK(check_property(h.matrix).holds);
  }
}

TEST_CASE("brute oracle") {
  SearchConfig c = brute(1);
  c.forbid_units = true;
  c.k_target = KRange::exactly(1);
  CHECK(brute_oracle(c).empty());

  SearchConfig c2 = brute(2);
  c2.forbid_units = true;
  const auto hits = brute_oracle(c2);
  CHECK_FALSE(hits.empty());
  std::set<Key> seen;
  for (const auto& h : hits) {
    CHECK(check_property(h.matrix).holds);
    CHECK(h.k != 0);
    CHECK(seen.insert(key_of(h.canonical)).second);
    CHECK(orbit_canonical(h.matrix) == h.canonical);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(abs(h.matrix(i, j)) != 1);
  }
  CHECK_THROWS_AS(brute_oracle(brute(3)), Error);
}

TEST_CASE("rows enumerate equals brute oracle at bound 2") {
  for (bool units : {false, true}) {
    SearchConfig r = rows_enum(2, 2);
    SearchConfig b = brute(2);
    r.forbid_units = b.forbid_units = units;
    r.jobs = 4;
    const auto rh = search(r);
    CHECK(canonical_set(rh) == canonical_set(search(b)));
    CHECK(canonical_set(rh).size() == rh.size());
  }
  SearchConfig r = rows_enum(2, 2);
  SearchConfig b = brute(2);
  r.k_target = b.k_target = KRange{-3, 3};
  CHECK(canonical_set(search(r)) == canonical_set(search(b)));
}

TEST_CASE("rows enumerate small cases") {
  SearchConfig c = rows_enum(1, 3);
  c.forbid_units = true;
  CHECK(search(c).empty());

  SearchConfig wide = rows_enum(2, 25);
  wide.k_target = KRange::exactly(1);
  wide.forbid_units = true;
  wide.jobs = 4;
  const auto hits = search(wide);
  SearchConfig b = brute(2);
  b.k_target = KRange::exactly(1);
  b.forbid_units = true;
  const auto small = canonical_set(search(b));
  const auto got = canonical_set(hits);
  for (const auto& h : hits) {
    CHECK(check_property(h.matrix).holds);
    CHECK(h.k == 1);
  }
  for (const auto& k : small) CHECK(got.count(k) == 1);
}

TEST_CASE("rows enumerate is deterministic and job-count independent") {
  SearchConfig c = rows_enum(2, 6);
  c.k_target = KRange{1, 10};
  c.jobs = 1;
  const auto one = search(c);
  c.jobs = 4;
  const auto four = search(c);
  const auto again = search(c);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].matrix == four[i].matrix);
    CHECK(four[i].matrix == again[i].matrix);
  }
}

TEST_CASE("work budget and resume") {
  SearchConfig full = rows_enum(2, 4);
  full.jobs = 2;
  const auto expected = canonical_set(search(full));
  const std::uint64_t total = canonical_row_pair_count(2);
  CHECK(total > 200);

  SearchConfig part = full;
  part.work_budget = 50;
  std::set<Key> merged;
  int rounds = 0;
  for (;;) {
    ++rounds;
    try {
      for (const auto& k : canonical_set(search(part))) merged.insert(k);
      break;
    } catch (const WorkBudgetExceeded& e) {
      CHECK(e.code() == ErrorCode::WorkBudgetExceeded);
      CHECK(e.total_pairs() == total);
      CHECK(e.next_pair() == part.resume_from + 50);
      for (const auto& k : canonical_set(e.partial())) merged.insert(k);
      part.resume_from = e.next_pair();
    }
  }
  CHECK(rounds == static_cast<int>((total + 49) / 50));
  CHECK(merged == expected);
}
