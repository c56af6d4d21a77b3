#include "cubedet/search.hpp"

#include "cubedet/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <mutex>
#include <thread>

namespace cubedet {

WorkBudgetExceeded::WorkBudgetExceeded(std::vector<SearchHit> partial, std::uint64_t next_pair,
                                       std::uint64_t total_pairs)
    : Error(ErrorCode::WorkBudgetExceeded,
            "work budget exhausted after row pair " + std::to_string(next_pair) + " of " +
                std::to_string(total_pairs)),
      partial_(std::move(partial)),
      next_pair_(next_pair),
      total_pairs_(total_pairs) {}

namespace {

using i128 = __int128;
using I64Mat = Matrix3<std::int64_t>;

Integer to_integer(const Integer& v) { return v; }
Integer to_integer(i128 v) {
  if (v >= INT64_MIN && v <= INT64_MAX) return Integer(static_cast<long long>(v));
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return Integer(digits);
}

template <typename W>
W from_integer(const Integer& v) {
  if constexpr (std::is_same_v<W, Integer>)
    return v;
  else
    return static_cast<W>(v.convert_to<long long>());
}

template <typename W>
W absw(const W& v) {
  return v < 0 ? W(-v) : v;
}

template <typename W>
W cubew(const W& v) {
  return v * v * v;
}

struct EntryFilter {
  bool forbid_units = false;
  bool forbid_zero = false;

  template <typename W>
  bool admits(const W& v) const {
    if (forbid_zero && v == 0) return false;
    if (forbid_units && (v == 1 || v == -1)) return false;
    return true;
  }
  template <typename W>
  bool admits_all(const std::array<W, 3>& row) const {
    return admits(row[0]) && admits(row[1]) && admits(row[2]);
  }
};

template <typename W>
struct KWindow {
  bool any_nonzero = true;
  W min{};
  W max{};

  bool admits(const W& k) const { return any_nonzero ? k != 0 : (min <= k && k <= max); }
};

/// Ranges are clamped to [-limit, limit], outside of which no determinant
/// is reachable; this keeps native arithmetic in range.
template <typename W>
KWindow<W> window_of(const std::optional<KRange>& k, const Integer& limit) {
  KWindow<W> out;
  if (k) {
    out.any_nonzero = false;
    out.min = from_integer<W>(std::max(k->min, Integer(-limit)));
    out.max = from_integer<W>(std::min(k->max, limit));
  }
  return out;
}

/// Enumerates first rows completing (row2, row3) and calls emit(row1, k).
/// Returns false when the cofactors all vanish (rows dependent).
template <typename W, typename Emit>
bool complete_pair(const std::array<W, 3>& a, const std::array<W, 3>& b, const W& bound,
                   const KWindow<W>& kw, const EntryFilter& filter, Emit&& emit) {
  const std::array<W, 3> lin{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                             a[0] * b[1] - a[1] * b[0]};
  int solve = -1;
  for (int idx : {2, 1, 0})
    if (lin[idx] != 0) {
      solve = idx;
      break;
    }

  if (solve < 0) {
    // det and cube det both vanish for every first row.
    if (kw.admits(W(0))) {
      std::array<W, 3> x;
      for (x[0] = -bound; x[0] <= bound; ++x[0])
        for (x[1] = -bound; x[1] <= bound; ++x[1])
          for (x[2] = -bound; x[2] <= bound; ++x[2])
            if (filter.admits_all(x)) emit(x, W(0));
    }
    return false;
  }

  const std::array<W, 3> diag{cubew(W(a[1] * b[2])) - cubew(W(a[2] * b[1])),
                              cubew(W(a[2] * b[0])) - cubew(W(a[0] * b[2])),
                              cubew(W(a[0] * b[1])) - cubew(W(a[1] * b[0]))};
  const int fa = solve == 0 ? 1 : 0;
  const int fb = solve == 2 ? 1 : 2;
  const W& ls = lin[solve];
  const W width = W(2) * bound + W(1);
  const bool by_k = !kw.any_nonzero && (kw.max - kw.min + W(1)) < width;

  std::array<W, 3> x;
  auto check = [&](const W& k) {
    if (!filter.admits(x[solve])) return;
    if (diag[0] * cubew(x[0]) + diag[1] * cubew(x[1]) + diag[2] * cubew(x[2]) != cubew(k)) return;
    emit(x, k);
  };

  for (x[fa] = -bound; x[fa] <= bound; ++x[fa]) {
    if (!filter.admits(x[fa])) continue;
    for (x[fb] = -bound; x[fb] <= bound; ++x[fb]) {
      if (!filter.admits(x[fb])) continue;
      const W partial = lin[fa] * x[fa] + lin[fb] * x[fb];
      if (by_k) {
        for (W k = kw.min; k <= kw.max; ++k) {
          const W num = k - partial;
          if (num % ls != 0) continue;
          x[solve] = num / ls;
          if (absw(x[solve]) > bound) continue;
          check(k);
        }
      } else {
        for (x[solve] = -bound; x[solve] <= bound; ++x[solve]) {
          const W k = partial + ls * x[solve];
          if (!kw.admits(k)) continue;
          check(k);
        }
      }
    }
  }
  return true;
}

/// Largest |det| reachable with first-row entries in [-bound, bound].
Integer reachable_k(const Integer& row_max, std::int64_t bound) {
  return 6 * row_max * row_max * Integer(bound);
}

/// True when every intermediate of complete_pair stays well inside i128.
bool fits_native(const Integer& row_max, std::int64_t bound) {
  if (row_max > Integer(1000000000LL) || bound > 1000000000LL) return false;
  const long double r = row_max.convert_to<long double>();
  const long double b = static_cast<long double>(bound);
  const long double kmag = 6.0L * r * r * b;
  const long double cubic = 6.0L * r * r * r * r * r * r * b * b * b;
  return kmag * kmag * kmag + cubic < 1e36L;
}

SearchHit make_hit(const Mat3& m, const Integer& k) {
  const PropertyReport report = check_property(m);
  if (!report.holds || report.det != k)
    throw std::logic_error("search emitted a matrix failing the determinant conditions: " +
                           format_matrix(m));
  return SearchHit{m, k, orbit_canonical(m)};
}

template <typename W>
Mat3 assemble(const std::array<W, 3>& r1, const Triple& r2, const Triple& r3) {
  Mat3 m;
  for (int j = 0; j < 3; ++j) {
    m(0, j) = to_integer(r1[j]);
    m(1, j) = r2[j];
    m(2, j) = r3[j];
  }
  return m;
}

template <typename W>
std::vector<SearchHit> complete_rows(const Triple& row2, const Triple& row3,
                                     const SearchConfig& config, bool& dependent) {
  std::array<W, 3> a, b;
  for (int j = 0; j < 3; ++j) {
    a[j] = from_integer<W>(row2[j]);
    b[j] = from_integer<W>(row3[j]);
  }
  std::vector<SearchHit> hits;
  const EntryFilter filter{config.forbid_units, config.forbid_zero};
  if (!filter.admits_all(row2) || !filter.admits_all(row3)) {
    const Triple l = linear_cofactors(row2, row3);
    dependent = l[0] == 0 && l[1] == 0 && l[2] == 0;
    return hits;
  }
  Integer row_max = 0;
  for (const auto* row : {&row2, &row3})
    for (const auto& v : *row) row_max = std::max(row_max, Integer(abs(v)));
  const auto kw = window_of<W>(config.k_target, reachable_k(row_max, config.bound));
  dependent = !complete_pair<W>(a, b, W(config.bound), kw, filter,
                                [&](const std::array<W, 3>& r1, const W& k) {
                                  hits.push_back(make_hit(assemble(r1, row2, row3), to_integer(k)));
                                });
  return hits;
}

std::vector<SearchHit> complete_rows_any(const Triple& row2, const Triple& row3,
                                         const SearchConfig& config, bool& dependent) {
  Integer row_max = 0;
  for (const auto* row : {&row2, &row3})
    for (const auto& v : *row) row_max = std::max(row_max, Integer(abs(v)));
  return fits_native(row_max, config.bound) ? complete_rows<i128>(row2, row3, config, dependent)
                : complete_rows<Integer>(row2, row3, config, dependent);
}

/// Runs work(chunk) for chunk in [0, count) on up to `jobs` threads and
/// returns the per-chunk results in chunk order.
template <typename Work>
std::vector<std::vector<SearchHit>> run_chunks(std::size_t count, unsigned jobs, Work work) {
  std::vector<std::vector<SearchHit>> results(count);
  if (count == 0) return results;
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t c = 0; c < count; ++c) results[c] = work(c);
    return results;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t c; (c = next.fetch_add(1)) < count;) {
        try {
          results[c] = work(c);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::vector<SearchHit> dedupe_by_orbit(std::vector<std::vector<SearchHit>>&& chunks) {
  std::vector<SearchHit> out;
  std::set<Mat3, decltype(&lex_less<Integer>)> seen(&lex_less<Integer>);
  for (auto& chunk : chunks)
    for (auto& hit : chunk)
      if (seen.insert(hit.canonical).second) out.push_back(std::move(hit));
  std::sort(out.begin(), out.end(), [](const SearchHit& x, const SearchHit& y) {
    return lex_less(x.canonical, y.canonical);
  });
  return out;
}

std::vector<std::array<std::int64_t, 3>> box_triples(std::int64_t bound) {
  std::vector<std::array<std::int64_t, 3>> out;
  for (std::int64_t x = -bound; x <= bound; ++x)
    for (std::int64_t y = -bound; y <= bound; ++y)
      for (std::int64_t z = -bound; z <= bound; ++z) out.push_back({x, y, z});
  return out;
}

bool pair_is_canonical(const std::array<std::int64_t, 3>& r2, const std::array<std::int64_t, 3>& r3) {
  I64Mat m;
  m.row(0).setZero();
  m.row(1) << r2[0], r2[1], r2[2];
  m.row(2) << r3[0], r3[1], r3[2];
  for (const auto& h : row1_stabilizer())
    if (lex_less(apply_group_element(h, m), m)) return false;
  return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> canonical_pairs(std::int64_t row_bound) {
  const auto triples = box_triples(row_bound);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (std::uint32_t i = 0; i < triples.size(); ++i)
    for (std::uint32_t j = 0; j < triples.size(); ++j)
      if (pair_is_canonical(triples[i], triples[j])) out.emplace_back(i, j);
  return out;
}

Triple to_triple(const std::array<std::int64_t, 3>& v) {
  return {Integer(static_cast<long long>(v[0])), Integer(static_cast<long long>(v[1])),
          Integer(static_cast<long long>(v[2]))};
}

void require_bound(std::int64_t bound, const char* what) {
  if (bound < 1) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be >= 1");
}

}  // namespace

std::vector<SearchHit> brute_oracle(const SearchConfig& config) {
  require_bound(config.bound, "bound");
  if (config.bound > 2)
    throw Error(ErrorCode::BoundTooLarge, "brute oracle supports bound <= 2, got " +
                                              std::to_string(config.bound));
  const std::int64_t b = config.bound;
  const EntryFilter filter{config.forbid_units, config.forbid_zero};
  const KWindow<i128> kw = window_of<i128>(config.k_target, Integer(6 * b * b * b));

  std::vector<std::int64_t> values;
  for (std::int64_t v = -b; v <= b; ++v)
    if (filter.admits(v)) values.push_back(v);

  std::set<I64Mat, decltype(&lex_less<std::int64_t>)> found(&lex_less<std::int64_t>);
  if (!values.empty()) {
    std::array<std::size_t, 9> digit{};
    I64Mat m;
    m.setConstant(values[0]);
    while (true) {
      const std::int64_t det = det3(m);
      if (kw.admits(det) && det3(cube_map(m)) == det * det * det)
        found.insert(orbit_canonical_of(m));
      int pos = 8;
      while (pos >= 0 && ++digit[pos] == values.size()) {
        digit[pos] = 0;
        m(pos / 3, pos % 3) = values[0];
        --pos;
      }
      if (pos < 0) break;
      m(pos / 3, pos % 3) = values[digit[pos]];
    }
  }

  std::vector<SearchHit> hits;
  hits.reserve(found.size());
  for (const auto& c : found) {
    const Mat3 m = c.cast<Integer>();
    hits.push_back(make_hit(m, det3(m)));
  }
  return hits;
}

std::vector<SearchHit> search_bordered(std::int64_t bound, const Integer& k_target, unsigned jobs) {
  require_bound(bound, "bound");
  if (bound > 1000000)
    throw Error(ErrorCode::BoundTooLarge, "bordered search supports bound <= 10^6");
  const i128 b = bound;
  // |det| <= 4 * bound for the bordered form.
  if (abs(k_target) > Integer(4 * bound)) return {};
  const i128 k = static_cast<i128>(k_target.convert_to<long long>());
  const i128 k3 = k * k * k;

  const std::size_t span = static_cast<std::size_t>(2 * bound + 1);
  auto chunks = run_chunks(span, jobs, [&](std::size_t c) {
    std::vector<SearchHit> hits;
    const i128 b11 = -b + static_cast<i128>(c);
    const i128 c11 = b11 * b11 * b11;
    for (i128 b12 = -b; b12 <= b; ++b12) {
      const i128 c12 = b12 * b12 * b12;
      for (i128 b21 = -b; b21 <= b; ++b21) {
        const i128 b22 = -b11 + b12 + b21 - k;
        if (b22 < -b || b22 > b) continue;
        if (-c11 + c12 + b21 * b21 * b21 - b22 * b22 * b22 != k3) continue;
        Mat3 m;
        m << to_integer(b11), to_integer(b12), 1, to_integer(b21), to_integer(b22), 1, 1, 1, 0;
        hits.push_back(make_hit(m, k_target));
      }
    }
    return hits;
  });
  std::vector<SearchHit> out;
  for (auto& chunk : chunks)
    for (auto& hit : chunk) out.push_back(std::move(hit));
  return out;
}

std::vector<SearchHit> search_two_rows_given(const Triple& row2, const Triple& row3,
                                             const SearchConfig& config) {
  require_bound(config.bound, "bound");
  const Triple l = linear_cofactors(row2, row3);
  if (l[0] == 0 && l[1] == 0 && l[2] == 0)
    throw Error(ErrorCode::DegenerateCofactors,
                "all cofactors of the first row vanish; rows are zero or proportional");
  bool dependent = false;
  return complete_rows_any(row2, row3, config, dependent);
}

std::uint64_t canonical_row_pair_count(std::int64_t row_bound) {
  require_bound(row_bound, "row bound");
  return canonical_pairs(row_bound).size();
}

std::vector<SearchHit> search_rows_enumerate(const SearchConfig& config) {
  require_bound(config.bound, "bound");
  require_bound(config.row_bound, "row bound");
  if (config.row_bound > 6)
    throw Error(ErrorCode::BoundTooLarge, "rows-enumerate supports row bound <= 6");
  const auto triples = box_triples(config.row_bound);
  const auto pairs = canonical_pairs(config.row_bound);
  const std::uint64_t total = pairs.size();
  const std::uint64_t start = std::min<std::uint64_t>(config.resume_from, total);
  std::uint64_t stop = total;
  if (config.work_budget) stop = std::min<std::uint64_t>(total, start + *config.work_budget);

  constexpr std::uint64_t kChunk = 256;
  const std::size_t chunk_count = static_cast<std::size_t>((stop - start + kChunk - 1) / kChunk);
  auto chunks = run_chunks(chunk_count, config.jobs, [&](std::size_t c) {
    std::vector<SearchHit> hits;
    const std::uint64_t lo = start + c * kChunk;
    const std::uint64_t hi = std::min<std::uint64_t>(stop, lo + kChunk);
    for (std::uint64_t n = lo; n < hi; ++n) {
      const Triple r2 = to_triple(triples[pairs[n].first]);
      const Triple r3 = to_triple(triples[pairs[n].second]);
      bool dependent = false;
      auto found = complete_rows_any(r2, r3, config, dependent);
      for (auto& h : found) hits.push_back(std::move(h));
    }
    return hits;
  });
  auto hits = dedupe_by_orbit(std::move(chunks));
  if (stop < total) throw WorkBudgetExceeded(std::move(hits), stop, total);
  return hits;
}

std::vector<SearchHit> search(const SearchConfig& config) {
  switch (config.mode) {
    case SearchMode::Bordered: {
      if (!config.k_target || config.k_target->min != config.k_target->max)
        throw Error(ErrorCode::InvalidArgument, "bordered search needs a single k");
      return search_bordered(config.bound, config.k_target->min, config.jobs);
    }
    case SearchMode::TwoRows: {
      if (!config.row2 || !config.row3)
        throw Error(ErrorCode::InvalidArgument, "two-rows search needs rows 2 and 3");
      return search_two_rows_given(*config.row2, *config.row3, config);
    }
    case SearchMode::RowsEnumerate:
      return search_rows_enumerate(config);
    case SearchMode::Brute:
      return brute_oracle(config);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown search mode");
}

}  // namespace cubedet
