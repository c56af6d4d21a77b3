#pragma once

#include "cubedet/curve.hpp"
#include "cubedet/error.hpp"
#include "cubedet/exactmat.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cubedet {

enum class SearchMode { Bordered, TwoRows, RowsEnumerate, Brute };

/// Inclusive range of admissible determinants.
struct KRange {
  Integer min;
  Integer max;

  static KRange exactly(const Integer& k) { return {k, k}; }
  bool contains(const Integer& k) const { return min <= k && k <= max; }
};

struct SearchConfig {
  SearchMode mode = SearchMode::TwoRows;
  /// Entry bound for the solved row (two-rows, rows-enumerate), the four
  /// free entries (bordered) or all nine entries (brute).
  std::int64_t bound = 1;
  /// Entry bound for rows 2 and 3 in rows-enumerate mode.
  std::int64_t row_bound = 1;
  /// Absent: any nonzero determinant. Present: exactly this range, zero
  /// included if it lies in the range.
  std::optional<KRange> k_target;
  bool forbid_units = false;
  bool forbid_zero = false;
  /// Two-rows mode only.
  std::optional<Triple> row2;
  std::optional<Triple> row3;
  unsigned jobs = 1;
  /// Rows-enumerate only: maximum number of canonical row pairs to process
  /// in this run, starting at `resume_from`.
  std::optional<std::uint64_t> work_budget;
  std::uint64_t resume_from = 0;
};

struct SearchHit {
  Mat3 matrix;
  Integer k;
  Mat3 canonical;  // orbit representative
};

/// Raised by rows-enumerate when the work budget ends before the pair list
/// does. Carries the hits found so far; rerun with resume_from = next_pair.
class WorkBudgetExceeded : public Error {
 public:
  WorkBudgetExceeded(std::vector<SearchHit> partial, std::uint64_t next_pair,
                     std::uint64_t total_pairs);

  const std::vector<SearchHit>& partial() const { return partial_; }
  std::uint64_t next_pair() const { return next_pair_; }
  std::uint64_t total_pairs() const { return total_pairs_; }

 private:
  std::vector<SearchHit> partial_;
  std::uint64_t next_pair_;
  std::uint64_t total_pairs_;
};

/// Nested loops over all nine entries in [-bound, bound]. Requires
/// bound <= 2 (BoundTooLarge otherwise). One hit per orbit, sorted by
/// canonical representative; the hit matrix is the representative.
std::vector<SearchHit> brute_oracle(const SearchConfig& config);

/// All b11, b12, b21, b22 in [-bound, bound] with -b11+b12+b21-b22 = k and
/// -b11³+b12³+b21³-b22³ = k³, as bordered matrices, in lexicographic order of
/// (b11, b12, b21, b22). No orbit deduplication.
std::vector<SearchHit> search_bordered(std::int64_t bound, const Integer& k_target,
                                       unsigned jobs = 1);

/// Completes fixed rows 2, 3 with every first row in [-bound, bound]^3
/// meeting the determinant and cube conditions. Solves the linear condition
/// for z when its cofactor is nonzero, else y, else x. Throws
/// DegenerateCofactors when all three cofactors vanish. Hits are in
/// enumeration order, not deduplicated.
std::vector<SearchHit> search_two_rows_given(const Triple& row2, const Triple& row3,
                                             const SearchConfig& config);

/// Enumerates rows 2, 3 in [-row_bound, row_bound]^3 up to the part of the
/// symmetry group that keeps row 1 in place, completes each pair, and
/// deduplicates by orbit. Sorted by canonical representative.
std::vector<SearchHit> search_rows_enumerate(const SearchConfig& config);

/// Number of row pairs that rows-enumerate visits after pruning.
std::uint64_t canonical_row_pair_count(std::int64_t row_bound);

/// Dispatch on config.mode.
std::vector<SearchHit> search(const SearchConfig& config);

}  // namespace cubedet
