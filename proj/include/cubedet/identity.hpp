#pragma once

#include "cubedet/integer.hpp"
#include "cubedet/sympoly.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cubedet {

/// A claimed polynomial identity lhs == rhs over named integer variables,
/// computable both symbolically (MPoly) and numerically (Integer).
struct Identity {
  std::string name;
  std::vector<std::string> variables;
  std::function<MPoly(std::span<const MPoly>)> symbolic_lhs;
  std::function<MPoly(std::span<const MPoly>)> symbolic_rhs;
  std::function<Integer(std::span<const Integer>)> numeric_lhs;
  std::function<Integer(std::span<const Integer>)> numeric_rhs;
};

/// Builds an Identity from two generic callables taking std::span<const S>
/// for S in {MPoly, Integer}.
template <typename Lhs, typename Rhs>
Identity make_identity(std::string name, std::vector<std::string> variables, Lhs lhs, Rhs rhs) {
  return Identity{std::move(name),
                  std::move(variables),
                  [lhs](std::span<const MPoly> v) { return MPoly(lhs(v)); },
                  [rhs](std::span<const MPoly> v) { return MPoly(rhs(v)); },
                  [lhs](std::span<const Integer> v) { return Integer(lhs(v)); },
                  [rhs](std::span<const Integer> v) { return Integer(rhs(v)); }};
}

/// Names: quintuple-sum, quintuple-cubes, detB-eq-x1, detBcube-eq-x1cube,
/// theorem1-det, theorem1-cubedet, theorem2-det, theorem2-cubedet.
const std::vector<std::string>& identity_names();

/// Throws InvalidArgument for unknown names.
Identity builtin_identity(std::string_view name);

enum class VerifyMode { Symbolic, Sampled };
enum class Verdict { Holds, Fails, Timeout };

std::string_view to_string(VerifyMode m);
std::string_view to_string(Verdict v);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Sampled;
  std::size_t samples = 100;
  std::int64_t bound = 10000;
  std::uint64_t seed = 20240101;
  /// Wall-clock budget; on expiry the verdict is Timeout.
  std::optional<std::chrono::milliseconds> budget;
};

struct IdentityReport {
  std::string name;
  VerifyMode mode = VerifyMode::Sampled;
  Verdict verdict = Verdict::Timeout;
  /// Present exactly when verdict == Fails.
  std::optional<std::map<std::string, Integer>> witness;
  std::size_t lhs_terms = 0;         // symbolic only
  std::size_t rhs_terms = 0;         // symbolic only
  std::size_t difference_terms = 0;  // symbolic only
  std::uint32_t max_degree = 0;      // symbolic only
  std::size_t samples = 0;           // evaluations performed
  double elapsed_seconds = 0;
};

IdentityReport verify_identity(const Identity& identity, const VerifyOptions& options);
IdentityReport verify_identity(std::string_view name, const VerifyOptions& options);

}  // namespace cubedet
