#include "cubedet/identity.hpp"

#include "cubedet/error.hpp"
#include "cubedet/exactmat.hpp"
#include "cubedet/generators.hpp"

#include <random>

namespace cubedet {

namespace {

template <typename S>
using Vars = std::span<const S>;

std::vector<Identity> build_identities() {
  const std::vector<std::string> pqrs{"p", "q", "r", "s"};
  const std::vector<std::string> t{"t"};
  const std::vector<std::string> six{"p", "q", "r", "u", "v", "w"};
  auto zero = [](auto v) { return typename decltype(v)::value_type(0); };
  auto one = [](auto v) { return typename decltype(v)::value_type(1); };
  auto x_of = [](auto v) { return quintuple_values(v[0], v[1], v[2], v[3]); };

  std::vector<Identity> out;
  out.push_back(make_identity(
      "quintuple-sum", pqrs,
      [x_of](auto v) {
        const auto x = x_of(v);
        return x[0] + x[1] + x[2] + x[3] + x[4];
      },
      zero));
  out.push_back(make_identity(
      "quintuple-cubes", pqrs,
      [x_of](auto v) {
        const auto x = x_of(v);
        return power(x[0], 3) + power(x[1], 3) + power(x[2], 3) + power(x[3], 3) +
               power(x[4], 3);
      },
      zero));
  out.push_back(make_identity(
      "detB-eq-x1", pqrs, [x_of](auto v) { return det3(bordered_from(x_of(v))); },
      [x_of](auto v) { return x_of(v)[0]; }));
  out.push_back(make_identity(
      "detBcube-eq-x1cube", pqrs,
      [x_of](auto v) { return det3(cube_map(bordered_from(x_of(v)))); },
      [x_of](auto v) { return power(x_of(v)[0], 3); }));
  out.push_back(make_identity(
      "theorem1-det", t, [](auto v) { return det3(matrix_a_closed_of(v[0])); }, one));
  out.push_back(make_identity(
      "theorem1-cubedet", t, [](auto v) { return det3(cube_map(matrix_a_closed_of(v[0]))); },
      one));
  out.push_back(make_identity(
      "theorem2-det", six,
      [](auto v) { return det3(theorem2_matrix_of(v[0], v[1], v[2], v[3], v[4], v[5])); },
      [](auto v) { return theorem2_k_of(v[0], v[1], v[2], v[3], v[4], v[5]); }));
  out.push_back(make_identity(
      "theorem2-cubedet", six,
      [](auto v) {
        return det3(cube_map(theorem2_matrix_of(v[0], v[1], v[2], v[3], v[4], v[5])));
      },
      [](auto v) { return power(theorem2_k_of(v[0], v[1], v[2], v[3], v[4], v[5]), 3); }));
  return out;
}

const std::vector<Identity>& identities() {
  static const std::vector<Identity> all = build_identities();
  return all;
}

std::vector<Integer> random_assignment(std::mt19937_64& rng, std::size_t n, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  std::vector<Integer> values;
  values.reserve(n);
  for (std::size_t k = 0; k < n; ++k) values.emplace_back(dist(rng));
  return values;
}

std::map<std::string, Integer> as_witness(const Identity& id, const std::vector<Integer>& values) {
  std::map<std::string, Integer> w;
  for (std::size_t k = 0; k < values.size(); ++k) w[id.variables[k]] = values[k];
  return w;
}

Integer numeric_difference(const Identity& id, const std::vector<Integer>& values) {
  return id.numeric_lhs(values) - id.numeric_rhs(values);
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& id : identities()) n.push_back(id.name);
    return n;
  }();
  return names;
}

Identity builtin_identity(std::string_view name) {
  for (const auto& id : identities())
    if (id.name == name) return id;
  throw Error(ErrorCode::InvalidArgument, "unknown identity '" + std::string(name) + "'");
}

std::string_view to_string(VerifyMode m) {
  return m == VerifyMode::Symbolic ? "symbolic" : "sampled";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Timeout: return "timeout";
  }
  return "unknown";
}

IdentityReport verify_identity(const Identity& id, const VerifyOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto deadline = options.budget ? start + *options.budget : Clock::time_point::max();
  std::mt19937_64 rng(options.seed);

  IdentityReport report;
  report.name = id.name;
  report.mode = options.mode;

  auto finish = [&]() {
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return report;
  };

  if (options.mode == VerifyMode::Symbolic) {
    MPoly difference;
    try {
      DeadlineScope scope(deadline);
      std::vector<MPoly> vars;
      for (const auto& name : id.variables) vars.push_back(MPoly::variable(name));
      const MPoly lhs = id.symbolic_lhs(vars);
      const MPoly rhs = id.symbolic_rhs(vars);
      report.lhs_terms = lhs.term_count();
      report.rhs_terms = rhs.term_count();
      report.max_degree = std::max(lhs.total_degree(), rhs.total_degree());
      difference = lhs - rhs;
    } catch (const DeadlineExpired&) {
      report.verdict = Verdict::Timeout;
      return finish();
    }
    report.difference_terms = difference.term_count();
    if (difference.is_zero()) {
      report.verdict = Verdict::Holds;
      return finish();
    }
    // A nonzero polynomial is nonzero at most random points; find one.
    report.verdict = Verdict::Fails;
    for (std::int64_t bound = 2;; bound *= 2) {
      for (int attempt = 0; attempt < 64; ++attempt) {
        auto witness = as_witness(id, random_assignment(rng, id.variables.size(), bound));
        ++report.samples;
        if (difference.eval(witness) != 0) {
          report.witness = std::move(witness);
          return finish();
        }
      }
    }
  }

  for (std::size_t n = 0; n < options.samples; ++n) {
    if (Clock::now() > deadline) {
      report.verdict = Verdict::Timeout;
      return finish();
    }
    const auto values = random_assignment(rng, id.variables.size(), options.bound);
    ++report.samples;
    if (numeric_difference(id, values) != 0) {
      report.verdict = Verdict::Fails;
      report.witness = as_witness(id, values);
      return finish();
    }
  }
  report.verdict = Verdict::Holds;
  return finish();
}

IdentityReport verify_identity(std::string_view name, const VerifyOptions& options) {
  return verify_identity(builtin_identity(name), options);
}

}  // namespace cubedet
