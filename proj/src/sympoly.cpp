#include "cubedet/sympoly.hpp"

#include "cubedet/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace cubedet {

namespace {

thread_local std::optional<std::chrono::steady_clock::time_point> tls_deadline;

void check_deadline() {
  if (tls_deadline && std::chrono::steady_clock::now() > *tls_deadline) throw DeadlineExpired{};
}

std::uint32_t degree_of(const MPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// Graded lex, larger first.
bool grlex_greater(const MPoly::Exponents& a, const MPoly::Exponents& b) {
  const auto da = degree_of(a);
  const auto db = degree_of(b);
  if (da != db) return da > db;
  return a > b;
}

struct ExponentsHash {
  std::size_t operator()(const MPoly::Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (auto v : e) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

std::vector<std::string> union_of(const std::vector<std::string>& a,
                                  const std::vector<std::string>& b) {
  std::vector<std::string> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

DeadlineScope::DeadlineScope(std::chrono::steady_clock::time_point deadline)
    : previous_(tls_deadline) {
  tls_deadline = deadline;
}

DeadlineScope::~DeadlineScope() { tls_deadline = previous_; }

MPoly::MPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace_back(Exponents{}, constant);
}

MPoly MPoly::variable(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_.emplace_back(Exponents{1}, Integer(1));
  return p;
}

MPoly MPoly::from_terms(std::vector<std::string> variables, std::vector<Term> terms) {
  std::vector<std::size_t> order(variables.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return variables[a] < variables[b]; });
  MPoly p;
  for (std::size_t k : order) p.vars_.push_back(variables[k]);
  if (std::adjacent_find(p.vars_.begin(), p.vars_.end()) != p.vars_.end())
    throw Error(ErrorCode::InvalidArgument, "duplicate variable name");
  for (auto& [exps, coeff] : terms) {
    if (exps.size() != variables.size())
      throw Error(ErrorCode::InvalidArgument, "exponent vector arity mismatch");
    Exponents sorted(exps.size());
    for (std::size_t k = 0; k < order.size(); ++k) sorted[k] = exps[order[k]];
    p.terms_.emplace_back(std::move(sorted), std::move(coeff));
  }
  p.canonicalize();
  return p;
}

void MPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().first == t.first)
      merged.back().second += t.second;
    else
      merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(merged);
}

std::uint32_t MPoly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, degree_of(t.first));
  return d;
}

MPoly MPoly::aligned_to(const std::vector<std::string>& vars) const {
  if (vars == vars_) return *this;
  std::vector<std::size_t> position(vars_.size());
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[k]);
    if (it == vars.end() || *it != vars_[k])
      throw Error(ErrorCode::InvalidArgument, "alignment drops variable " + vars_[k]);
    position[k] = static_cast<std::size_t>(it - vars.begin());
  }
  MPoly out;
  out.vars_ = vars;
  out.terms_.reserve(terms_.size());
  for (const auto& [exps, coeff] : terms_) {
    Exponents e(vars.size(), 0);
    for (std::size_t k = 0; k < exps.size(); ++k) e[position[k]] = exps[k];
    out.terms_.emplace_back(std::move(e), coeff);
  }
  // Inserting zero exponents preserves the grlex order.
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  const auto vars = union_of(vars_, o.vars_);
  MPoly a = aligned_to(vars);
  const MPoly b = o.aligned_to(vars);
  std::vector<Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && grlex_greater(i->first, j->first))) {
      out.push_back(std::move(*i++));
    } else if (i == a.terms_.end() || grlex_greater(j->first, i->first)) {
      out.push_back(*j++);
    } else {
      Integer c = i->second + j->second;
      if (c != 0) out.emplace_back(std::move(i->first), std::move(c));
      ++i;
      ++j;
    }
  }
  vars_ = vars;
  terms_ = std::move(out);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator*(const MPoly& a_in, const MPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return MPoly{};
  const auto vars = union_of(a_in.vars_, b_in.vars_);
  const MPoly a = a_in.aligned_to(vars);
  const MPoly b = b_in.aligned_to(vars);

  std::unordered_map<MPoly::Exponents, Integer, ExponentsHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
  MPoly::Exponents e(vars.size());
  std::size_t work = 0;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      auto [it, inserted] = acc.try_emplace(e);
      if (inserted)
        it->second = ca * cb;
      else
        it->second += ca * cb;
    }
    if ((work += b.terms_.size()) >= 4096) {
      work = 0;
      check_deadline();
    }
  }
  MPoly out;
  out.vars_ = vars;
  out.terms_.reserve(acc.size());
  for (auto& [exps, coeff] : acc)
    if (coeff != 0) out.terms_.emplace_back(exps, std::move(coeff));
  std::sort(out.terms_.begin(), out.terms_.end(), [](const auto& x, const auto& y) {
    return grlex_greater(x.first, y.first);
  });
  return out;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  const auto vars = union_of(a.vars_, b.vars_);
  return a.aligned_to(vars).terms_ == b.aligned_to(vars).terms_;
}

MPoly MPoly::pow(unsigned n) const {
  MPoly result(1);
  MPoly base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

Integer MPoly::eval(std::span<const Integer> values) const {
  if (values.size() != vars_.size())
    throw Error(ErrorCode::MissingVariable, "expected " + std::to_string(vars_.size()) +
                                                " values, got " + std::to_string(values.size()));
  Integer sum = 0;
  for (const auto& [exps, coeff] : terms_) {
    Integer term = coeff;
    for (std::size_t k = 0; k < exps.size(); ++k)
      if (exps[k]) term *= boost::multiprecision::pow(values[k], exps[k]);
    sum += term;
  }
  return sum;
}

Integer MPoly::eval(const std::map<std::string, Integer>& assignment) const {
  std::vector<Integer> values;
  values.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = assignment.find(v);
    if (it == assignment.end())
      throw Error(ErrorCode::MissingVariable, "no value for variable " + v);
    values.push_back(it->second);
  }
  return eval(values);
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : terms_) {
    Integer c = coeff;
    if (first) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (!exps[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[k];
      if (exps[k] > 1) mono += "^" + std::to_string(exps[k]);
    }
    if (mono.empty())
      out += c.str();
    else if (c == 1)
      out += mono;
    else
      out += c.str() + "*" + mono;
  }
  return out;
}

}  // namespace cubedet
