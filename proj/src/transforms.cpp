#include "cubedet/transforms.hpp"

#include "cubedet/error.hpp"

#include <algorithm>
#include <sstream>

namespace cubedet {

namespace {

bool valid_index(int i) { return i >= 1 && i <= 3; }

void check_pair(int a, int b, const char* what) {
  if (!valid_index(a) || !valid_index(b))
    throw Error(ErrorCode::InvalidTransform, std::string(what) + ": index out of range 1..3");
  if (a == b)
    throw Error(ErrorCode::InvalidTransform, std::string(what) + ": indices must differ");
}

void swap_lines(Mat3& m, const LineSwap& s) {
  if (s.side == Side::Row)
    m.row(s.i1 - 1).swap(m.row(s.i2 - 1));
  else
    m.col(s.i1 - 1).swap(m.col(s.i2 - 1));
}

const char* side_word(Side s) { return s == Side::Row ? "rows" : "cols"; }

int parity(const std::array<int, 3>& p) {
  int inversions = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2;
}

std::vector<GroupElement> build_group() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const std::array<std::array<int, 3>, 4> signs{{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}};

  std::vector<GroupElement> group;
  group.reserve(576);
  for (bool transpose : {false, true})
    for (const auto& rp : perms)
      for (const auto& cp : perms) {
        if (parity(rp) != parity(cp)) continue;
        for (const auto& rs : signs)
          for (const auto& cs : signs) group.push_back({transpose, rp, cp, rs, cs});
      }
  return group;
}

}  // namespace

void validate(const TransformSpec& t) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, NegatePair>) {
          check_pair(v.i1, v.i2, "negate pair");
        } else if constexpr (std::is_same_v<T, SwapPair>) {
          check_pair(v.first.i1, v.first.i2, "first swap");
          check_pair(v.second.i1, v.second.i2, "second swap");
        } else if constexpr (std::is_same_v<T, ConjugateScale>) {
          if (!valid_index(v.i) || !valid_index(v.j))
            throw Error(ErrorCode::InvalidTransform, "conjugate scale: index out of range 1..3");
          if (v.alpha == 0)
            throw Error(ErrorCode::InvalidTransform, "conjugate scale: alpha must be nonzero");
        }
      },
      t);
}

Mat3 apply_transform(const Mat3& m, const TransformSpec& t) {
  validate(t);
  return std::visit(
      [&m](const auto& v) -> Mat3 {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Transpose>) {
          return m.transpose();
        } else if constexpr (std::is_same_v<T, NegatePair>) {
          Mat3 out = m;
          if (v.side == Side::Row) {
            out.row(v.i1 - 1) = -out.row(v.i1 - 1);
            out.row(v.i2 - 1) = -out.row(v.i2 - 1);
          } else {
            out.col(v.i1 - 1) = -out.col(v.i1 - 1);
            out.col(v.i2 - 1) = -out.col(v.i2 - 1);
          }
          return out;
        } else if constexpr (std::is_same_v<T, SwapPair>) {
          Mat3 out = m;
          swap_lines(out, v.first);
          swap_lines(out, v.second);
          return out;
        } else {
          Matrix3<Rational> scaled = m.template cast<Rational>();
          scaled.row(v.i - 1) *= v.alpha;
          scaled.col(v.j - 1) /= v.alpha;
          Mat3 out;
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
              if (denominator(scaled(r, c)) != 1) {
                throw Error(ErrorCode::NonIntegralResult,
                            "scaling row " + std::to_string(v.i) + " by " +
                                to_string(v.alpha) + " and column " + std::to_string(v.j) +
                                " by its inverse leaves entry (" + std::to_string(r + 1) +
                                "," + std::to_string(c + 1) + ") = " +
                                to_string(scaled(r, c)));
              }
              out(r, c) = numerator(scaled(r, c));
            }
          return out;
        }
      },
      t);
}

TransformSpec parse_transform(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  auto bad = [&text](const std::string& why) {
    return Error(ErrorCode::Parse, "transform '" + std::string(text) + "': " + why);
  };
  auto index = [&](std::size_t k) {
    const Integer v = parse_integer(words.at(k));
    if (v < 1 || v > 3) throw bad("index must be 1, 2 or 3");
    return v.convert_to<int>();
  };
  auto side = [&](std::size_t k) {
    if (words.at(k) == "rows") return Side::Row;
    if (words.at(k) == "cols") return Side::Col;
    throw bad("expected 'rows' or 'cols'");
  };
  if (words.empty()) throw bad("empty");

  TransformSpec spec;
  const std::string& head = words[0];
  if (head == "transpose" && words.size() == 1) {
    spec = Transpose{};
  } else if ((head == "negrows" || head == "negcols") && words.size() == 3) {
    spec = NegatePair{head == "negrows" ? Side::Row : Side::Col, index(1), index(2)};
  } else if (head == "swap" && words.size() == 7) {
    spec = SwapPair{{side(1), index(2), index(3)}, {side(4), index(5), index(6)}};
  } else if (head == "conj" && words.size() == 4) {
    const std::string& a = words[3];
    const auto slash = a.find('/');
    Integer num = parse_integer(a.substr(0, slash));
    Integer den = slash == std::string::npos ? Integer(1) : parse_integer(a.substr(slash + 1));
    if (den == 0) throw bad("zero denominator");
    spec = ConjugateScale{index(1), index(2), Rational(num, den)};
  } else {
    throw bad("unrecognized form");
  }
  validate(spec);
  return spec;
}

std::string format_transform(const TransformSpec& t) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Transpose>) {
          return "transpose";
        } else if constexpr (std::is_same_v<T, NegatePair>) {
          return std::string(v.side == Side::Row ? "negrows " : "negcols ") +
                 std::to_string(v.i1) + " " + std::to_string(v.i2);
        } else if constexpr (std::is_same_v<T, SwapPair>) {
          return std::string("swap ") + side_word(v.first.side) + " " +
                 std::to_string(v.first.i1) + " " + std::to_string(v.first.i2) + " " +
                 side_word(v.second.side) + " " + std::to_string(v.second.i1) + " " +
                 std::to_string(v.second.i2);
        } else {
          return "conj " + std::to_string(v.i) + " " + std::to_string(v.j) + " " +
                 numerator(v.alpha).str() + "/" + denominator(v.alpha).str();
        }
      },
      t);
}

const std::vector<GroupElement>& finite_group() {
  static const std::vector<GroupElement> group = build_group();
  return group;
}

const std::vector<GroupElement>& row1_stabilizer() {
  static const std::vector<GroupElement> sub = [] {
    std::vector<GroupElement> out;
    for (const auto& g : finite_group())
      if (!g.transpose && g.row_perm[0] == 0) out.push_back(g);
    return out;
  }();
  return sub;
}

Mat3 orbit_canonical(const Mat3& m) {
  static const Integer limit = Integer(1) << 62;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (abs(m(i, j)) >= limit) return orbit_canonical_of(m);
  const Matrix3<std::int64_t> small =
      m.unaryExpr([](const Integer& v) { return v.convert_to<std::int64_t>(); });
  return orbit_canonical_of(small).unaryExpr(
      [](std::int64_t v) { return Integer(static_cast<long long>(v)); });
}

std::vector<Mat3> orbit(const Mat3& m) {
  std::vector<Mat3> members;
  members.reserve(finite_group().size());
  for (const auto& g : finite_group()) members.push_back(apply_group_element(g, m));
  std::sort(members.begin(), members.end(), lex_less<Integer>);
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

}  // namespace cubedet
