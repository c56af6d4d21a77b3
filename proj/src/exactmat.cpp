#include "cubedet/exactmat.hpp"

#include "cubedet/error.hpp"

namespace cubedet {

PropertyReport check_property(const Mat3& m) {
  PropertyReport report;
  report.det = det3(m);
  report.cube_det = det3(cube_map(m));
  report.holds = report.cube_det == cube(report.det);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const Integer& v = m(i, j);
      if (v == 0) report.has_zero = true;
      if (v == 1 || v == -1) report.has_unit = true;
    }
  return report;
}

std::vector<ReductionStep> default_reduction_order() {
  return {{Side::Row, 0}, {Side::Row, 1}, {Side::Row, 2},
          {Side::Col, 0}, {Side::Col, 1}, {Side::Col, 2}};
}

RowColFactorization normalize_gcd(const Mat3& m,
                                  std::span<const ReductionStep> order) {
  RowColFactorization out;
  out.reduced = m;
  for (const auto& step : order) {
    if (step.index < 0 || step.index > 2)
      throw Error(ErrorCode::InvalidArgument, "reduction index out of range");
    Integer g = 0;
    for (int t = 0; t < 3; ++t) {
      const Integer& v = step.side == Side::Row ? out.reduced(step.index, t)
                                                : out.reduced(t, step.index);
      g = gcd(g, v);
    }
    if (g == 0) {
      throw Error(ErrorCode::ZeroRowOrColumn,
                  std::string(step.side == Side::Row ? "row " : "column ") +
                      std::to_string(step.index + 1) + " is identically zero");
    }
    if (step.side == Side::Row) {
      out.reduced.row(step.index) /= g;
      out.row_gcds[step.index] *= g;
    } else {
      out.reduced.col(step.index) /= g;
      out.col_gcds[step.index] *= g;
    }
    out.total_factor *= g;
  }
  return out;
}

RowColFactorization normalize_gcd(const Mat3& m) {
  const auto order = default_reduction_order();
  return normalize_gcd(m, order);
}

namespace {

bool is_separator(char c) {
  return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> values;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_separator(text[j])) ++j;
    values.push_back(parse_integer(text.substr(i, j - i)));
    i = j;
  }
  return values;
}

std::array<Integer, 3> parse_triple(std::string_view text) {
  auto values = parse_integer_list(text);
  if (values.size() != 3)
    throw Error(ErrorCode::Parse, "expected 3 integers, got " +
                                      std::to_string(values.size()));
  return {values[0], values[1], values[2]};
}

Mat3 parse_matrix(std::string_view text) {
  Mat3 m;
  int row = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(';', start);
    const auto piece = text.substr(start, end == std::string_view::npos
                                              ? std::string_view::npos
                                              : end - start);
    if (row == 3) throw Error(ErrorCode::Parse, "matrix has more than 3 rows");
    const auto values = parse_integer_list(piece);
    if (values.size() != 3) {
      throw Error(ErrorCode::Parse, "matrix row " + std::to_string(row + 1) +
                                        " has " + std::to_string(values.size()) +
                                        " entries, expected 3");
    }
    for (int j = 0; j < 3; ++j) m(row, j) = values[j];
    ++row;
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  if (row != 3)
    throw Error(ErrorCode::Parse, "matrix has " + std::to_string(row) + " rows, expected 3");
  return m;
}

std::string format_matrix(const Mat3& m) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (i) out += "; ";
    for (int j = 0; j < 3; ++j) {
      if (j) out += ' ';
      out += m(i, j).str();
    }
  }
  return out;
}

}  // namespace cubedet
