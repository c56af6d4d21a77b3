#include "cubedet/curve.hpp"

#include "cubedet/error.hpp"

#include <algorithm>
#include <numeric>

namespace cubedet {

namespace {

Integer dot(const Triple& a, const Triple& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

bool is_zero(const Triple& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool proportional(const Triple& a, const Triple& b) { return is_zero(cross(a, b)); }

Triple combine(const Integer& s, const Triple& a, const Integer& t, const Triple& b) {
  return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
}

void require_on_curve(const CubicForm& f, const Triple& p) {
  if (eval(f, p) != 0) throw Error(ErrorCode::NotOnCurve, "point " + to_string(ProjPoint::from(p)) + " is not on the curve");
}

}  // namespace

CubicForm CubicForm::from_coefficients(const std::array<Integer, 10>& c) {
  if (std::all_of(c.begin(), c.end(), [](const Integer& v) { return v == 0; }))
    throw Error(ErrorCode::InvalidArgument, "cubic form has all coefficients zero");
  return CubicForm{c};
}

ProjPoint ProjPoint::from(const Triple& coords) {
  if (is_zero(coords)) throw Error(ErrorCode::InvalidArgument, "projective point (0, 0, 0)");
  const Integer g = gcd(gcd(coords[0], coords[1]), coords[2]);
  ProjPoint p;
  for (int k = 0; k < 3; ++k) p.c_[k] = coords[k] / g;
  const auto lead = std::find_if(p.c_.begin(), p.c_.end(), [](const Integer& v) { return v != 0; });
  if (*lead < 0)
    for (auto& v : p.c_) v = -v;
  return p;
}

std::string to_string(const ProjPoint& p) {
  return "(" + p.x().str() + ", " + p.y().str() + ", " + p.z().str() + ")";
}

Triple linear_cofactors(const Triple& a, const Triple& b) {
  const auto& [p, q, r] = a;
  const auto& [u, v, w] = b;
  return {q * w - r * v, r * u - p * w, p * v - q * u};
}

CubicForm cubic_from_rows(const Triple& row2, const Triple& row3) {
  const Triple l = linear_cofactors(row2, row3);
  if (is_zero(l))
    throw Error(ErrorCode::DegenerateRows, "rows are zero or proportional");
  const auto& [p, q, r] = row2;
  const auto& [u, v, w] = row3;
  const Integer dx = cube(q * w) - cube(r * v);
  const Integer dy = cube(r * u) - cube(p * w);
  const Integer dz = cube(p * v) - cube(q * u);
  const auto& [lx, ly, lz] = l;
  CubicForm f;
  f.coeffs = {
      dx - cube(lx),           // x³
      -3 * lx * lx * ly,       // x²y
      -3 * lx * lx * lz,       // x²z
      -3 * lx * ly * ly,       // xy²
      -6 * lx * ly * lz,       // xyz
      -3 * lx * lz * lz,       // xz²
      dy - cube(ly),           // y³
      -3 * ly * ly * lz,       // y²z
      -3 * ly * lz * lz,       // yz²
      dz - cube(lz),           // z³
  };
  return f;
}

Integer eval(const CubicForm& f, const Triple& pt) {
  const auto& c = f.coeffs;
  const auto& [x, y, z] = pt;
  return x * (x * (c[0] * x + c[1] * y + c[2] * z) + y * (c[3] * y + c[4] * z) + c[5] * z * z) +
         y * y * (c[6] * y + c[7] * z) + z * z * (c[8] * y + c[9] * z);
}

Triple gradient(const CubicForm& f, const Triple& pt) {
  const auto& c = f.coeffs;
  const auto& [x, y, z] = pt;
  return {
      3 * c[0] * x * x + 2 * c[1] * x * y + 2 * c[2] * x * z + c[3] * y * y + c[4] * y * z +
          c[5] * z * z,
      c[1] * x * x + 2 * c[3] * x * y + c[4] * x * z + 3 * c[6] * y * y + 2 * c[7] * y * z +
          c[8] * z * z,
      c[2] * x * x + c[4] * x * y + 2 * c[5] * x * z + c[7] * y * y + 2 * c[8] * y * z +
          3 * c[9] * z * z,
  };
}

EvalGradient eval_and_gradient(const CubicForm& f, const ProjPoint& p) {
  return {eval(f, p.coords()), gradient(f, p.coords())};
}

Triple default_tangent_direction(const Triple& g, const Triple& p) {
  if (is_zero(g)) throw Error(ErrorCode::SingularPoint, "gradient vanishes");
  // Indices ordered by decreasing |g_i|; ties keep index order.
  std::array<int, 3> idx{0, 1, 2};
  std::stable_sort(idx.begin(), idx.end(), [&g](int a, int b) { return abs(g[a]) > abs(g[b]); });
  // Candidates orthogonal to g: swap two components and negate one. The
  // three candidates span the tangent plane, so one of them is not a
  // multiple of p.
  const std::array<std::pair<int, int>, 3> pairs{{{idx[0], idx[1]}, {idx[0], idx[2]}, {idx[1], idx[2]}}};
  for (const auto& [a, b] : pairs) {
    Triple d{0, 0, 0};
    d[a] = g[b];
    d[b] = -g[a];
    if (!is_zero(d) && !proportional(d, p)) return d;
  }
  throw Error(ErrorCode::SingularPoint, "no tangent direction independent of the point");
}

ProjPoint tangent_third_point(const CubicForm& f, const ProjPoint& p, const Triple& d) {
  const Triple& pt = p.coords();
  require_on_curve(f, pt);
  const Triple g = gradient(f, pt);
  if (is_zero(g)) throw Error(ErrorCode::SingularPoint, "point " + to_string(p) + " is singular");
  if (is_zero(d) || dot(g, d) != 0 || proportional(d, pt))
    throw Error(ErrorCode::InvalidArgument, "direction is not a tangent direction at " + to_string(p));

  const Integer c3 = eval(f, d);
  const Integer c2 = dot(gradient(f, d), pt);
  if (c2 == 0 && c3 == 0)
    throw Error(ErrorCode::LineOnCurve, "tangent line at " + to_string(p) + " lies on the curve");
  if (c2 == 0)
    throw Error(ErrorCode::InflectionPoint, "point " + to_string(p) + " is a flex; third point coincides");
  return ProjPoint::from(combine(c3, pt, -c2, d));
}

ProjPoint tangent_third_point(const CubicForm& f, const ProjPoint& p) {
  require_on_curve(f, p.coords());
  return tangent_third_point(f, p, default_tangent_direction(gradient(f, p.coords()), p.coords()));
}

ProjPoint chord_third_point(const CubicForm& f, const ProjPoint& p1, const ProjPoint& p2) {
  const Triple& a = p1.coords();
  const Triple& b = p2.coords();
  if (proportional(a, b)) throw Error(ErrorCode::InvalidArgument, "chord endpoints coincide");
  require_on_curve(f, a);
  require_on_curve(f, b);
  // F(a + λb) = λ(∇F(a)·b) + λ²(∇F(b)·a)
  const Integer c1 = dot(gradient(f, a), b);
  const Integer c2 = dot(gradient(f, b), a);
  if (c1 == 0 && c2 == 0)
    throw Error(ErrorCode::LineOnCurve, "chord lies on the curve");
  return ProjPoint::from(combine(c2, a, -c1, b));
}

}  // namespace cubedet
