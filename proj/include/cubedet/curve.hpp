#pragma once

#include "cubedet/integer.hpp"

#include <array>
#include <optional>
#include <string>

namespace cubedet {

using Triple = std::array<Integer, 3>;

/// Ternary cubic form. Coefficients are indexed by the monomials
/// x³, x²y, x²z, xy², xyz, xz², y³, y²z, yz², z³.
struct CubicForm {
  std::array<Integer, 10> coeffs;

  /// Throws InvalidArgument when every coefficient is zero.
  static CubicForm from_coefficients(const std::array<Integer, 10>& c);

  friend bool operator==(const CubicForm&, const CubicForm&) = default;
};

/// Primitive projective point: gcd of coordinates is 1 and the first
/// nonzero coordinate is positive.
class ProjPoint {
 public:
  /// Normalizes; throws InvalidArgument for (0, 0, 0).
  static ProjPoint from(const Triple& coords);
  static ProjPoint from(const Integer& x, const Integer& y, const Integer& z) {
    return from(Triple{x, y, z});
  }

  const Triple& coords() const { return c_; }
  const Integer& x() const { return c_[0]; }
  const Integer& y() const { return c_[1]; }
  const Integer& z() const { return c_[2]; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  Triple c_;
};

std::string to_string(const ProjPoint& p);

/// The form obtained by eliminating k from
///   (qw-rv)x + (ru-pw)y + (pv-qu)z = k
///   (q³w³-r³v³)x³ + (r³u³-p³w³)y³ + (p³v³-q³u³)z³ = k³
/// i.e. the cube-cofactor diagonal minus the cube of the linear form.
/// Both rows lie on it. Throws DegenerateRows for zero or proportional rows.
CubicForm cubic_from_rows(const Triple& row2, const Triple& row3);

/// Cofactor vector (qw-rv, ru-pw, pv-qu) of the first row.
Triple linear_cofactors(const Triple& row2, const Triple& row3);

Integer eval(const CubicForm& f, const Triple& p);
Triple gradient(const CubicForm& f, const Triple& p);

struct EvalGradient {
  Integer value;
  Triple gradient;
};

EvalGradient eval_and_gradient(const CubicForm& f, const ProjPoint& p);

/// Integer direction d with grad·d = 0 and d not proportional to p, built
/// from the two largest gradient components (e.g. (g₂, -g₁, 0)).
Triple default_tangent_direction(const Triple& grad, const Triple& p);

/// Third intersection of the tangent line at p with the curve F = 0.
///
/// Along p + λd the form is F(d)λ³ + (∇F(d)·p)λ², so the new point is
/// F(d)·p - (∇F(d)·p)·d. Throws NotOnCurve, SingularPoint, InflectionPoint
/// (the line meets the curve at p only) or LineOnCurve.
ProjPoint tangent_third_point(const CubicForm& f, const ProjPoint& p);

/// Same, along a caller-supplied tangent direction. Throws InvalidArgument
/// if `direction` is not tangent at p or is proportional to p.
ProjPoint tangent_third_point(const CubicForm& f, const ProjPoint& p, const Triple& direction);

/// Third intersection of the chord through two distinct points of the curve.
/// For the determinant cubic with the base rows as endpoints this gives a
/// point with k = 0; kept as a diagnostic. Throws LineOnCurve when the chord
/// lies on the curve and InvalidArgument for coincident points.
ProjPoint chord_third_point(const CubicForm& f, const ProjPoint& p1, const ProjPoint& p2);

}  // namespace cubedet
