#pragma once

#include "thetapairs/curve.hpp"

namespace thetapairs {

// Rational triangle with angle theta between side_a and side_b:
//   side_c^2 = side_a^2 + side_b^2 - 2 side_a side_b cos(theta).
// normalized_area = side_a side_b / (2r) = area / (r sin theta).
struct ThetaTriangle {
  BigRational side_a;
  BigRational side_b;
  BigRational side_c;
  BigRational cos_theta;
  BigRational normalized_area;

  friend bool operator==(const ThetaTriangle&, const ThetaTriangle&) = default;
};

// Sides (|(x+b)^2 - 1|, |2x|, 1 + (x+b)^2 - 2(x+b)b); the normalized area is
// x((x+b)^2 - 1)/r. Throws NonPositiveArea unless x((x+b)^2 - 1) > 0.
ThetaTriangle triangle_from_x(const CurveConfig& cfg, const BigRational& x);

// Sides times factor, normalized area times factor^2. Throws NonPositiveInput
// unless factor > 0.
ThetaTriangle scale_triangle(const ThetaTriangle& t, const BigRational& factor);

// Positive sides, law of cosines, and normalized area consistent with the
// sides (r is the denominator of cos_theta).
bool is_valid_triangle(const ThetaTriangle& t);

}  // namespace thetapairs
