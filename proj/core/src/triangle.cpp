#include "thetapairs/triangle.hpp"

#include "thetapairs/error.hpp"

namespace thetapairs {

ThetaTriangle triangle_from_x(const CurveConfig& cfg, const BigRational& x) {
  const BigRational& b = cfg.beta();
  const BigRational shifted = x + b;
  const BigRational quad = shifted * shifted - 1;
  if (x * quad <= 0) {
    throw Error(ErrorCode::NonPositiveArea, "x((x+b)^2 - 1) <= 0 at x = " + to_string(x));
  }
  ThetaTriangle t;
  t.side_a = abs(quad);
  t.side_b = abs(2 * x);
  t.side_c = 1 + shifted * shifted - 2 * shifted * b;
  t.cos_theta = b;
  t.normalized_area = x * quad / BigRational(cfg.angle.r);
  return t;
}

ThetaTriangle scale_triangle(const ThetaTriangle& t, const BigRational& factor) {
  if (factor <= 0) throw Error(ErrorCode::NonPositiveInput, "scale factor " + to_string(factor));
  ThetaTriangle out = t;
  out.side_a *= factor;
  out.side_b *= factor;
  out.side_c *= factor;
  out.normalized_area *= factor * factor;
  return out;
}

bool is_valid_triangle(const ThetaTriangle& t) {
  if (t.side_a <= 0 || t.side_b <= 0 || t.side_c <= 0) return false;
  if (t.cos_theta <= -1 || t.cos_theta >= 1) return false;
  const BigRational law = t.side_a * t.side_a + t.side_b * t.side_b -
                          2 * t.side_a * t.side_b * t.cos_theta;
  if (t.side_c * t.side_c != law) return false;
  const BigRational r(t.cos_theta.get_den());
  return t.normalized_area == t.side_a * t.side_b / (2 * r);
}

}  // namespace thetapairs
