#include "thetapairs/maps.hpp"

#include "thetapairs/error.hpp"
#include "thetapairs/group.hpp"

namespace thetapairs {

namespace {

void require_on_holm(const CurveConfig& cfg, const HolmPoint& p) {
  if (!holm_contains(cfg, p)) {
    throw Error(ErrorCode::NotOnCurve, "(" + to_string(p.x) + ", " + to_string(p.y) + ") is not on H");
  }
}

ECPoint forward(const CurveConfig& cfg, const HolmPoint& p) {
  const BigRational& b = cfg.beta();
  const BigRational k(cfg.k), l(cfg.l);
  const BigRational& x = p.x;
  const BigRational& y = p.y;
  const BigRational b2 = b * b;

  const BigRational denom = l * x - k * y;
  const BigRational X =
      k * l *
      (-3 * l * y + k * (3 * x + 6 * b - (3 * x + 4 * y) * b2 - 6 * b2 * b) +
       l * b * (-6 + 4 * x * b + 3 * b * (y + 2 * b))) /
      (3 * denom);
  const BigRational inner = k * l * (x - y) * (1 + 2 * (x + y) * b + 3 * b2) -
                            l * l * x * (-1 + b * (x + b)) + k * k * y * (-1 + b * (y + b));
  const BigRational Y = -k * (k - l) * l * (b2 - 1) * inner / (denom * denom);
  return ECPoint(X, Y);
}

}  // namespace

ECPoint to_jacobian(const CurveConfig& cfg, const HolmPoint& p) {
  require_on_holm(cfg, p);
  if (p.x == 0 && p.y == 0) return ECPoint::infinity();
  if (BigRational(cfg.l) * p.x != BigRational(cfg.k) * p.y) return forward(cfg, p);

  // Only P0 remains on the tangent line (and P0 is the origin when beta = 0).
  const BigRational& b = cfg.beta();
  const ECPoint p2 = forward(cfg, HolmPoint{0, 1 - b});
  const ECPoint p8 = forward(cfg, HolmPoint{0, -1 - b});
  return add(cfg, p2, p8);
}

HolmPoint from_jacobian(const CurveConfig& cfg, const ECPoint& q) {
  if (!ec_contains(cfg, q)) {
    throw Error(ErrorCode::NotOnCurve, "(" + to_string(q.X()) + ", " + to_string(q.Y()) + ") is not on E");
  }
  if (q.is_infinity()) return HolmPoint{0, 0};

  const BigRational& b = cfg.beta();
  const BigRational k(cfg.k), l(cfg.l);
  const BigRational kl = k * l;
  const BigRational& X = q.X();
  const BigRational& Y = q.Y();
  const BigRational b2 = b * b;
  const BigRational m = b2 - 1;

  const BigRational denom =
      9 * (k + l) * m * Y +
      b * (kl * (9 * k * k * m * m + 9 * l * l * m * m - 2 * kl * (9 + 5 * b2 * (b2 - 6))) -
           6 * kl * (3 + 5 * b2) * X + 18 * X * X);
  if (denom == 0) {
    throw Error(ErrorCode::ExceptionalPoint,
                "inverse map undefined at (" + to_string(X) + ", " + to_string(Y) + ")");
  }
  const BigRational quartic = 3 + 16 * b2 - 3 * b2 * b2;
  const BigRational x_num =
      -3 * k * m *
      (l * (2 * k * k * b2 * m + 3 * l * l * m * m + kl * quartic) + 6 * b * Y -
       3 * (k + l - (k - 3 * l) * b2) * X);
  const BigRational y_num =
      -3 * l * m *
      (k * (2 * l * l * b2 * m + 3 * k * k * m * m + kl * quartic) + 6 * b * Y -
       3 * (k + l + (3 * k - l) * b2) * X);
  return HolmPoint{x_num / denom, y_num / denom};
}

BigRational area_of(const CurveConfig& cfg, const BigRational& x) {
  const BigRational shifted = x + cfg.beta();
  return x * (shifted * shifted - 1) / BigRational(cfg.angle.r);
}

std::pair<BigRational, BigRational> areas(const CurveConfig& cfg, const HolmPoint& p) {
  require_on_holm(cfg, p);
  if (p.x == 0 && p.y == 0) throw Error(ErrorCode::DegeneratePoint, "both areas vanish at (0, 0)");
  return {area_of(cfg, p.x), area_of(cfg, p.y)};
}

}  // namespace thetapairs
