#include "thetapairs/group.hpp"

#include <cstdlib>

#include "thetapairs/error.hpp"

namespace thetapairs {

namespace {

void require_on_curve(const CurveConfig& cfg, const ECPoint& p) {
  if (!ec_contains(cfg, p)) {
    throw Error(ErrorCode::NotOnCurve, "(" + to_string(p.X()) + ", " + to_string(p.Y()) + ")");
  }
}

ECPoint from_slope(const BigRational& slope, const ECPoint& p, const BigRational& other_x) {
  BigRational x = slope * slope - p.X() - other_x;
  BigRational y = slope * (p.X() - x) - p.Y();
  return ECPoint(std::move(x), std::move(y));
}

}  // namespace

namespace unchecked {

ECPoint dbl(const CurveConfig& cfg, const ECPoint& p) {
  if (p.is_infinity() || p.Y() == 0) return ECPoint::infinity();
  const BigRational slope = (3 * p.X() * p.X() + cfg.a) / (2 * p.Y());
  return from_slope(slope, p, p.X());
}

ECPoint add(const CurveConfig& cfg, const ECPoint& p, const ECPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  if (p.X() == q.X()) {
    if (p.Y() == q.Y()) return unchecked::dbl(cfg, p);
    return ECPoint::infinity();  // q = -p
  }
  const BigRational slope = (q.Y() - p.Y()) / (q.X() - p.X());
  return from_slope(slope, p, q.X());
}

}  // namespace unchecked

ECPoint neg(const CurveConfig& cfg, const ECPoint& p) {
  require_on_curve(cfg, p);
  if (p.is_infinity()) return p;
  return ECPoint(p.X(), -p.Y());
}

ECPoint add(const CurveConfig& cfg, const ECPoint& p, const ECPoint& q) {
  require_on_curve(cfg, p);
  require_on_curve(cfg, q);
  return unchecked::add(cfg, p, q);
}

ECPoint dbl(const CurveConfig& cfg, const ECPoint& p) {
  require_on_curve(cfg, p);
  return unchecked::dbl(cfg, p);
}

ECPoint scalar_mul(const CurveConfig& cfg, long n, const ECPoint& p) {
  require_on_curve(cfg, p);
  ECPoint base = n < 0 ? neg(cfg, p) : p;
  unsigned long k = n < 0 ? 0ul - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  ECPoint result;
  while (k != 0) {
    if (k & 1ul) result = unchecked::add(cfg, result, base);
    k >>= 1;
    if (k != 0) base = unchecked::dbl(cfg, base);
  }
  return result;
}

bool is_torsion(const CurveConfig& cfg, const ECPoint& p) {
  require_on_curve(cfg, p);
  ECPoint multiple = p;
  for (int n = 1; n <= 12; ++n) {
    if (multiple.is_infinity()) return true;
    multiple = unchecked::add(cfg, multiple, p);
  }
  return false;
}

}  // namespace thetapairs
