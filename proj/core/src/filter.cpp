#include "thetapairs/filter.hpp"

#include "thetapairs/error.hpp"
#include "thetapairs/maps.hpp"

namespace thetapairs {

namespace {

std::optional<long> u_level(const ECPoint& q, const BigInt& p) {
  const Valuation vx = ord_p(q.X(), p);
  const Valuation vy = ord_p(q.Y(), p);
  if (vx.is_infinite() || vy.is_infinite()) return std::nullopt;
  if (vx.value() >= 0 || vx.value() % 2 != 0) return std::nullopt;
  const long m = -vx.value() / 2;
  if (vy.value() != -3 * m) return std::nullopt;
  return m;
}

}  // namespace

bool in_U(const CurveConfig& cfg, const ECPoint& q, const std::map<BigInt, long>& m) {
  if (q.is_infinity()) throw Error(ErrorCode::InfinitePoint, "U-sets contain affine points only");
  if (!ec_contains(cfg, q)) throw Error(ErrorCode::NotOnCurve, "point is not on E");
  for (const auto& [p, level] : m) {
    if (ord_p(q.X(), p) != Valuation(-2 * level)) return false;
    if (ord_p(q.Y(), p) != Valuation(-3 * level)) return false;
  }
  return true;
}

FilterReport evaluate_filters(const CurveConfig& cfg, const HolmPoint& p) {
  return evaluate_filters(cfg, p, to_jacobian(cfg, p));
}

FilterReport evaluate_filters(const CurveConfig& cfg, const HolmPoint& p, const ECPoint& image) {
  const auto [area_x, area_y] = areas(cfg, p);

  FilterReport report;
  report.positive = area_x > 0 && area_y > 0;
  report.parity_ok = true;
  for (const BigInt& prime : cfg.primes) {
    PrimeValuations v{ord_p(area_x, prime), ord_p(area_y, prime)};
    const bool divides_l = cfg.l % prime == 0;
    const Valuation& governing = divides_l ? v.ord_A_x : v.ord_A_y;
    if (!governing.is_even()) report.parity_ok = false;
    report.per_prime.emplace(prime, v);
    report.u_profile.emplace(prime, image.is_infinity() ? std::nullopt : u_level(image, prime));
  }
  report.gcd_ok = true;
  for (const auto& [prime, v] : report.per_prime) {
    const Valuation& in_square_free = cfg.l % prime == 0 ? v.ord_A_x : v.ord_A_y;
    if (!in_square_free.is_infinite() && in_square_free.value() % 2 != 0) report.gcd_ok = false;
  }
  return report;
}

}  // namespace thetapairs
