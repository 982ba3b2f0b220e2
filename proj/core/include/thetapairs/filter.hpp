#pragma once

#include <map>
#include <optional>

#include "thetapairs/curve.hpp"

namespace thetapairs {

struct PrimeValuations {
  Valuation ord_A_x;
  Valuation ord_A_y;

  friend bool operator==(const PrimeValuations&, const PrimeValuations&) = default;
};

struct FilterReport {
  bool positive = false;
  // ord_p(A_x) even for every p | l and ord_p(A_y) even for every p | k.
  // (Both valuations cannot be even at once: they differ by ord_p(l/k) = +-1.)
  bool parity_ok = false;
  // gcd(l, N_x) = 1 and gcd(k, N_y) = 1, read off the valuations at S:
  // p divides the square-free part exactly when the valuation is odd.
  bool gcd_ok = false;
  std::map<BigInt, PrimeValuations> per_prime;
  // m when ord_p(X) = -2m and ord_p(Y) = -3m with m >= 1, else nullopt.
  std::map<BigInt, std::optional<long>> u_profile;

  bool accepted() const { return positive && parity_ok && gcd_ok; }

  friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

// ord_p(X) = -2 m_p and ord_p(Y) = -3 m_p at every listed prime.
// Throws InfinitePoint for the zero element, NotOnCurve off the curve.
bool in_U(const CurveConfig& cfg, const ECPoint& q, const std::map<BigInt, long>& m);

// Throws DegeneratePoint at (0, 0) and NotOnCurve off H.
FilterReport evaluate_filters(const CurveConfig& cfg, const HolmPoint& p);
// As above when the Jacobian image of p is already known.
FilterReport evaluate_filters(const CurveConfig& cfg, const HolmPoint& p, const ECPoint& image);

}  // namespace thetapairs
