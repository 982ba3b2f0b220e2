#pragma once

#include "thetapairs/curve.hpp"

namespace thetapairs {

// Chord-and-tangent group law on Y^2 = X^3 + aX + b with the point at
// infinity as identity. Every entry point throws NotOnCurve for inputs that
// fail ec_contains.

ECPoint neg(const CurveConfig& cfg, const ECPoint& p);
ECPoint add(const CurveConfig& cfg, const ECPoint& p, const ECPoint& q);
ECPoint dbl(const CurveConfig& cfg, const ECPoint& p);
// [n]P by double-and-add; negative n goes through neg.
ECPoint scalar_mul(const CurveConfig& cfg, long n, const ECPoint& p);

// Rational torsion has order at most 12, so P is torsion iff one of
// [1]P .. [12]P is the identity.
bool is_torsion(const CurveConfig& cfg, const ECPoint& p);

namespace unchecked {
// The same law without the membership check; callers guarantee inputs are on
// the curve (used in inner loops where the check would double the cost).
ECPoint add(const CurveConfig& cfg, const ECPoint& p, const ECPoint& q);
ECPoint dbl(const CurveConfig& cfg, const ECPoint& p);
}  // namespace unchecked

}  // namespace thetapairs
