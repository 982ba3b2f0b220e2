#pragma once

#include <utility>

#include "thetapairs/curve.hpp"

namespace thetapairs {

// Birational maps between the Holm cubic H and its Jacobian E, with the
// origin of H sent to the zero element.
//
// Forward: X = kl(-3ly + k(3x + 6b - (3x + 4y)b^2 - 6b^3) + l b(-6 + 4x b + 3b(y + 2b))) / (3lx - 3ky)
//          Y = -k(k-l) l (b^2-1) (kl(x-y)(1 + 2(x+y)b + 3b^2) - l^2 x(-1 + b(x+b))
//                                  + k^2 y(-1 + b(y+b))) / (lx - ky)^2
// The line lx = ky is the tangent at the origin and meets H again only at
// P0 = tangent_point_p0(cfg); that point is mapped through the chord x = 0,
// whose three points satisfy img(P0) = img(P2) + img(P8).
//
// Throws NotOnCurve for points off H.
ECPoint to_jacobian(const CurveConfig& cfg, const HolmPoint& p);

// Inverse: x = 3k(1-b^2)(l(2k^2 b^2(b^2-1) + 3l^2(b^2-1)^2 + kl(3 + 16b^2 - 3b^4))
//                       + 6bY - 3(k + l - (k - 3l)b^2)X) / D
//          y = 3l(1-b^2)(k(2l^2 b^2(b^2-1) + 3k^2(b^2-1)^2 + kl(3 + 16b^2 - 3b^4))
//                       + 6bY - 3(k + l + (3k - l)b^2)X) / D
//          D = 9(k+l)(b^2-1)Y + b(kl(9k^2(b^2-1)^2 + 9l^2(b^2-1)^2 - 2kl(9 + 5b^2(b^2-6)))
//                                 - 6kl(3 + 5b^2)X + 18X^2)
// Infinity maps to (0, 0). Throws NotOnCurve, or ExceptionalPoint when D = 0.
HolmPoint from_jacobian(const CurveConfig& cfg, const ECPoint& q);

// (A_x, A_y) = (x((x+b)^2 - 1)/r, y((y+b)^2 - 1)/r); l A_x = k A_y on H.
// Throws NotOnCurve, or DegeneratePoint at the origin.
std::pair<BigRational, BigRational> areas(const CurveConfig& cfg, const HolmPoint& p);

// x((x+b)^2 - 1)/r for any rational x (no curve membership implied).
BigRational area_of(const CurveConfig& cfg, const BigRational& x);

}  // namespace thetapairs
