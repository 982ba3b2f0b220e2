#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetapairs/arith.hpp"

namespace thetapairs {

// cos(theta) = s / r with gcd(s, r) = 1, r > 0 and -r < s < r.
struct Angle {
  BigInt s;
  BigInt r;
  BigRational beta;
};

// Throws NotReduced when gcd(s, r) != 1, AngleOutOfRange when r < 1 or |s| >= r.
Angle make_angle(const BigInt& s, const BigInt& r);

// The ratio k : l, the angle, and the short Weierstrass model
// Y^2 = X^3 + a X + b of the Jacobian of
//   l x (x + beta - 1)(x + beta + 1) = k y (y + beta - 1)(y + beta + 1).
struct CurveConfig {
  BigInt k;
  BigInt l;
  Angle angle;
  BigRational a;
  BigRational b;
  // Primes dividing k*l, ascending.
  std::vector<BigInt> primes;

  const BigRational& beta() const { return angle.beta; }
};

// Throws EqualRatio, NotCoprime, NotSquarefree, NonPositiveInput, or
// SingularCurve (never expected; kept as an explicit guard).
CurveConfig make_config(const BigInt& k, const BigInt& l, const Angle& angle);

struct HolmPoint {
  BigRational x;
  BigRational y;

  friend bool operator==(const HolmPoint&, const HolmPoint&) = default;
};

class ECPoint {
 public:
  ECPoint() = default;  // the zero element
  ECPoint(BigRational X, BigRational Y) : affine_(Affine{std::move(X), std::move(Y)}) {}
  static ECPoint infinity() { return {}; }

  bool is_infinity() const { return !affine_.has_value(); }
  // Precondition: !is_infinity().
  const BigRational& X() const { return affine_->X; }
  const BigRational& Y() const { return affine_->Y; }

  friend bool operator==(const ECPoint& a, const ECPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    return a.X() == b.X() && a.Y() == b.Y();
  }

 private:
  struct Affine {
    BigRational X, Y;
  };
  std::optional<Affine> affine_;
};

// Closed forms for the invariants of the Jacobian as functions of (k, l, beta).
BigRational discriminant(const CurveConfig& cfg);
BigRational j_invariant(const CurveConfig& cfg);

// X^3 + a X + b.
BigRational weierstrass_rhs(const CurveConfig& cfg, const BigRational& X);

bool holm_contains(const CurveConfig& cfg, const HolmPoint& p);
bool ec_contains(const CurveConfig& cfg, const ECPoint& q);

struct NinePoint {
  std::string name;  // "P1" .. "P9"
  HolmPoint holm;    // grid point with coordinates in {-beta-1, 0, -beta+1}
  ECPoint ec;        // image on the Jacobian (P5 -> zero element)
  ECPoint printed;   // the tabulated closed form before correction
  bool corrected = false;
};

// The nine rational points where both cubic factors vanish, paired with their
// Jacobian images. The tabulated P1 image has Y = k(k-l)(-1+beta^2), which is
// off the curve; the stored image is k(k-l)l(-1+beta^2), the negation of P9's,
// and `corrected` is set on that row.
std::vector<NinePoint> nine_points(const CurveConfig& cfg);

// Third intersection of H with its tangent line l x = k y at the origin:
// (-2k beta/(k+l), -2l beta/(k+l)).
HolmPoint tangent_point_p0(const CurveConfig& cfg);

}  // namespace thetapairs
