#include "thetapairs/curve.hpp"

#include "thetapairs/error.hpp"
#include "thetapairs/factor.hpp"

namespace thetapairs {

Angle make_angle(const BigInt& s, const BigInt& r) {
  if (r < 1) throw Error(ErrorCode::AngleOutOfRange, "denominator must be positive");
  if (gcd(s, r) != 1) {
    throw Error(ErrorCode::NotReduced, to_string(s) + "/" + to_string(r) + " is not in lowest terms");
  }
  if (abs(s) >= r) {
    throw Error(ErrorCode::AngleOutOfRange,
                "cos = " + to_string(s) + "/" + to_string(r) + " is outside (-1, 1)");
  }
  return Angle{s, r, make_rational(s, r)};
}

namespace {

bool is_squarefree(const BigInt& n) {
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

// The recurring polynomial pieces of the closed forms.
struct Pieces {
  BigRational k, l, kl, beta2, m;  // m = -1 + beta^2
  BigRational three_plus;          // 3 + beta^2
  BigRational cubic_term;          // 2kl b^2 (b^2-9)^2 + 27k^2 m^2 + 27l^2 m^2
};

Pieces pieces(const BigInt& k_in, const BigInt& l_in, const BigRational& beta) {
  Pieces p;
  p.k = k_in;
  p.l = l_in;
  p.kl = p.k * p.l;
  p.beta2 = beta * beta;
  p.m = p.beta2 - 1;
  p.three_plus = 3 + p.beta2;
  const BigRational nine_minus = p.beta2 - 9;
  p.cubic_term = 2 * p.kl * p.beta2 * nine_minus * nine_minus + 27 * p.k * p.k * p.m * p.m +
                 27 * p.l * p.l * p.m * p.m;
  return p;
}

BigRational pow6(const BigRational& v) {
  const BigRational v2 = v * v;
  return v2 * v2 * v2;
}

}  // namespace

CurveConfig make_config(const BigInt& k, const BigInt& l, const Angle& angle) {
  if (k < 1 || l < 1) throw Error(ErrorCode::NonPositiveInput, "k and l must be positive");
  if (k == l) throw Error(ErrorCode::EqualRatio, "k = l = " + to_string(k));
  if (gcd(k, l) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + to_string(k) + ", " + to_string(l) + ") != 1");
  }
  if (!is_squarefree(k)) throw Error(ErrorCode::NotSquarefree, "k = " + to_string(k));
  if (!is_squarefree(l)) throw Error(ErrorCode::NotSquarefree, "l = " + to_string(l));

  CurveConfig cfg;
  cfg.k = k;
  cfg.l = l;
  cfg.angle = angle;
  const Pieces p = pieces(k, l, angle.beta);
  const BigRational k2l2 = p.kl * p.kl;
  cfg.a = -k2l2 * p.three_plus * p.three_plus / 3;
  cfg.b = k2l2 * p.cubic_term / 27;
  for (const auto& [prime, e] : factorize(k * l)) cfg.primes.push_back(prime);

  if (discriminant(cfg) == 0) throw Error(ErrorCode::SingularCurve, "zero discriminant");
  return cfg;
}

BigRational discriminant(const CurveConfig& cfg) {
  const Pieces p = pieces(cfg.k, cfg.l, cfg.beta());
  const BigRational k2l2 = p.kl * p.kl;
  const BigRational inner = -4 * k2l2 * pow6(p.three_plus) + p.cubic_term * p.cubic_term;
  return BigRational(-16, 27) * k2l2 * k2l2 * inner;
}

BigRational j_invariant(const CurveConfig& cfg) {
  const Pieces p = pieces(cfg.k, cfg.l, cfg.beta());
  const BigRational k2l2 = p.kl * p.kl;
  const BigRational numer = -6912 * k2l2 * pow6(p.three_plus);
  const BigRational denom = -4 * k2l2 * pow6(p.three_plus) + p.cubic_term * p.cubic_term;
  return numer / denom;
}

BigRational weierstrass_rhs(const CurveConfig& cfg, const BigRational& X) {
  return (X * X + cfg.a) * X + cfg.b;
}

bool holm_contains(const CurveConfig& cfg, const HolmPoint& pt) {
  const BigRational& beta = cfg.beta();
  const BigRational lhs = BigRational(cfg.l) * pt.x * (pt.x + beta - 1) * (pt.x + beta + 1);
  const BigRational rhs = BigRational(cfg.k) * pt.y * (pt.y + beta - 1) * (pt.y + beta + 1);
  return lhs == rhs;
}

bool ec_contains(const CurveConfig& cfg, const ECPoint& q) {
  if (q.is_infinity()) return true;
  return q.Y() * q.Y() == weierstrass_rhs(cfg, q.X());
}

std::vector<NinePoint> nine_points(const CurveConfig& cfg) {
  const BigRational& b = cfg.beta();
  const BigRational k(cfg.k), l(cfg.l);
  const BigRational kl = k * l;
  const BigRational m = b * b - 1;  // -1 + beta^2
  const BigRational lo = -b - 1, mid = 0, hi = -b + 1;
  const BigRational third(1, 3);

  auto row = [](std::string name, BigRational x, BigRational y, ECPoint ec) {
    NinePoint p{std::move(name), HolmPoint{std::move(x), std::move(y)}, ec, ec, false};
    return p;
  };

  std::vector<NinePoint> rows;
  rows.reserve(9);

  NinePoint p1 = row("P1", lo, hi, ECPoint(third * kl * (3 + b * b), k * (k - l) * l * m));
  p1.printed = ECPoint(third * kl * (3 + b * b), k * (k - l) * m);
  p1.corrected = !(p1.printed == p1.ec);
  rows.push_back(std::move(p1));

  rows.push_back(row("P2", mid, hi,
                     ECPoint(third * l * (3 * l * (1 + b) * (1 + b) - 2 * k * b * (3 + b)),
                             (k - l) * l * (1 + b) * (k * (b - 1) - l * (1 + b) * (1 + b)))));
  rows.push_back(row("P3", hi, hi,
                     ECPoint(third * kl * (-3 + (b - 6) * b), kl * (k + l) * m)));
  rows.push_back(row("P4", lo, mid,
                     ECPoint(third * k * (3 * k * (b - 1) * (b - 1) - 2 * l * (b - 3) * b),
                             k * (k - l) * (b - 1) * (l + k * (b - 1) * (b - 1) + l * b))));
  rows.push_back(row("P5", mid, mid, ECPoint::infinity()));
  rows.push_back(row("P6", hi, mid,
                     ECPoint(third * k * (3 * k * (1 + b) * (1 + b) - 2 * l * b * (3 + b)),
                             k * (k - l) * (1 + b) * (l - l * b + k * (1 + b) * (1 + b)))));
  rows.push_back(row("P7", lo, lo,
                     ECPoint(third * kl * (-3 + b * (6 + b)), -kl * (k + l) * m)));
  rows.push_back(row("P8", mid, lo,
                     ECPoint(third * l * (3 * l * (b - 1) * (b - 1) - 2 * k * (b - 3) * b),
                             -(k - l) * l * (b - 1) * (l * (b - 1) * (b - 1) + k * (1 + b)))));
  rows.push_back(row("P9", hi, lo,
                     ECPoint(third * kl * (3 + b * b), -k * (k - l) * l * m)));
  return rows;
}

HolmPoint tangent_point_p0(const CurveConfig& cfg) {
  const BigRational sum = BigRational(cfg.k + cfg.l);
  return HolmPoint{-2 * BigRational(cfg.k) * cfg.beta() / sum,
                   -2 * BigRational(cfg.l) * cfg.beta() / sum};
}

}  // namespace thetapairs
