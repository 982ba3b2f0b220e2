#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "thetapairs/error.hpp"
#include "thetapairs/group.hpp"

using namespace thetapairs;
using testing::cfg;

namespace {

ECPoint image(const CurveConfig& c, const char* name) {
  for (const NinePoint& p : nine_points(c)) {
    if (p.name == name) return p.ec;
  }
  throw std::logic_error(name);
}

}  // namespace

TEST_CASE("neg") {
  const CurveConfig c = cfg(1, 2, 1, 2);
  const ECPoint p3 = image(c, "P3");
  CHECK(neg(c, p3) == ECPoint(oracle::rat(-23, 6), oracle::rat(9, 2)));
  CHECK(neg(c, neg(c, p3)) == p3);
  CHECK(neg(c, ECPoint::infinity()).is_infinity());
  CHECK_THROWS_AS(neg(c, ECPoint(1, 1)), Error);
}

TEST_CASE("add matches an independent group law") {
  const CurveConfig c = cfg(2, 3, 3, 5);
  const ECPoint p = image(c, "P3"), q = image(c, "P4");
  oracle::Pt op{false, p.X(), p.Y()}, oq{false, q.X(), q.Y()};
  ECPoint acc = p;
  oracle::Pt oacc = op;
  for (int i = 0; i < 8; ++i) {
    acc = add(c, acc, q);
    oacc = oracle::ec_add(c.a, oacc, oq);
    REQUIRE(acc.is_infinity() == oacc.inf);
    if (!acc.is_infinity()) {
      CHECK(acc.X() == oacc.x);
      CHECK(acc.Y() == oacc.y);
    }
  }
}

TEST_CASE("identity, inverse, P1 + P9 = O") {
  for (const oracle::Config& o : oracle::random_configs(40, 31)) {
    const CurveConfig c = cfg(o.k, o.l, o.s, o.r);
    const ECPoint p = image(c, "P3");
    CHECK(add(c, p, ECPoint::infinity()) == p);
    CHECK(add(c, ECPoint::infinity(), p) == p);
    CHECK(add(c, p, neg(c, p)).is_infinity());
    CHECK(add(c, image(c, "P1"), image(c, "P9")).is_infinity());
  }
}

TEST_CASE("scalar_mul") {
  const CurveConfig c = cfg(1, 2, 1, 2);
  const ECPoint p = image(c, "P3");
  CHECK(scalar_mul(c, 0, p).is_infinity());
  CHECK(scalar_mul(c, 1, p) == p);
  CHECK(scalar_mul(c, -1, p) == neg(c, p));
  ECPoint repeated;
  for (int n = 1; n <= 9; ++n) {
    repeated = add(c, repeated, p);
    CHECK(scalar_mul(c, n, p) == repeated);
    CHECK(dbl(c, scalar_mul(c, n, p)) == scalar_mul(c, 2 * n, p));
  }
  CHECK_THROWS_AS(scalar_mul(c, 3, ECPoint(1, 2)), Error);
}

TEST_CASE("torsion") {
  const CurveConfig c = cfg(1, 2, 1, 2);
  CHECK(is_torsion(c, ECPoint::infinity()));
  CHECK_FALSE(is_torsion(c, image(c, "P3")));
  // cfg(1, 5, 2/5) has the rational 2-torsion point (-173/15, 0).
  const CurveConfig t = cfg(1, 5, 2, 5);
  const ECPoint two(oracle::rat(-173, 15), 0);
  REQUIRE(ec_contains(t, two));
  CHECK(is_torsion(t, two));
  CHECK(dbl(t, two).is_infinity());
}

TEST_CASE("group axioms on random small multiples") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<long> small(-6, 6);
  for (const oracle::Config& o : oracle::random_configs(6, 43)) {
    const CurveConfig c = cfg(o.k, o.l, o.s, o.r);
    const ECPoint g = image(c, "P3"), h = image(c, "P2");
    for (int i = 0; i < 6; ++i) {
      const ECPoint p = add(c, scalar_mul(c, small(rng), g), scalar_mul(c, small(rng), h));
      const ECPoint q = scalar_mul(c, small(rng), g);
      const ECPoint r = scalar_mul(c, small(rng), h);
      CHECK(ec_contains(c, p));
      CHECK(add(c, p, q) == add(c, q, p));
      CHECK(add(c, add(c, p, q), r) == add(c, p, add(c, q, r)));
      const long m = small(rng), n = small(rng);
      CHECK(scalar_mul(c, m + n, p) == add(c, scalar_mul(c, m, p), scalar_mul(c, n, p)));
    }
  }
}
