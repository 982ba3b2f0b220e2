#include "thetapairs/generator.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <set>
#include <utility>

#include "thetapairs/group.hpp"
#include "thetapairs/maps.hpp"

namespace thetapairs {

namespace {

constexpr long kLookaheadWindow = 12;

enum class Outcome { Certified, Exceptional, NotPositive, ParityRejected, FactorBudget };

struct Evaluation {
  Outcome outcome;
  std::optional<PairCertificate> certificate;
};

std::size_t bit_size(const BigRational& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

std::optional<HolmPoint> try_from_jacobian(const CurveConfig& cfg, const ECPoint& point) {
  try {
    HolmPoint h = from_jacobian(cfg, point);
    if (h.x == 0 && h.y == 0) return std::nullopt;
    return h;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ExceptionalPoint) return std::nullopt;
    throw;
  }
}

// Integers whose coprime base splits the numerators and denominators of
// A_x and A_y into small independent pieces.
std::vector<BigInt> factor_hints(const CurveConfig& cfg, const HolmPoint& h) {
  std::vector<BigInt> hints{cfg.k, cfg.l, cfg.angle.r};
  for (const BigRational* z : {&h.x, &h.y}) {
    for (const BigRational& v : {BigRational(*z), BigRational(*z + cfg.beta() - 1), BigRational(*z + cfg.beta() + 1)}) {
      hints.push_back(v.get_num());
      hints.push_back(v.get_den());
    }
  }
  return hints;
}

Evaluation evaluate_candidate(const CurveConfig& cfg, const ECPoint& point, long multiplier,
                              int sign, const FactorOptions& factor) {
  const auto holm = try_from_jacobian(cfg, point);
  if (!holm) return {Outcome::Exceptional, std::nullopt};

  FilterReport report = evaluate_filters(cfg, *holm, point);
  if (!report.positive) return {Outcome::NotPositive, std::nullopt};
  if (!report.parity_ok || !report.gcd_ok) return {Outcome::ParityRejected, std::nullopt};

  auto [area_x, area_y] = areas(cfg, *holm);
  const std::vector<BigInt> hints = factor_hints(cfg, *holm);
  SquarefreeDecomposition sx, sy;
  try {
    sx = squarefree_part(area_x, hints, factor);
    sy = squarefree_part(area_y, hints, factor);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FactorizationBudget) return {Outcome::FactorBudget, std::nullopt};
    throw;
  }

  PairCertificate cert;
  cert.config = cfg;
  cert.multiplier = multiplier;
  cert.sign = sign;
  cert.ec_point = point;
  cert.holm_point = *holm;
  cert.triangle_x = scale_triangle(triangle_from_x(cfg, holm->x), 1 / sx.cofactor);
  cert.triangle_y = scale_triangle(triangle_from_x(cfg, holm->y), 1 / sy.cofactor);
  cert.A_x = std::move(area_x);
  cert.A_y = std::move(area_y);
  cert.N_x = std::move(sx.squarefree_part);
  cert.N_y = std::move(sy.squarefree_part);
  cert.N_x_primes = std::move(sx.primes);
  cert.N_y_primes = std::move(sy.primes);
  cert.filter = std::move(report);
  if (cfg.l * cert.N_x != cfg.k * cert.N_y) {
    throw std::logic_error("filters accepted a point with l*N_x != k*N_y");
  }
  return {Outcome::Certified, std::move(cert)};
}

// Bit size of the first two accepted multiples of q within the window, or
// nullopt when fewer than two appear or the running total exceeds `bound`.
std::optional<std::size_t> lookahead_cost(const CurveConfig& cfg, const ECPoint& q,
                                          std::size_t bound) {
  ECPoint multiple;
  std::size_t cost = 0;
  int hits = 0;
  for (long n = 1; n <= kLookaheadWindow; ++n) {
    multiple = unchecked::add(cfg, multiple, q);
    if (multiple.is_infinity()) return std::nullopt;
    for (int sign : {1, -1}) {
      const ECPoint point = sign > 0 ? multiple : ECPoint(multiple.X(), -multiple.Y());
      const auto holm = try_from_jacobian(cfg, point);
      if (!holm) continue;
      const FilterReport report = evaluate_filters(cfg, *holm, point);
      if (!report.accepted()) continue;
      cost += bit_size(area_of(cfg, holm->x));
      if (cost > bound) return std::nullopt;
      if (++hits == 2) return cost;
    }
  }
  return std::nullopt;
}

std::string combo_label(int c1, const std::string& a, int c2, const std::string& b) {
  auto term = [](int c, const std::string& name, bool first) {
    std::string out;
    if (c < 0) out = "-";
    else if (!first) out = "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c)) + "*";
    return out + name;
  };
  return term(c1, a, true) + term(c2, b, false);
}

}  // namespace

std::vector<SeedChoice> seed_candidates(const CurveConfig& cfg) {
  std::vector<SeedChoice> base;
  base.push_back({"P0", to_jacobian(cfg, tangent_point_p0(cfg)), std::nullopt});
  for (const NinePoint& row : nine_points(cfg)) {
    if (row.name == "P5") continue;
    base.push_back({row.name, row.ec, std::nullopt});
  }

  std::vector<SeedChoice> out;
  auto push_unique = [&out](SeedChoice c) {
    if (c.point.is_infinity()) return;
    for (const SeedChoice& seen : out) {
      if (seen.point == c.point) return;
    }
    out.push_back(std::move(c));
  };
  for (const SeedChoice& c : base) push_unique(c);
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      const ECPoint minus_j = base[j].point.is_infinity()
                                  ? base[j].point
                                  : ECPoint(base[j].point.X(), -base[j].point.Y());
      push_unique({combo_label(1, base[i].label, 1, base[j].label),
                   unchecked::add(cfg, base[i].point, base[j].point), std::nullopt});
      push_unique({combo_label(1, base[i].label, -1, base[j].label),
                   unchecked::add(cfg, base[i].point, minus_j), std::nullopt});
    }
  }
  return out;
}

SeedChoice find_seed(const CurveConfig& cfg) {
  std::optional<SeedChoice> best;
  std::optional<SeedChoice> first_non_torsion;
  for (SeedChoice& candidate : seed_candidates(cfg)) {
    if (is_torsion(cfg, candidate.point)) continue;
    if (!first_non_torsion) first_non_torsion = candidate;
    const std::size_t bound = (best && best->lookahead_cost)
                                  ? *best->lookahead_cost
                                  : std::numeric_limits<std::size_t>::max();
    candidate.lookahead_cost = lookahead_cost(cfg, candidate.point, bound);
    if (candidate.lookahead_cost && (!best || !best->lookahead_cost ||
                                     *candidate.lookahead_cost < *best->lookahead_cost)) {
      best = std::move(candidate);
    }
  }
  if (best) return *best;
  if (first_non_torsion) return *first_non_torsion;

  // Every image and pairwise sum is torsion: try wider combinations.
  const std::vector<SeedChoice> base = [&] {
    std::vector<SeedChoice> b;
    b.push_back({"P0", to_jacobian(cfg, tangent_point_p0(cfg)), std::nullopt});
    for (const NinePoint& row : nine_points(cfg)) {
      if (row.name != "P5") b.push_back({row.name, row.ec, std::nullopt});
    }
    return b;
  }();
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      for (int c1 = -3; c1 <= 3; ++c1) {
        for (int c2 = -3; c2 <= 3; ++c2) {
          if (c1 == 0 || c2 == 0) continue;
          const ECPoint p = unchecked::add(cfg, scalar_mul(cfg, c1, base[i].point),
                                           scalar_mul(cfg, c2, base[j].point));
          if (p.is_infinity() || is_torsion(cfg, p)) continue;
          return {combo_label(c1, base[i].label, c2, base[j].label), p, std::nullopt};
        }
      }
    }
  }
  throw Error(ErrorCode::NoSeedFound, "all bounded combinations of the special points are torsion");
}

std::optional<PairCertificate> certify_point(const CurveConfig& cfg, const ECPoint& point,
                                             long multiplier, int sign,
                                             const FactorOptions& factor) {
  if (!ec_contains(cfg, point)) throw Error(ErrorCode::NotOnCurve, "point is not on E");
  if (point.is_infinity()) return std::nullopt;
  Evaluation e = evaluate_candidate(cfg, point, multiplier, sign, factor);
  if (e.outcome == Outcome::FactorBudget) {
    throw Error(ErrorCode::FactorizationBudget, "square-free part not determined");
  }
  return std::move(e.certificate);
}

GenerateResult run_generation(const CurveConfig& cfg, const GenerateOptions& options,
                              const std::function<void(const PairCertificate&)>& on_certificate) {
  GenerateResult result;
  result.seed = find_seed(cfg);
  const ECPoint& seed = result.seed.point;

  struct Candidate {
    long n;
    int sign;
    ECPoint point;
  };
  std::set<std::pair<BigInt, BigInt>> seen;

  // Returns true once `count` certificates have been emitted.
  auto absorb = [&](Evaluation&& e) {
    switch (e.outcome) {
      case Outcome::Exceptional: ++result.stats.exceptional; return false;
      case Outcome::NotPositive: ++result.stats.not_positive; return false;
      case Outcome::ParityRejected: ++result.stats.parity_rejected; return false;
      case Outcome::FactorBudget: ++result.stats.factor_budget; return false;
      case Outcome::Certified: break;
    }
    PairCertificate& cert = *e.certificate;
    if (options.distinct && !seen.emplace(cert.N_x, cert.N_y).second) {
      ++result.stats.duplicates;
      return false;
    }
    if (on_certificate) on_certificate(cert);
    result.certificates.push_back(std::move(cert));
    return result.certificates.size() >= options.count;
  };

  if (options.count == 0) return result;

  const unsigned threads = std::max(1u, options.threads);
  const long batch_multipliers = threads == 1 ? 1 : static_cast<long>(threads);
  ECPoint multiple;
  for (long n = 1; n <= options.max_multiplier; n += batch_multipliers) {
    std::vector<Candidate> batch;
    for (long m = n; m < n + batch_multipliers && m <= options.max_multiplier; ++m) {
      multiple = unchecked::add(cfg, multiple, seed);
      if (multiple.is_infinity()) continue;
      batch.push_back({m, 1, multiple});
      batch.push_back({m, -1, ECPoint(multiple.X(), -multiple.Y())});
    }
    result.stats.candidates += batch.size();

    if (threads == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) {
        const Candidate& c = batch[i];
        if (absorb(evaluate_candidate(cfg, c.point, c.n, c.sign, options.factor))) {
          result.stats.candidates -= batch.size() - i - 1;
          return result;
        }
      }
      continue;
    }

    std::vector<std::future<Evaluation>> pending;
    pending.reserve(batch.size());
    for (const Candidate& c : batch) {
      pending.push_back(std::async(std::launch::async, [&cfg, &options, c] {
        return evaluate_candidate(cfg, c.point, c.n, c.sign, options.factor);
      }));
    }
    bool done = false;
    for (auto& f : pending) {
      Evaluation e = f.get();
      if (!done) done = absorb(std::move(e));
    }
    if (done) return result;
  }
  result.exhausted = true;
  return result;
}

BudgetExhausted::BudgetExhausted(std::vector<PairCertificate> partial)
    : Error(ErrorCode::BudgetExhausted,
            std::to_string(partial.size()) + " certificate(s) found before the multiplier bound"),
      partial_(std::move(partial)) {}

std::vector<PairCertificate> generate_pairs(const CurveConfig& cfg, std::size_t count,
                                            long max_multiplier) {
  GenerateOptions options;
  options.count = count;
  options.max_multiplier = max_multiplier;
  GenerateResult result = run_generation(cfg, options);
  if (result.exhausted) throw BudgetExhausted(std::move(result.certificates));
  return std::move(result.certificates);
}

namespace {

bool square_free_claim_holds(const BigRational& area, const BigInt& n,
                             const std::vector<BigInt>& primes) {
  if (n < 1) return false;
  BigInt product = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i > 0 && primes[i] <= primes[i - 1]) return false;
    if (!is_probable_prime(primes[i])) return false;
    product *= primes[i];
  }
  if (product != n) return false;
  return area > 0 && rational_sqrt(area / BigRational(n)).has_value();
}

}  // namespace

VerifyResult verify_certificate(const PairCertificate& cert) {
  VerifyResult out;
  auto fail = [&out](std::string reason) {
    if (std::find(out.reasons.begin(), out.reasons.end(), reason) == out.reasons.end()) {
      out.reasons.push_back(std::move(reason));
    }
    out.ok = false;
  };

  try {
    CurveConfig cfg;
    try {
      cfg = make_config(cert.config.k, cert.config.l,
                        make_angle(cert.config.angle.s, cert.config.angle.r));
    } catch (const Error& e) {
      fail("ConfigInvalid");
      return out;
    }

    if (cert.ec_point.is_infinity() || !ec_contains(cfg, cert.ec_point)) {
      fail("NotOnCurve");
      return out;
    }
    if (!holm_contains(cfg, cert.holm_point)) fail("NotOnCurve");

    const auto holm = try_from_jacobian(cfg, cert.ec_point);
    if (!holm || !(*holm == cert.holm_point)) {
      fail("MapMismatch");
      return out;
    }

    const auto [area_x, area_y] = areas(cfg, *holm);
    if (area_x != cert.A_x || area_y != cert.A_y) fail("AreaMismatch");
    if (area_x <= 0 || area_y <= 0) fail("NonPositiveArea");

    if (!square_free_claim_holds(area_x, cert.N_x, cert.N_x_primes) ||
        !square_free_claim_holds(area_y, cert.N_y, cert.N_y_primes)) {
      fail("SquarefreeMismatch");
    }
    if (cfg.l * cert.N_x != cfg.k * cert.N_y) fail("RatioMismatch");
    if (gcd(cfg.l, cert.N_x) != 1 || gcd(cfg.k, cert.N_y) != 1) fail("GcdMismatch");

    for (const ThetaTriangle* t : {&cert.triangle_x, &cert.triangle_y}) {
      if (!is_valid_triangle(*t) || t->cos_theta != cfg.beta()) fail("TriangleInvalid");
    }
    if (cert.triangle_x.normalized_area != BigRational(cert.N_x) ||
        cert.triangle_y.normalized_area != BigRational(cert.N_y)) {
      fail("TriangleAreaMismatch");
    }

    if (!(evaluate_filters(cfg, *holm, cert.ec_point) == cert.filter)) fail("FilterMismatch");
  } catch (const std::exception& e) {
    fail(std::string("InternalError: ") + e.what());
  }
  return out;
}

}  // namespace thetapairs
