#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "thetapairs/curve.hpp"
#include "thetapairs/error.hpp"
#include "thetapairs/factor.hpp"
#include "thetapairs/filter.hpp"
#include "thetapairs/triangle.hpp"

namespace thetapairs {

// Audit trail from a point on the Jacobian to a pair (N_x, N_y) of square-free
// integers with l N_x = k N_y, each witnessed by a rational theta-triangle of
// that normalized area.
struct PairCertificate {
  CurveConfig config;
  long multiplier = 0;  // n in sign * [n] seed
  int sign = 1;
  ECPoint ec_point;
  HolmPoint holm_point;
  BigRational A_x;
  BigRational A_y;
  BigInt N_x;
  BigInt N_y;
  std::vector<BigInt> N_x_primes;  // distinct, ascending; product is N_x
  std::vector<BigInt> N_y_primes;
  ThetaTriangle triangle_x;  // normalized_area == N_x
  ThetaTriangle triangle_y;  // normalized_area == N_y
  FilterReport filter;
};

struct SeedChoice {
  std::string label;  // e.g. "P3", "P0+P8", "2*P1-3*P4"
  ECPoint point;
  // Bit size of the first two accepted multiples in the look-ahead window;
  // nullopt when fewer than two were seen.
  std::optional<std::size_t> lookahead_cost;
};

// Candidate seeds in search order: images of P0, P1..P4, P6..P9, then the
// sums and differences of pairs of those images.
std::vector<SeedChoice> seed_candidates(const CurveConfig& cfg);

// A point of infinite order. Among the non-torsion candidates, picks the one
// whose first two filter-passing multiples (within a short look-ahead) are
// smallest; ties keep search order. Falls back to c1*Qa + c2*Qb with
// |c_i| <= 3 when every candidate is torsion. Throws NoSeedFound.
SeedChoice find_seed(const CurveConfig& cfg);

struct GenerateOptions {
  std::size_t count = 1;
  long max_multiplier = 60;
  // Skip certificates whose (N_x, N_y) was already emitted.
  bool distinct = false;
  // Worker threads for candidate evaluation; emission order does not depend on it.
  unsigned threads = 1;
  FactorOptions factor;
};

struct GenerateStats {
  std::size_t candidates = 0;
  std::size_t exceptional = 0;
  std::size_t not_positive = 0;
  std::size_t parity_rejected = 0;
  std::size_t factor_budget = 0;
  std::size_t duplicates = 0;
};

struct GenerateResult {
  SeedChoice seed;
  std::vector<PairCertificate> certificates;
  GenerateStats stats;
  bool exhausted = false;  // fewer than `count` certificates by max_multiplier
};

// Walks +[n]Q, -[n]Q for n = 1..max_multiplier and certifies every candidate
// that passes positivity, parity and gcd filters and whose square-free parts
// can be factored within options.factor. `on_certificate` sees each
// certificate in (n, +, -) order as soon as it is confirmed.
GenerateResult run_generation(const CurveConfig& cfg, const GenerateOptions& options,
                              const std::function<void(const PairCertificate&)>& on_certificate = {});

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(std::vector<PairCertificate> partial);
  const std::vector<PairCertificate>& partial() const { return partial_; }

 private:
  std::vector<PairCertificate> partial_;
};

// run_generation with defaults; throws BudgetExhausted carrying the partial
// list when fewer than `count` certificates are found.
std::vector<PairCertificate> generate_pairs(const CurveConfig& cfg, std::size_t count,
                                            long max_multiplier);

// Certificate for sign * [multiplier] seed = `point`, or nullopt when the point
// is rejected (exceptional, not positive, parity). Throws FactorizationBudget.
std::optional<PairCertificate> certify_point(const CurveConfig& cfg, const ECPoint& point,
                                             long multiplier, int sign,
                                             const FactorOptions& factor = {});

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> reasons;
};

// Re-derives every field from (config, ec_point) and checks the claimed
// values. Never throws.
VerifyResult verify_certificate(const PairCertificate& cert);

}  // namespace thetapairs
