#include "thetapairs/factor.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <unordered_map>

#include "thetapairs/error.hpp"

namespace thetapairs {

namespace {

struct PrimeTable {
  std::vector<std::uint32_t> primes;
  BigInt primorial;  // product of `primes`
};

BigInt product_tree(std::span<const std::uint32_t> primes) {
  if (primes.empty()) return 1;
  if (primes.size() <= 16) {
    BigInt p = 1;
    for (auto q : primes) p *= q;
    return p;
  }
  const auto half = primes.size() / 2;
  return product_tree(primes.first(half)) * product_tree(primes.subspan(half));
}

const PrimeTable& prime_table(std::uint32_t bound) {
  static std::mutex mutex;
  static std::unordered_map<std::uint32_t, PrimeTable> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(bound);
  if (it != cache.end()) return it->second;

  PrimeTable table;
  std::vector<bool> composite(bound, false);
  for (std::uint32_t i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    table.primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j < bound; j += i) composite[j] = true;
  }
  table.primorial = product_tree(table.primes);
  return cache.emplace(bound, std::move(table)).first->second;
}

// Removes every prime below the trial bound from m, recording it in out.
void strip_small_primes(BigInt& m, const PrimeTable& table, Factorization& out) {
  if (m == 1 || table.primes.empty()) return;
  BigInt reduced = table.primorial % m;
  BigInt g = gcd(m, reduced);
  if (g == 0) g = m;  // m divides the primorial
  if (g == 1) return;
  for (std::uint32_t p : table.primes) {
    if (g == 1) break;
    if (mpz_divisible_ui_p(g.get_mpz_t(), p) == 0) continue;
    g /= p;
    BigInt prime(p);
    BigInt rest;
    const auto e = mpz_remove(rest.get_mpz_t(), m.get_mpz_t(), prime.get_mpz_t());
    m = rest;
    out[prime] += static_cast<unsigned>(e);
  }
}

BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& n) {
  BigInt r = a * b;
  mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Brent's variant of Pollard rho with batched gcds. Returns 0 on failure.
BigInt brent_rho(const BigInt& n, unsigned long increment, const BigInt& start,
                 std::uint64_t max_iterations) {
  constexpr std::uint64_t kBatch = 128;
  auto step = [&](const BigInt& v) {
    BigInt r = v * v + increment;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
    return r;
  };

  BigInt y = start, x, ys, q = 1, g = 1;
  std::uint64_t r = 1, spent = 0;
  while (g == 1 && spent < max_iterations) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t batch = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < batch; ++i) {
        y = step(y);
        q = mulmod(q, abs(x - y), n);
      }
      g = gcd(q, n);
      k += batch;
    }
    spent += 2 * r;
    r *= 2;
  }
  if (g == n) {
    // Batch overshot; replay it one step at a time.
    do {
      ys = step(ys);
      g = gcd(abs(x - ys), n);
    } while (g == 1);
  }
  if (g == 1 || g == n) return 0;
  return g;
}

// --- ECM on Montgomery curves B y^2 = x^3 + A x^2 + x, x-only arithmetic. ---

struct XZ {
  BigInt x, z;
};

class MontgomeryCurve {
 public:
  MontgomeryCurve(const BigInt& n, BigInt a24) : n_(n), a24_(std::move(a24)) {}

  XZ dbl(const XZ& p) const {
    BigInt s = mulmod(p.x + p.z, p.x + p.z, n_);
    BigInt d = mulmod(p.x - p.z, p.x - p.z, n_);
    BigInt t = s - d;
    return {mulmod(s, d, n_), mulmod(t, d + mulmod(a24_, t, n_), n_)};
  }

  // p + q given diff = p - q.
  XZ add(const XZ& p, const XZ& q, const XZ& diff) const {
    BigInt u = mulmod(p.x - p.z, q.x + q.z, n_);
    BigInt v = mulmod(p.x + p.z, q.x - q.z, n_);
    BigInt plus = u + v, minus = u - v;
    return {mulmod(diff.z, mulmod(plus, plus, n_), n_),
            mulmod(diff.x, mulmod(minus, minus, n_), n_)};
  }

  // k >= 1.
  XZ ladder(const BigInt& k, const XZ& p) const {
    XZ r0 = p, r1 = dbl(p);
    for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
      if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r1, r0, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }

 private:
  const BigInt& n_;
  BigInt a24_;
};

BigInt nontrivial(const BigInt& g, const BigInt& n) {
  return (g > 1 && g < n) ? g : BigInt(0);
}

// One ECM curve with Suyama parametrization. Returns 0 when no factor appears.
BigInt ecm_curve(const BigInt& n, unsigned long sigma, std::uint32_t b1, std::uint64_t b2,
                 const PrimeTable& stage_primes) {
  const BigInt s(sigma);
  const BigInt u = s * s - 5;
  const BigInt v = 4 * s;
  BigInt den = 16 * u * u * u * v;
  mpz_mod(den.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
  BigInt inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) {
    return nontrivial(gcd(den, n), n);
  }
  const BigInt vu = v - u;
  BigInt a24 = vu * vu * vu * (3 * u + v) * inv;
  mpz_mod(a24.get_mpz_t(), a24.get_mpz_t(), n.get_mpz_t());
  const MontgomeryCurve curve(n, a24);

  XZ q{u * u * u % n, v * v * v % n};
  for (std::uint32_t p : stage_primes.primes) {
    if (p > b1) break;
    std::uint64_t pk = p;
    while (pk * p <= b1) pk *= p;
    q = curve.ladder(BigInt(static_cast<unsigned long>(pk)), q);
  }
  BigInt g = gcd(q.z, n);
  if (g != 1) return nontrivial(g, n);

  // Stage 2: primes in (b1, b2] are i*D +- j with j coprime to D, j < D/2.
  constexpr unsigned kD = 210;
  std::vector<XZ> baby;
  {
    const XZ two = curve.dbl(q);
    XZ prev = q;            // [j-2]Q, starting from [-1]Q ~ [1]Q
    XZ cur = q;             // [j]Q
    for (unsigned j = 1; j < kD / 2; j += 2) {
      if (std::gcd(j, kD) == 1) baby.push_back(cur);
      XZ next = (j == 1) ? curve.add(two, q, q) : curve.add(cur, two, prev);
      prev = cur;
      cur = next;
    }
  }
  const XZ step = curve.ladder(BigInt(kD), q);
  std::uint64_t i = std::max<std::uint64_t>(1, b1 / kD);
  XZ current = curve.ladder(BigInt(static_cast<unsigned long>(i * kD)), q);
  XZ next = curve.ladder(BigInt(static_cast<unsigned long>((i + 1) * kD)), q);
  BigInt acc = 1;
  for (; i * kD <= b2 + kD; ++i) {
    for (const XZ& b : baby) {
      acc = mulmod(acc, current.x * b.z - b.x * current.z, n);
    }
    XZ after = curve.add(next, step, current);
    current = std::move(next);
    next = std::move(after);
  }
  g = gcd(acc, n);
  return nontrivial(g, n);
}

struct EcmLevel {
  std::uint32_t b1;
  unsigned curves;
};
constexpr std::array<EcmLevel, 4> kEcmLevels{{{2000, 25}, {11000, 90}, {50000, 300}, {250000, 700}}};

BigInt find_factor(const BigInt& n, const FactorOptions& options, std::mt19937_64& rng) {
  for (unsigned long increment : {1ul, 3ul}) {
    BigInt start(static_cast<unsigned long>(rng() % 1000000 + 2));
    BigInt d = brent_rho(n, increment, start, options.rho_iterations);
    if (d != 0) return d;
  }
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > options.max_composite_bits) return 0;
  const unsigned levels = std::min<unsigned>(options.ecm_levels, kEcmLevels.size());
  const auto& stage_primes = prime_table(kEcmLevels[levels ? levels - 1 : 0].b1 + 1);
  for (unsigned level = 0; level < levels; ++level) {
    const auto [b1, curves] = kEcmLevels[level];
    for (unsigned c = 0; c < curves; ++c) {
      const unsigned long sigma = 6 + rng() % 4000000000ull;
      BigInt d = ecm_curve(n, sigma, b1, std::uint64_t{b1} * 100, stage_primes);
      if (d != 0) return d;
    }
  }
  return 0;
}

std::optional<std::pair<BigInt, unsigned>> perfect_power(const BigInt& n) {
  if (mpz_perfect_power_p(n.get_mpz_t()) == 0) return std::nullopt;
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long e = bits; e >= 2; --e) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
      return std::make_pair(root, static_cast<unsigned>(e));
    }
  }
  return std::nullopt;
}

}  // namespace

const std::vector<std::uint32_t>& small_primes(std::uint32_t bound) {
  return prime_table(bound).primes;
}

Factorization factorize(const BigInt& n, const FactorOptions& options) {
  if (n == 0) throw Error(ErrorCode::ZeroInput, "cannot factor 0");
  if (n < 0) throw Error(ErrorCode::NonPositiveInput, "cannot factor " + to_string(n));

  Factorization out;
  BigInt m = n;
  const auto& table = prime_table(static_cast<std::uint32_t>(options.trial_bound));
  strip_small_primes(m, table, out);

  std::mt19937_64 rng(options.seed);
  // (value, multiplicity) pairs still to split
  std::vector<std::pair<BigInt, unsigned>> work;
  if (m > 1) work.emplace_back(m, 1u);
  while (!work.empty()) {
    auto [c, mult] = std::move(work.back());
    work.pop_back();
    if (c == 1) continue;
    if (is_probable_prime(c)) {
      out[c] += mult;
      continue;
    }
    if (auto pp = perfect_power(c)) {
      work.emplace_back(pp->first, mult * pp->second);
      continue;
    }
    BigInt d = find_factor(c, options, rng);
    if (d == 0) {
      throw Error(ErrorCode::FactorizationBudget,
                  "composite cofactor of " + std::to_string(mpz_sizeinbase(c.get_mpz_t(), 10)) +
                      " digits not split");
    }
    BigInt g = gcd(d, c / d);
    if (g > 1) {
      // Split along the shared part so the two halves stay independent.
      for (const BigInt& piece : coprime_base(std::array<BigInt, 2>{d, c / d})) {
        BigInt rest;
        const auto e = mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), piece.get_mpz_t());
        work.emplace_back(piece, mult * static_cast<unsigned>(e));
      }
    } else {
      work.emplace_back(c / d, mult);
      work.emplace_back(std::move(d), mult);
    }
  }
  return out;
}

BigInt multiply_back(const Factorization& factors) {
  BigInt product = 1;
  for (const auto& [p, e] : factors) {
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
    product *= power;
  }
  return product;
}

SquarefreeDecomposition squarefree_part(const BigRational& q, const FactorOptions& options) {
  return squarefree_part(q, std::span<const BigInt>{}, options);
}

SquarefreeDecomposition squarefree_part(const BigRational& q, std::span<const BigInt> hints,
                                        const FactorOptions& options) {
  if (q <= 0) throw Error(ErrorCode::NonPositiveInput, "square-free part of " + to_string(q));

  std::vector<BigInt> values{q.get_num(), q.get_den()};
  values.insert(values.end(), hints.begin(), hints.end());
  const std::vector<BigInt> base = coprime_base(values);

  SquarefreeDecomposition out;
  out.squarefree_part = 1;
  for (const BigInt& element : base) {
    BigInt rest;
    const auto in_num = mpz_remove(rest.get_mpz_t(), q.get_num_mpz_t(), element.get_mpz_t());
    const auto in_den = mpz_remove(rest.get_mpz_t(), q.get_den_mpz_t(), element.get_mpz_t());
    if ((in_num + in_den) % 2 == 0) continue;
    // A prime of `element` occurs in num*den to the power
    // (in_num + in_den) * e, which is odd exactly when e is odd.
    for (const auto& [p, e] : factorize(element, options)) {
      if (e % 2 == 1) out.primes.push_back(p);
    }
  }
  std::sort(out.primes.begin(), out.primes.end());
  for (const BigInt& p : out.primes) out.squarefree_part *= p;

  const auto root = rational_sqrt(q / BigRational(out.squarefree_part));
  if (!root) {
    // Unreachable when the base decomposes num and den completely.
    throw Error(ErrorCode::FactorizationBudget, "square-free reconstruction failed");
  }
  out.cofactor = *root;
  return out;
}

}  // namespace thetapairs
