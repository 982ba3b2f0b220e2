#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "thetapairs/arith.hpp"

namespace thetapairs {

// Effort limits for factorize(). Every limit is a count, never a clock, so
// success or failure on a given input is reproducible.
struct FactorOptions {
  // Primes below this bound are removed by division.
  unsigned long trial_bound = 1'000'000;
  // Brent-rho iterations per attempt (two attempts with different constants).
  std::uint64_t rho_iterations = 1u << 15;
  // Number of ECM (B1, curves) levels to run: 0..4.
  unsigned ecm_levels = 3;
  // Composite cofactors larger than this are not attacked with ECM.
  std::size_t max_composite_bits = 360;
  std::uint64_t seed = 0x7e7a5eedULL;
};

// prime -> multiplicity
using Factorization = std::map<BigInt, unsigned>;

// Complete factorization of n >= 1 (empty for n == 1). Throws ZeroInput for
// n == 0, NonPositiveInput for n < 0, FactorizationBudget when a composite
// cofactor survives every method in the budget.
Factorization factorize(const BigInt& n, const FactorOptions& options = {});

BigInt multiply_back(const Factorization& factors);

// q = squarefree_part * cofactor^2 with squarefree_part a square-free
// positive integer and cofactor > 0.
struct SquarefreeDecomposition {
  BigInt squarefree_part;
  BigRational cofactor;
  // Distinct primes of squarefree_part, ascending.
  std::vector<BigInt> primes;
};

// Throws NonPositiveInput for q <= 0.
SquarefreeDecomposition squarefree_part(const BigRational& q, const FactorOptions& options = {});

// Same result, but numerator and denominator are first split along a coprime
// base refined with `hints`; only base elements that occur to an odd power
// are factored. Hints that share large factors with q make this much cheaper.
SquarefreeDecomposition squarefree_part(const BigRational& q, std::span<const BigInt> hints,
                                        const FactorOptions& options = {});

// Primes below `bound`, ascending; computed once per bound.
const std::vector<std::uint32_t>& small_primes(std::uint32_t bound);

}  // namespace thetapairs
