#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace thetapairs {

using BigInt = mpz_class;
// mpq_class results are canonical after every arithmetic operation; values
// built from a raw numerator/denominator pair go through make_rational.
using BigRational = mpq_class;

// Lowest-terms rational num/den. Throws ZeroInput when den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);
inline BigRational make_rational(long num, long den) {
  return make_rational(BigInt(num), BigInt(den));
}

// "num/den" in lowest terms, or "n" when the denominator is 1.
std::string to_string(const BigInt& n);
std::string to_string(const BigRational& q);
// Accepts "n", "-n", "num/den" (den nonzero; result is reduced).
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

// Exponent of a prime in a rational, with a distinguished value for zero.
class Valuation {
 public:
  constexpr explicit Valuation(long value) : value_(value), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  // Precondition: finite.
  constexpr long value() const { return value_; }
  constexpr bool is_even() const { return !infinite_ && value_ % 2 == 0; }

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }

  std::string to_string() const;

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

bool is_probable_prime(const BigInt& n);

// ord_p(q); INFINITY for q == 0. Throws NonPrimeModulus when p is not prime.
Valuation ord_p(const BigRational& q, const BigInt& p);

// Exact square root of a non-negative rational, if it has one.
std::optional<BigRational> rational_sqrt(const BigRational& q);

// Pairwise-coprime set of integers > 1 such that every |input| is a product
// of powers of its elements. Sorted ascending.
std::vector<BigInt> coprime_base(std::span<const BigInt> values);

// Number of decimal digits in |n| (0 has one digit).
std::size_t decimal_digits(const BigInt& n);

}  // namespace thetapairs
