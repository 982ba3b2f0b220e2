#include "thetapairs/arith.hpp"

#include <algorithm>
#include <cctype>

#include "thetapairs/error.hpp"

namespace thetapairs {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::ZeroInput, "zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const BigRational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::ParseError, "signed denominator: '" + std::string(text) + "'");
  }
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + std::string(text) + "'");
  return make_rational(num, den);
}

std::string Valuation::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

bool is_probable_prime(const BigInt& n) {
  return n > 1 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

long remove_factor(const BigInt& n, const BigInt& p) {
  if (n == 0) return 0;
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Valuation ord_p(const BigRational& q, const BigInt& p) {
  if (!is_probable_prime(p)) {
    throw Error(ErrorCode::NonPrimeModulus, to_string(p) + " is not prime");
  }
  if (q == 0) return Valuation::infinity();
  return Valuation(remove_factor(q.get_num(), p) - remove_factor(q.get_den(), p));
}

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    return std::nullopt;
  }
  BigInt num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(num, den);
}

std::vector<BigInt> coprime_base(std::span<const BigInt> values) {
  std::vector<BigInt> base;
  for (const BigInt& v : values) {
    BigInt a = abs(v);
    if (a > 1) base.push_back(std::move(a));
  }
  // Replace any non-coprime pair (a, b) by (g, a/g, b/g); the product of the
  // list strictly decreases, so this terminates.
  bool refined = true;
  while (refined) {
    refined = false;
    for (std::size_t i = 0; i < base.size() && !refined; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !refined; ++j) {
        BigInt g = gcd(base[i], base[j]);
        if (g == 1) continue;
        BigInt a = base[i] / g;
        BigInt b = base[j] / g;
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(j));
        base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
        for (BigInt* piece : {&g, &a, &b}) {
          if (*piece > 1) base.push_back(std::move(*piece));
        }
        refined = true;
      }
    }
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  return base;
}

std::size_t decimal_digits(const BigInt& n) {
  if (n == 0) return 1;
  return BigInt(abs(n)).get_str().size();
}

}  // namespace thetapairs
