#pragma once
// p-adic valuations, base-p digit vectors, p-weights and cyclic digit
// shifts.  ord_p is normalized by ord_p(p) = 1.  The Dwork normalizer pi
// (pi^{p-1} = -p) is never represented as a number; it only enters through
// its valuation 1/(p-1), so valuations of normalized coefficients live in
// (1/(p-1))Z and are carried as exact rationals.

#include "ahyp/rational.hpp"

#include <cstdint>

namespace ahyp {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin, valid for all n < 2^64.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline void require_prime(std::int64_t p) {
  if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("p is not prime: " + std::to_string(p));
}

// Exact p-adic valuation value: a rational, or +infinity for ord_p(0).
struct Valuation {
  bool infinite = false;
  Rat value = 0;

  static Valuation inf() { return Valuation{true, 0}; }
  static Valuation of(const Rat& v) { return Valuation{false, v}; }

  bool is_finite() const { return !infinite; }
  const Rat& finite_value() const {
    if (infinite) throw std::invalid_argument("valuation is +inf");
    return value;
  }

  friend bool operator==(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.value == b.value;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite || b.infinite) return inf();
    return of(a.value + b.value);
  }
  std::string str() const { return infinite ? "+inf" : value.str(); }
};

inline Valuation min(const Valuation& a, const Valuation& b) { return a < b ? a : b; }

// ord_p of a nonzero integer (plain exponent).
inline Int ord_p_int(Int x, std::int64_t p) {
  if (x == 0) throw std::invalid_argument("ord_p_int: zero");
  Int k = 0, q, r;
  if (x < 0) x = -x;
  for (;;) {
    boost::multiprecision::divide_qr(x, Int(p), q, r);
    if (r != 0) break;
    x = q;
    ++k;
  }
  return k;
}

inline Valuation ord_p(const Rat& x, std::int64_t p) {
  require_prime(p);
  if (x == 0) return Valuation::inf();
  return Valuation::of(Rat(ord_p_int(numerator(x), p) - ord_p_int(denominator(x), p)));
}

inline bool is_p_integral(const Rat& x, std::int64_t p) {
  return denominator(x) % p != 0;
}

// Base-p digits, least significant first.  When `length` is given the
// value must fit in that many digits and the result is zero-padded.
inline std::vector<std::int64_t> base_p_digits(Int t, std::int64_t p, long length = -1) {
  if (t < 0) throw std::invalid_argument("base_p_digits: negative value");
  std::vector<std::int64_t> d;
  Int q, r;
  while (t > 0) {
    boost::multiprecision::divide_qr(t, Int(p), q, r);
    d.push_back(static_cast<std::int64_t>(r));
    t = q;
  }
  if (length >= 0) {
    if (static_cast<long>(d.size()) > length)
      throw std::invalid_argument("base_p_digits: value needs more than the requested digits");
    d.resize(static_cast<std::size_t>(length), 0);
  }
  return d;
}

inline Int from_base_p_digits(const std::vector<std::int64_t>& digits, std::int64_t p) {
  Int t = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (*it < 0 || *it >= p) throw std::invalid_argument("digit out of range");
    t = t * p + *it;
  }
  return t;
}

// A length-a base-p digit string t = t_0 + t_1 p + ... + t_{a-1} p^{a-1}.
struct DigitVector {
  std::int64_t base = 2;
  std::vector<std::int64_t> digits;  // least significant first

  long length() const { return static_cast<long>(digits.size()); }
  Int value() const { return from_base_p_digits(digits, base); }

  static DigitVector of(const Int& t, std::int64_t p, long a) {
    require_prime(p);
    if (a < 1) throw std::invalid_argument("DigitVector: length must be >= 1");
    return DigitVector{p, base_p_digits(t, p, a)};
  }
};

// Sum of base-p digits.
inline Int p_weight(const Int& t, std::int64_t p) {
  require_prime(p);
  if (t < 0) throw std::invalid_argument("p_weight: negative entry");
  Int s = 0, x = t, q, r;
  while (x > 0) {
    boost::multiprecision::divide_qr(x, Int(p), q, r);
    s += r;
    x = q;
  }
  return s;
}

inline Int p_weight(const VecZ& t, std::int64_t p) {
  Int s = 0;
  for (const Int& x : t) s += p_weight(x, p);
  return s;
}

// One digit-rotation step maps (t_0,...,t_{a-1}) to (t_1,...,t_{a-1},t_0);
// this is the k-fold iterate.  Requires 0 <= t <= p^a - 1.
inline Int cyclic_shift(const Int& t, std::int64_t p, long a, long k) {
  require_prime(p);
  if (a < 1) throw std::invalid_argument("cyclic_shift: length must be >= 1");
  if (t < 0 || t > int_pow(Int(p), a) - 1)
    throw std::invalid_argument("cyclic_shift: t out of range for p^a");
  auto d = base_p_digits(t, p, a);
  long shift = ((k % a) + a) % a;
  std::rotate(d.begin(), d.begin() + shift, d.end());
  return from_base_p_digits(d, p);
}

// ord_p(m!) = (m - w_p(m)) / (p - 1); agrees with Legendre's formula.
inline Rat ord_p_factorial(const Int& m, std::int64_t p) {
  require_prime(p);
  if (m < 0) throw std::invalid_argument("ord_p_factorial: negative argument");
  return Rat(m - p_weight(m, p), Int(p - 1));
}

// Least a >= 1 with x^a = 1 (mod m); requires gcd(x, m) = 1.
inline long multiplicative_order(const Int& x, const Int& m, long cap = 10'000'000) {
  if (m < 1) throw std::invalid_argument("multiplicative_order: modulus must be >= 1");
  if (m == 1) return 1;
  if (gcd(Int(x % m), m) != 1)
    throw std::invalid_argument("multiplicative_order: arguments not coprime");
  Int y = x % m;
  if (y < 0) y += m;
  Int acc = y;
  long k = 1;
  while (acc != 1) {
    acc = (acc * y) % m;
    ++k;
    if (k > cap) throw cap_exceeded("multiplicative_order: exceeded iteration cap");
  }
  return k;
}

}  // namespace ahyp
