#pragma once
// Exact arbitrary-precision integers and rationals plus the small vector
// helpers shared by every module.  Nothing in this library ever rounds:
// all scalars are cpp_int / cpp_rational and all comparisons are exact.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahyp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using VecZ = std::vector<Int>;
using VecQ = std::vector<Rat>;
using MatZ = std::vector<VecZ>;  // row major
using MatQ = std::vector<VecQ>;

// Guards for the bounded enumerations.  qb_cap is the default ceiling for
// q^b in truncation/enumeration loops (exceeding it is a reported error,
// never silent truncation); point_cap bounds the number of enumerated
// points; w_ceiling bounds the doubling schedule of the coset-min cap.
struct Caps {
  std::int64_t qb_cap = 1'000'000;
  std::int64_t point_cap = 50'000'000;
  long b_search_cap = 64;
  Rat w_ceiling = 1024;
};

class cap_exceeded : public std::runtime_error {
 public:
  explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

class not_found : public std::runtime_error {
 public:
  explicit not_found(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline Int to_int(const Rat& x) {
  if (!is_integer(x)) throw std::invalid_argument("to_int: not an integer: " + x.str());
  return numerator(x);
}

// exact floor(a/b) and ceil(a/b) for any nonzero b
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((a < 0) == (b < 0))) ++q;
  return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(numerator(x), denominator(x)); }
inline Int ceil_rat(const Rat& x) { return ceil_div(numerator(x), denominator(x)); }

inline Int int_pow(const Int& base, long exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

// Parses "n" or "n/d" with optional sign; the denominator must be nonzero.
inline Rat parse_rational(const std::string& text) {
  auto fail = [&]() -> Rat {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  };
  auto parse_int = [&](const std::string& s) -> Int {
    if (s.empty()) fail();
    bool negative = s[0] == '-';
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) fail();
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
    Int mag(s.substr(start));
    return negative ? -mag : mag;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rat(n, d);
}

// Serialized form is "num/den" with the denominator omitted when it is 1.
inline std::string to_string(const Rat& x) { return x.str(); }
inline std::string to_string(const Int& x) { return x.str(); }

// Splits on whitespace and/or commas.
inline std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(cur), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

inline VecQ parse_rational_vector(const std::string& line) {
  VecQ out;
  for (const auto& tok : split_tokens(line)) out.push_back(parse_rational(tok));
  return out;
}

inline VecZ parse_integer_vector(const std::string& line) {
  VecZ out;
  for (const auto& tok : split_tokens(line)) {
    Rat r = parse_rational(tok);
    out.push_back(to_int(r));
  }
  return out;
}

template <class Vec>
std::string format_vector(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

inline VecQ to_vecq(const VecZ& v) {
  VecQ out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline Rat dot(const VecQ& a, const VecQ& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const VecZ& a, const VecZ& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const VecZ& a, const VecQ& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
  return s;
}

template <class Vec>
bool is_zero_vector(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const auto& x) { return x == 0; });
}

template <class Vec>
bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace ahyp
