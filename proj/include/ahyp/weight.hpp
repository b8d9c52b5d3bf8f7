#pragma once
// The set R of p-integral rational vectors in [-1,0]^N, the weight
// function w(r) = w_p((1-p^a)r)/a, digit-shift orbits, and complete
// enumerations of the finite slices R_{beta,b}.  Enumeration reduces the
// digit system  sum_i s_i a_i = (q^b-1)(-beta), 0 <= s_i <= q^b-1  to a
// walk over the relation lattice: integer particular solution plus kernel
// combinations, with exact interval/LP bounds so completeness is certified.

#include "ahyp/gkz.hpp"

#include <limits>

namespace ahyp {

inline void require_in_R(const VecQ& r, std::int64_t p) {
  for (const Rat& x : r) {
    if (x < -1 || x > 0) throw std::invalid_argument("vector entry outside [-1,0]: " + x.str());
    if (!is_p_integral(x, p))
      throw std::invalid_argument("vector entry not p-integral: " + x.str());
  }
}

// Minimal a with (1-p^a) r nonnegative-integral: the multiplicative order
// of p modulo the lcm of the reduced denominators (a = 1 for integer r).
inline long normalization_exponent(const VecQ& r, std::int64_t p) {
  require_prime(p);
  require_in_R(r, p);
  Int l = 1;
  for (const Rat& x : r) l = lcm(l, denominator(x));
  return multiplicative_order(Int(p), l);
}

struct WeightReport {
  Rat w;
  VecZ s;  // the digit source vector (1-p^a) r
  long a = 1;
};

inline WeightReport weight_with_exponent(const VecQ& r, std::int64_t p, long a) {
  require_prime(p);
  require_in_R(r, p);
  Int D = int_pow(Int(p), a) - 1;
  WeightReport rep;
  rep.a = a;
  rep.s.resize(r.size());
  Int wsum = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rat scaled = -r[i] * Rat(D);
    if (!is_integer(scaled))
      throw std::invalid_argument("weight: (1-p^a)r is not integral for a=" + std::to_string(a));
    rep.s[i] = to_int(scaled);
    wsum += p_weight(rep.s[i], p);
  }
  rep.w = Rat(wsum, Int(a));
  return rep;
}

inline WeightReport weight(const VecQ& r, std::int64_t p) {
  return weight_with_exponent(r, p, normalization_exponent(r, p));
}

// Componentwise digit rotation r^(k); independent of which valid a is used,
// so the minimal one is taken.
inline VecQ shift_r(const VecQ& r, std::int64_t p, long k) {
  long a = normalization_exponent(r, p);
  Int D = int_pow(Int(p), a) - 1;
  VecQ out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Int s = to_int(-r[i] * Rat(D));
    out[i] = Rat(-cyclic_shift(s, p, a, k), D);
  }
  return out;
}

// --- R_{beta,b} enumeration --------------------------------------------

// Reusable exact data for one configuration.
struct SliceContext {
  Configuration cfg;
  MatZ A;  // n x N matrix
  HermiteColumns hc;
  LatticeBasis kernel;

  static SliceContext make(const Configuration& cfg) {
    SliceContext ctx;
    ctx.cfg = cfg;
    ctx.A = cfg.matrix();
    ctx.hc = hermite_columns(ctx.A);
    ctx.kernel.vecs = row_hnf(integer_kernel(ctx.A));
    return ctx;
  }
};

struct RSliceStats {
  long long count = 0;  // |R_{beta,b}|
  Rat min_weight = 0;   // defined when count > 0
  VecQ argmin;          // lex-least minimizer
  VecQ lex_least;       // lex-least element of the slice
  std::vector<VecQ> argmins;  // all minimizers (lex sorted), capped
  bool argmins_truncated = false;
};

namespace detail {

constexpr long long kArgminListCap = 512;

inline long long digit_sum_i64(long long x, long long p) {
  if (p == 2) return __builtin_popcountll(static_cast<unsigned long long>(x));
  long long s = 0;
  while (x > 0) {
    s += x % p;
    x /= p;
  }
  return s;
}

// Digit system for R_{beta,b}: target T = (q^b - 1)(-beta) and bound
// M = q^b - 1.  Throws when beta is incompatible with a or caps are hit.
inline void r_slice_system(const Configuration& cfg, const VecQ& beta, std::int64_t p, long a,
                           long b, const Caps& caps, VecZ& T, Int& M) {
  require_prime(p);
  if (a < 1 || b < 1) throw std::invalid_argument("r_slice_system: a and b must be >= 1");
  if (static_cast<long>(beta.size()) != cfg.n)
    throw std::invalid_argument("beta dimension mismatch");
  Int q = int_pow(Int(p), a);
  Int Q = int_pow(q, b);
  if (Q > caps.qb_cap) throw cap_exceeded("R_{beta,b}: q^b exceeds cap");
  M = Q - 1;
  Int qa1 = q - 1;
  T.resize(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (!is_integer(Rat(qa1) * beta[i]))
      throw std::invalid_argument("beta is not compatible with exponent a");
    T[i] = to_int(Rat(M) * (-beta[i]));
  }
}

// Stream every solution s (as integer kernel offsets) of the digit system.
// emit is called with the full digit vector s.
template <class F>
void for_each_digit_solution(const SliceContext& ctx, const VecZ& T, const Int& M,
                             const Caps& caps, F&& emit) {
  long N = ctx.cfg.N;
  auto x0 = solve_integer(ctx.hc, T);
  if (!x0) return;
  long d = ctx.kernel.rank();
  if (d == 0) {
    for (long i = 0; i < N; ++i)
      if ((*x0)[i] < 0 || (*x0)[i] > M) return;
    emit(*x0);
    return;
  }
  VecZ lo(N), hi(N);
  for (long i = 0; i < N; ++i) {
    lo[i] = -(*x0)[i];
    hi[i] = M - (*x0)[i];
  }
  enumerate_lattice_box(ctx.kernel, lo, hi, caps, [&](const VecZ& coeffs) {
    VecZ s = lattice_combination(ctx.kernel, coeffs);
    for (long i = 0; i < N; ++i) s[i] += (*x0)[i];
    emit(s);
  });
}

}  // namespace detail

// Minimum weight and witnesses over R_{beta,b} (q = p^a).  A rank-one
// relation lattice with 64-bit-sized digits takes a fast integer path;
// everything else runs on exact big integers.
inline RSliceStats w_R_slice(const SliceContext& ctx, const VecQ& beta, std::int64_t p, long a,
                             long b, const Caps& caps = {}, bool collect_argmins = false) {
  VecZ T;
  Int M;
  detail::r_slice_system(ctx.cfg, beta, p, a, b, caps, T, M);
  long N = ctx.cfg.N;
  RSliceStats st;
  Int best = -1;
  VecZ best_s, lexmax_s;
  std::vector<VecZ> argmin_s;

  auto consider = [&](const VecZ& s, const Int& wsum) {
    ++st.count;
    if (st.count == 1 || lex_less(lexmax_s, s)) lexmax_s = s;  // lex-least r
    if (best < 0 || wsum < best) {
      best = wsum;
      best_s = s;
      argmin_s.clear();
      if (collect_argmins) argmin_s.push_back(s);
      st.argmins_truncated = false;
    } else if (wsum == best) {
      if (lex_less(best_s, s)) best_s = s;
      if (collect_argmins) {
        if (static_cast<long long>(argmin_s.size()) < detail::kArgminListCap)
          argmin_s.push_back(s);
        else
          st.argmins_truncated = true;
      }
    }
  };

  bool fast_done = false;
  if (ctx.kernel.rank() == 1 && M <= (Int(1) << 40)) {
    auto x0 = solve_integer(ctx.hc, T);
    if (!x0) return st;
    const VecZ& k = ctx.kernel.vecs[0];
    Int clo, chi;
    bool have = false, empty = false;
    for (long i = 0; i < N; ++i) {
      if (k[i] == 0) {
        if ((*x0)[i] < 0 || (*x0)[i] > M) empty = true;
        continue;
      }
      Int lo = -(*x0)[i], hi = M - (*x0)[i];
      Int aa = k[i] > 0 ? ceil_div(lo, k[i]) : ceil_div(hi, k[i]);
      Int bb = k[i] > 0 ? floor_div(hi, k[i]) : floor_div(lo, k[i]);
      if (!have) {
        clo = aa;
        chi = bb;
        have = true;
      } else {
        clo = std::max(clo, aa);
        chi = std::min(chi, bb);
      }
    }
    if (empty || !have || clo > chi) return st;
    if (chi - clo + 1 > caps.point_cap)
      throw cap_exceeded("R_{beta,b} enumeration exceeds point cap");
    const long long i64max = std::numeric_limits<long long>::max() / 4;
    bool fits = abs(clo) < i64max && abs(chi) < i64max;
    for (long i = 0; i < N && fits; ++i)
      fits = abs((*x0)[i]) < i64max && abs(k[i]) < (Int(1) << 20);
    if (fits) {
      std::vector<long long> base(N), step(N);
      long lead = 0;
      while (k[lead] == 0) ++lead;  // kernel vector is nonzero
      for (long i = 0; i < N; ++i) {
        base[i] = static_cast<long long>((*x0)[i]);
        step[i] = static_cast<long long>(k[i]);
      }
      // along the line s(c) = x0 + c k, lex order of s follows c with the
      // sign of the leading step, so all lex bookkeeping reduces to c
      bool inc = step[lead] > 0;
      auto s_lex_greater = [&](long long c, long long c2) { return inc ? c > c2 : c < c2; };
      long long c0 = static_cast<long long>(clo), c1 = static_cast<long long>(chi);
      long long best_w = -1, best_c = 0;
      std::vector<long long> tie_cs;
      for (long long c = c0; c <= c1; ++c) {
        long long wsum = 0;
        for (long i = 0; i < N; ++i) wsum += detail::digit_sum_i64(base[i] + c * step[i], p);
        ++st.count;
        if (best_w < 0 || wsum < best_w) {
          best_w = wsum;
          best_c = c;
          tie_cs.assign(1, c);
          st.argmins_truncated = false;
        } else if (wsum == best_w) {
          if (s_lex_greater(c, best_c)) best_c = c;
          if (static_cast<long long>(tie_cs.size()) < detail::kArgminListCap)
            tie_cs.push_back(c);
          else
            st.argmins_truncated = true;
        }
      }
      auto line_s = [&](long long c) {
        VecZ s(N);
        for (long i = 0; i < N; ++i) s[i] = base[i] + c * step[i];
        return s;
      };
      best = best_w;
      best_s = line_s(best_c);
      lexmax_s = line_s(inc ? c1 : c0);
      if (collect_argmins)
        for (long long c : tie_cs) argmin_s.push_back(line_s(c));
      fast_done = true;
    }
  }
  if (!fast_done) {
    detail::for_each_digit_solution(ctx, T, M, caps, [&](const VecZ& s) {
      Int wsum = 0;
      for (long i = 0; i < N; ++i) wsum += p_weight(s[i], p);
      consider(s, wsum);
    });
  }
  if (st.count == 0) return st;

  long ab = a * b;
  st.min_weight = Rat(best, Int(ab));
  auto to_r = [&](const VecZ& s) {
    VecQ r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = Rat(-s[i], M);
    return r;
  };
  st.argmin = to_r(best_s);
  st.lex_least = to_r(lexmax_s);
  if (collect_argmins) {
    for (const auto& s : argmin_s) st.argmins.push_back(to_r(s));
    std::sort(st.argmins.begin(), st.argmins.end(),
              [](const VecQ& x, const VecQ& y) { return lex_less(x, y); });
  }
  return st;
}

// The complete finite set R_{beta,b}, lexicographically sorted.
inline std::vector<VecQ> enumerate_R_beta_b(const Configuration& cfg, const VecQ& beta,
                                            std::int64_t p, long a, long b,
                                            const Caps& caps = {}) {
  auto ctx = SliceContext::make(cfg);
  VecZ T;
  Int M;
  detail::r_slice_system(cfg, beta, p, a, b, caps, T, M);
  std::vector<VecQ> out;
  detail::for_each_digit_solution(ctx, T, M, caps, [&](const VecZ& s) {
    VecQ r(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) r[i] = Rat(-s[i], M);
    out.push_back(std::move(r));
  });
  std::sort(out.begin(), out.end(), [](const VecQ& x, const VecQ& y) { return lex_less(x, y); });
  return out;
}

struct WRBetaB {
  Rat min_weight;
  std::vector<VecQ> argmins;
};

// min{ w(r) : r in R_{beta,b} } with the argmin list; error on empty slice.
inline WRBetaB w_R_beta_b(const Configuration& cfg, const VecQ& beta, std::int64_t p, long a,
                          long b, const Caps& caps = {}) {
  auto ctx = SliceContext::make(cfg);
  auto st = w_R_slice(ctx, beta, p, a, b, caps, true);
  if (st.count == 0) throw not_found("R_{beta,b} is empty");
  return WRBetaB{st.min_weight, st.argmins};
}

// Lemma 2.3: r -> l = (1-q^b)(r-v) maps R_{beta,b} bijectively onto L_{v,b}.
inline VecZ lemma_2_3_map(const VecQ& r, const VecQ& v, std::int64_t p, long a, long b) {
  Int Q = int_pow(Int(p), a * b);
  VecZ l(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    Rat x = Rat(1 - Q) * (r[i] - v[i]);
    if (!is_integer(x)) throw std::invalid_argument("lemma_2_3_map: image is not integral");
    l[i] = to_int(x);
  }
  return l;
}

inline VecQ lemma_2_3_inverse(const VecZ& l, const VecQ& v, std::int64_t p, long a, long b) {
  Int Q = int_pow(Int(p), a * b);
  VecQ r(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) r[i] = v[i] + Rat(l[i]) / Rat(1 - Q);
  require_in_R(r, p);
  return r;
}

// --- period of the shifted parameter cosets ----------------------------

struct PeriodReport {
  long e = 1;
  VecQ witness;     // canonical (lex-least) element of the first nonempty slice
  long witness_b = 1;
  std::vector<VecQ> beta_shifts;  // beta^{(k)} for k = 0..a_r-1
};

// Smallest e with -beta^{(e)} + Z^n = -beta + Z^n, where beta^{(k)} is
// represented concretely through the canonical witness r in R_beta.
inline PeriodReport period_e(const Configuration& cfg, const VecQ& beta, std::int64_t p, long a,
                             const Caps& caps = {}) {
  auto ctx = SliceContext::make(cfg);
  PeriodReport rep;
  bool found = false;
  for (long b = 1; b <= caps.b_search_cap; ++b) {
    Int Q;
    {
      Int q = int_pow(Int(p), a);
      Q = int_pow(q, b);
      if (Q > caps.qb_cap) break;
    }
    auto st = w_R_slice(ctx, beta, p, a, b, caps, false);
    if (st.count > 0) {
      rep.witness = st.lex_least;
      rep.witness_b = b;
      found = true;
      break;
    }
  }
  if (!found) throw not_found("period_e: R_beta empty within search bound");

  long ar = normalization_exponent(rep.witness, p);
  std::vector<VecQ> cosets;
  for (long k = 0; k < ar; ++k) {
    VecQ rk = shift_r(rep.witness, p, k);
    rep.beta_shifts.push_back(apply_configuration(cfg, rk));
  }
  auto same_coset = [&](const VecQ& x, const VecQ& y) {
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!is_integer(x[i] - y[i])) return false;
    return true;
  };
  auto is_period = [&](long e) {
    for (long k = 0; k < ar; ++k)
      if (!same_coset(rep.beta_shifts[static_cast<std::size_t>((k + e) % ar)],
                      rep.beta_shifts[static_cast<std::size_t>(k)]))
        return false;
    return true;
  };
  long e = 1;
  while (e < ar && !same_coset(rep.beta_shifts[static_cast<std::size_t>(e)], rep.beta_shifts[0]))
    ++e;
  if (e < ar && !is_period(e)) {
    // first return that is not a global period: fall back to the
    // fundamental period (always exists, divides ar)
    while (e < ar && !is_period(e)) ++e;
  }
  rep.e = (e >= ar) ? ar : e;
  return rep;
}

// Corollary 5.8: r in R with sum r_i = -1 has w(r) >= p-1.  Returns the
// exact margin w(r) - (p-1).
inline Rat sum_minus_one_margin(const VecQ& r, std::int64_t p) {
  Rat sum = 0;
  for (const Rat& x : r) sum += x;
  if (sum != -1) throw std::invalid_argument("sum_minus_one_margin: entries must sum to -1");
  return weight(r, p).w - Rat(p - 1);
}

}  // namespace ahyp
