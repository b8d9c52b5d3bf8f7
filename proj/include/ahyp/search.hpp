#pragma once
// Section 6: the finite set Gamma = (-sigma^o_{-beta}) cap (beta + Z^n)
// cap RA, the bounded Theorem 6.1 search over (gamma, b) cells, and the
// digit-block split of Lemma 6.2.  RA membership is relaxed to real LP
// feasibility of sum r_i a_i = gamma with r in [-1,0]^N; that yields a
// certified superset (and bound B' >= B), while exact membership is what
// the b-loop itself discovers through nonempty slices R_{gamma,ab}.

#include "ahyp/polytope.hpp"

namespace ahyp {

struct GammaSuperset {
  std::vector<VecQ> elements;  // lex sorted
  Face sigma_face;             // sigma_{-beta}
  long long box_points = 0;    // lattice points of the bounding box scanned
};

inline GammaSuperset compute_gamma(const Configuration& cfg, const ConeGeometry& geom,
                                   const VecQ& beta, std::int64_t p, long a,
                                   const Caps& caps = {}) {
  require_prime(p);
  Int qa1 = int_pow(Int(p), a) - 1;
  for (const Rat& x : beta)
    if (!is_integer(Rat(qa1) * x))
      throw std::invalid_argument("compute_gamma: (p^a - 1) beta is not integral");

  VecQ minus_beta(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) minus_beta[i] = -beta[i];
  GammaSuperset out;
  out.sigma_face = smallest_face(geom, minus_beta);

  // zonotope bounding box: coordinate j of sum r_i a_i with r in [-1,0]^N
  // ranges over [sum_i min(0,-a_ij), sum_i max(0,-a_ij)]
  long n = cfg.n, N = cfg.N;
  VecZ lo(static_cast<std::size_t>(n), Int(0)), hi(static_cast<std::size_t>(n), Int(0));
  for (long j = 0; j < n; ++j)
    for (long i = 0; i < N; ++i) {
      const Int& aij = cfg.cols[i][j];
      if (aij > 0)
        lo[j] -= aij;  // min(0, -aij)
      else
        hi[j] -= aij;  // max(0, -aij)
    }

  MatQ A(static_cast<std::size_t>(n), VecQ(static_cast<std::size_t>(N), Rat(0)));
  for (long j = 0; j < N; ++j)
    for (long i = 0; i < n; ++i) A[i][j] = Rat(cfg.cols[j][i]);
  VecQ ones(static_cast<std::size_t>(N), Rat(1));

  VecQ gamma(static_cast<std::size_t>(n), Rat(0));
  VecQ minus_gamma(static_cast<std::size_t>(n), Rat(0));
  std::function<void(long)> rec = [&](long level) {
    if (level == n) {
      if (++out.box_points > caps.point_cap)
        throw cap_exceeded("compute_gamma: bounding box exceeds point cap");
      for (long i = 0; i < n; ++i) minus_gamma[i] = -gamma[i];
      if (!in_relative_interior(geom, minus_gamma, out.sigma_face)) return;
      // real relaxation of RA membership: sum t_i a_i = -gamma, t in [0,1]^N
      if (!lp_feasible_box(A, minus_gamma, ones)) return;
      out.elements.push_back(gamma);
      return;
    }
    Int z0 = ceil_rat(Rat(lo[level]) - beta[level]);
    Int z1 = floor_rat(Rat(hi[level]) - beta[level]);
    for (Int z = z0; z <= z1; ++z) {
      gamma[level] = beta[level] + Rat(z);
      rec(level + 1);
    }
  };
  rec(0);
  // construction order is lex in gamma already
  return out;
}

struct SearchCell {
  VecQ gamma;
  long b = 1;
  long long slice_size = 0;
  Rat w;
};

struct SearchReport {
  VecQ gamma;
  long b = 1;
  VecQ v;
  Rat w;
  long B_prime = 0;      // size of the Gamma superset
  long b_scanned = 0;    // b range actually covered (caps may clip B')
  bool complete = false; // b_scanned >= B_prime
  bool cap_hit = false;
  Rat cert_bound;        // Corollary 3.5 bound on the winning coset
  bool cert_attained = false;
  std::vector<SearchCell> cells;  // nonempty cells in scan order
  long long empty_cells = 0;
};

// Theorem 6.1: scan w(R_{gamma,ab}) for gamma in the superset and
// b = 1..B'; the minimum equals min{ w(R_delta) } and its witness series
// is p-integral.  Ties break lexicographically by (gamma, b, v).
inline SearchReport theorem_6_1_search(const Configuration& cfg, const VecQ& beta, std::int64_t p,
                                       const Caps& caps = {}) {
  require_prime(p);
  Int l = 1;
  for (const Rat& x : beta) {
    if (!is_p_integral(x, p))
      throw std::invalid_argument("theorem_6_1_search: beta is not p-integral");
    l = lcm(l, denominator(x));
  }
  long a = multiplicative_order(Int(p), l);
  auto geom = cone_facets(cfg);
  auto gamma_set = compute_gamma(cfg, geom, beta, p, a, caps);
  if (gamma_set.elements.empty())
    throw not_found("theorem_6_1_search: Gamma superset is empty");

  SearchReport rep;
  rep.B_prime = static_cast<long>(gamma_set.elements.size());
  Int q = int_pow(Int(p), a);
  long b_cap = 0;
  {
    Int qb = q;
    while (qb <= caps.qb_cap && b_cap < rep.B_prime) {
      ++b_cap;
      qb *= q;
    }
  }
  if (b_cap == 0) throw cap_exceeded("theorem_6_1_search: q exceeds the q^b cap");
  rep.b_scanned = b_cap;
  rep.complete = b_cap >= rep.B_prime;
  rep.cap_hit = !rep.complete;

  auto ctx = SliceContext::make(cfg);
  bool have = false;
  for (const VecQ& gamma : gamma_set.elements) {
    for (long b = 1; b <= b_cap; ++b) {
      RSliceStats st;
      try {
        st = w_R_slice(ctx, gamma, p, a, b, caps, false);
      } catch (const cap_exceeded&) {
        rep.cap_hit = true;
        continue;
      }
      if (st.count == 0) {
        ++rep.empty_cells;
        continue;
      }
      rep.cells.push_back(SearchCell{gamma, b, st.count, st.min_weight});
      if (!have || st.min_weight < rep.w) {
        have = true;
        rep.w = st.min_weight;
        rep.gamma = gamma;
        rep.b = b;
        rep.v = st.argmin;
      }
    }
  }
  if (!have)
    throw not_found("theorem_6_1_search: every R_{gamma,ab} slice within caps is empty");
  auto cert = corollary_3_5_bound(cfg, rep.gamma, p, caps);
  rep.cert_bound = cert.bound;
  rep.cert_attained = cert.bound == rep.w;
  return rep;
}

struct Lemma62Split {
  VecQ epsilon;  // the repeated coset value sum_i s_i a_i
  long t = 1;
  VecQ u;  // in R_{epsilon, a t}
  VecQ v;  // in R_{epsilon, a (b-t)}
  Rat w_r, w_u, w_v;
};

// Digit-block split of Lemma 6.2.  Requires the collision of (6.6):
// sum r^{(a k1)} a_i = sum r^{(a k2)} a_i exactly.  Splitting the base-q
// digit blocks of s = r^{(a k1)} at t = k2 - k1 yields u and v with
// sum u_i a_i = sum v_i a_i = epsilon and the exact convexity identity
// w(s) = (t/b) w(u) + (1 - t/b) w(v).
inline Lemma62Split lemma_6_2_split(const Configuration& cfg, const VecQ& r, std::int64_t p,
                                    long a, long b, long k1, long k2) {
  require_prime(p);
  require_in_R(r, p);
  if (!(0 <= k1 && k1 < k2 && k2 <= b - 1))
    throw std::invalid_argument("lemma_6_2_split: need 0 <= k1 < k2 <= b-1");
  Int q = int_pow(Int(p), a);
  Int Qb = int_pow(q, b);
  long N = static_cast<long>(r.size());

  // base-q digit blocks of (q^b - 1)(-r), least significant first
  std::vector<VecZ> blocks(static_cast<std::size_t>(N));
  for (long i = 0; i < N; ++i) {
    Rat scaled = -r[i] * Rat(Qb - 1);
    if (!is_integer(scaled))
      throw std::invalid_argument("lemma_6_2_split: r is not in R_{gamma,ab}");
    Int s = to_int(scaled);
    blocks[i].assign(static_cast<std::size_t>(b), Int(0));
    for (long k = 0; k < b; ++k) {
      Int qk;
      boost::multiprecision::divide_qr(s, q, s, qk);
      blocks[i][k] = qk;
    }
  }
  auto shifted_r = [&](long k) {  // r^{(a k)}
    VecQ out(static_cast<std::size_t>(N));
    for (long i = 0; i < N; ++i) {
      Int val = 0;
      for (long j = b - 1; j >= 0; --j) val = val * q + blocks[i][(j + k) % b];
      out[i] = Rat(-val, Qb - 1);
    }
    return out;
  };
  VecQ s1 = shifted_r(k1), s2 = shifted_r(k2);
  VecQ e1 = apply_configuration(cfg, s1), e2 = apply_configuration(cfg, s2);
  if (e1 != e2)
    throw std::invalid_argument("lemma_6_2_split: no collision at (k1,k2): " +
                                format_vector(e1) + " vs " + format_vector(e2));

  Lemma62Split out;
  out.epsilon = e1;
  out.t = k2 - k1;
  Int Qt = int_pow(q, out.t), Qbt = int_pow(q, b - out.t);
  out.u.resize(static_cast<std::size_t>(N));
  out.v.resize(static_cast<std::size_t>(N));
  for (long i = 0; i < N; ++i) {
    Int low = 0, high = 0;
    for (long k = out.t - 1; k >= 0; --k) low = low * q + blocks[i][(k + k1) % b];
    for (long k = b - 1; k >= out.t; --k) high = high * q + blocks[i][(k + k1) % b];
    out.u[i] = Rat(-low, Qt - 1);
    out.v[i] = Rat(-high, Qbt - 1);
  }
  if (apply_configuration(cfg, out.u) != out.epsilon ||
      apply_configuration(cfg, out.v) != out.epsilon)
    throw std::logic_error("lemma_6_2_split: split blocks do not land on epsilon");
  out.w_r = weight_with_exponent(r, p, a * b).w;
  out.w_u = weight_with_exponent(out.u, p, a * out.t).w;
  out.w_v = weight_with_exponent(out.v, p, a * (b - out.t)).w;
  Rat tb = Rat(out.t, Int(b));
  if (out.w_r != tb * out.w_u + (1 - tb) * out.w_v)
    throw std::logic_error("lemma_6_2_split: convexity identity failed");
  return out;
}

}  // namespace ahyp
