#pragma once
// Delta = conv(A u {0}), the cone C(Delta) with its facet description and
// face lattice, the polytope weight w_Delta via exact rational LP, minima
// of w_Delta over shifted lattices inside a dilate, and the resulting
// lower bound for w(R_beta).  Degenerate configurations (span(A) a proper
// subspace) are handled by reducing to coordinates on the span; facet
// normals are lifted back to ambient space, and the span equations become
// part of the cone membership test.

#include "ahyp/weight.hpp"

#include <optional>
#include <set>

namespace ahyp {

struct ConeGeometry {
  long n = 0;
  long dim = 0;       // dim of span(A)
  MatZ facets;        // primitive integer normals h, cone = {h.x >= 0} within the span
  MatZ span_eqs;      // primitive integer equations g with g.x = 0 on span(A)
  MatZ generators;    // the columns of A
};

struct Face {
  std::vector<long> tight_facets;  // indices into ConeGeometry::facets
  std::vector<long> columns;       // columns of A lying on the face
};

inline ConeGeometry cone_facets(const Configuration& cfg) {
  ConeGeometry geom;
  geom.n = cfg.n;
  geom.generators = cfg.cols;

  // span equations: all g with g . a_i = 0
  MatQ rows(static_cast<std::size_t>(cfg.N));
  for (long i = 0; i < cfg.N; ++i) rows[i] = to_vecq(cfg.column(i));
  for (const VecQ& g : nullspace_q(rows)) {
    VecZ gz = primitive_integer(g);
    for (auto& x : gz)
      if (x != 0) {
        if (x < 0)
          for (auto& y : gz) y = -y;
        break;
      }
    geom.span_eqs.push_back(gz);
  }
  std::sort(geom.span_eqs.begin(), geom.span_eqs.end(),
            [](const VecZ& a, const VecZ& b) { return lex_less(a, b); });

  // coordinates on the span: greedy independent column subset as basis
  std::vector<long> bcols;
  MatQ bt;  // basis vectors as rows, for rank tests
  for (long i = 0; i < cfg.N; ++i) {
    MatQ trial(bt);
    trial.push_back(to_vecq(cfg.column(i)));
    if (rank_q(trial) > static_cast<long>(bt.size())) {
      bt = std::move(trial);
      bcols.push_back(i);
    }
  }
  long d = static_cast<long>(bcols.size());
  geom.dim = d;
  if (d == 0) return geom;  // cone is the origin

  // B is n x d; solve B xt = a_i for the restricted coordinates
  MatQ B(static_cast<std::size_t>(cfg.n), VecQ(static_cast<std::size_t>(d), Rat(0)));
  for (long k = 0; k < d; ++k)
    for (long i = 0; i < cfg.n; ++i) B[i][k] = Rat(cfg.column(bcols[k])[i]);
  MatQ restricted(static_cast<std::size_t>(cfg.N));
  for (long i = 0; i < cfg.N; ++i) {
    auto sol = solve_q(B, to_vecq(cfg.column(i)));
    if (!sol) throw std::logic_error("cone_facets: column escapes its own span");
    restricted[i] = *sol;
  }

  // every facet of the d-dimensional cone is spanned by generators on it,
  // so scanning (d-1)-subsets of columns finds them all
  std::set<VecZ> found;
  std::vector<long> subset;
  auto try_candidate = [&](const VecQ& ht) {
    VecQ h = ht;
    bool pos = false, neg = false;
    for (long j = 0; j < cfg.N; ++j) {
      Rat e = dot(h, restricted[j]);
      if (e > 0) pos = true;
      if (e < 0) neg = true;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;  // vanishes on everything: not a facet
    if (neg)
      for (auto& x : h) x = -x;
    // lift: solve B^T h_amb = h
    MatQ Bt(static_cast<std::size_t>(d), VecQ(static_cast<std::size_t>(cfg.n), Rat(0)));
    for (long k = 0; k < d; ++k)
      for (long i = 0; i < cfg.n; ++i) Bt[k][i] = B[i][k];
    auto amb = solve_q(Bt, h);
    if (!amb) throw std::logic_error("cone_facets: lift system inconsistent");
    found.insert(primitive_integer(*amb));
  };

  if (d == 1) {
    try_candidate(VecQ{Rat(1)});
  } else {
    std::function<void(long, long)> rec = [&](long start, long need) {
      if (need == 0) {
        MatQ sub;
        for (long idx : subset) sub.push_back(restricted[idx]);
        auto ns = nullspace_q(sub);
        if (ns.size() == 1) try_candidate(ns[0]);
        return;
      }
      for (long i = start; i <= cfg.N - need; ++i) {
        subset.push_back(i);
        rec(i + 1, need - 1);
        subset.pop_back();
      }
    };
    rec(0, d - 1);
  }
  geom.facets.assign(found.begin(), found.end());
  return geom;
}

inline bool in_cone(const ConeGeometry& geom, const VecQ& x) {
  for (const VecZ& g : geom.span_eqs)
    if (dot(g, x) != 0) return false;
  for (const VecZ& h : geom.facets)
    if (dot(h, x) < 0) return false;
  return true;
}

inline std::vector<long> tight_facets(const ConeGeometry& geom, const VecQ& x) {
  std::vector<long> out;
  for (long k = 0; k < static_cast<long>(geom.facets.size()); ++k)
    if (dot(geom.facets[k], x) == 0) out.push_back(k);
  return out;
}

// Smallest face of C(Delta) containing x: cut out by exactly the facets
// vanishing at x.
inline Face smallest_face(const ConeGeometry& geom, const VecQ& x) {
  if (!in_cone(geom, x))
    throw std::invalid_argument("smallest_face: point outside the cone: " + format_vector(x));
  Face f;
  f.tight_facets = tight_facets(geom, x);
  for (long i = 0; i < static_cast<long>(geom.generators.size()); ++i) {
    bool on = true;
    for (long k : f.tight_facets)
      if (dot(geom.facets[k], to_vecq(geom.generators[i])) != 0) {
        on = false;
        break;
      }
    if (on) f.columns.push_back(i);
  }
  return f;
}

inline bool in_relative_interior(const ConeGeometry& geom, const VecQ& x, const Face& face) {
  if (!in_cone(geom, x)) return false;
  return tight_facets(geom, x) == face.tight_facets;
}

// w_Delta(gamma) = min{ sum t_i : sum t_i a_i = gamma, t >= 0 }, the exact
// dilation factor of Delta reaching gamma; nullopt when gamma is outside
// the cone.
inline std::optional<Rat> w_delta(const Configuration& cfg, const VecQ& gamma) {
  MatQ A(static_cast<std::size_t>(cfg.n), VecQ(static_cast<std::size_t>(cfg.N), Rat(0)));
  for (long j = 0; j < cfg.N; ++j)
    for (long i = 0; i < cfg.n; ++i) A[i][j] = Rat(cfg.cols[j][i]);
  VecQ c(static_cast<std::size_t>(cfg.N), Rat(1));
  auto res = solve_lp_eq(A, gamma, c);
  if (res.status == LpStatus::infeasible) return std::nullopt;
  if (res.status != LpStatus::optimal)
    throw std::logic_error("w_delta: LP must be bounded below by 0");
  return res.objective;
}

struct CosetScan {
  bool found = false;
  Rat min = 0;
  VecQ argmin;
  long long scanned = 0;  // lattice points of the dilate visited
};

// Exact minimum of w_Delta over (coset_rep + Z^n), restricted to the cone
// or to the relative interior of `face`, among points with w_Delta <= W.
// Every such point lies in the dilate W.Delta, which is enumerated
// completely, so whenever a point is found the reported minimum is the
// global minimum over the region.
inline CosetScan min_wdelta_on_coset(const Configuration& cfg, const ConeGeometry& geom,
                                     const VecQ& coset_rep, const std::optional<Face>& face,
                                     const Rat& W, const Caps& caps = {}) {
  if (W < 0) throw std::invalid_argument("min_wdelta_on_coset: W must be >= 0");
  long n = cfg.n, N = cfg.N;
  CosetScan out;

  // LP skeleton over t (N vars) + slack u: rows = fixed coordinates so
  // far, plus sum t + u = W
  VecQ x(static_cast<std::size_t>(n), Rat(0));
  auto bound_lp = [&](long level, bool maximize) -> std::optional<Rat> {
    MatQ A(static_cast<std::size_t>(level + 1), VecQ(static_cast<std::size_t>(N + 1), Rat(0)));
    VecQ b(static_cast<std::size_t>(level + 1), Rat(0));
    for (long i = 0; i < level; ++i) {
      for (long j = 0; j < N; ++j) A[i][j] = Rat(cfg.cols[j][i]);
      b[i] = x[i];
    }
    for (long j = 0; j < N; ++j) A[level][j] = 1;
    A[level][N] = 1;
    b[level] = W;
    VecQ c(static_cast<std::size_t>(N + 1), Rat(0));
    for (long j = 0; j < N; ++j) c[j] = maximize ? -Rat(cfg.cols[j][level]) : Rat(cfg.cols[j][level]);
    auto res = solve_lp_eq(A, b, c);
    if (res.status == LpStatus::infeasible) return std::nullopt;
    if (res.status != LpStatus::optimal)
      throw std::logic_error("min_wdelta_on_coset: unbounded coordinate LP over a dilate");
    return maximize ? -res.objective : res.objective;
  };

  std::function<void(long)> rec = [&](long level) {
    if (level == n) {
      if (++out.scanned > caps.point_cap)
        throw cap_exceeded("min_wdelta_on_coset exceeds point cap");
      auto w = w_delta(cfg, x);
      if (!w || *w > W) return;  // not a point of the dilate W.Delta
      if (face ? !in_relative_interior(geom, x, *face) : !in_cone(geom, x)) return;
      if (!out.found || *w < out.min) {
        out.found = true;
        out.min = *w;
        out.argmin = x;
      }
      return;
    }
    auto lo = bound_lp(level, false);
    if (!lo) return;
    auto hi = bound_lp(level, true);
    Int z0 = ceil_rat(*lo - coset_rep[level]);
    Int z1 = floor_rat(*hi - coset_rep[level]);
    for (Int z = z0; z <= z1; ++z) {
      x[level] = coset_rep[level] + Rat(z);
      rec(level + 1);
    }
    x[level] = 0;
  };
  rec(0);
  return out;
}

// Doubling schedule for the cap W, starting from a value that is always
// sufficient when the coset representative itself lies in the region.
inline CosetScan min_wdelta_on_coset_auto(const Configuration& cfg, const ConeGeometry& geom,
                                          const VecQ& coset_rep, const std::optional<Face>& face,
                                          Rat W0, const Caps& caps = {}) {
  Rat W = W0;
  for (;;) {
    auto scan = min_wdelta_on_coset(cfg, geom, coset_rep, face, W, caps);
    if (scan.found) return scan;
    if (W > caps.w_ceiling)
      throw cap_exceeded("min_wdelta_on_coset: no coset point with w_Delta <= ceiling");
    W = W * 2 + 1;
  }
}

struct BoundReport {
  Rat bound = 0;                // (p-1)/e * sum_k w_Delta(sigma^o cap coset_k)
  long e = 1;
  std::vector<Rat> coset_minima;
  std::vector<VecQ> coset_argmins;
  PeriodReport period;
  Face sigma_face;              // sigma_{-beta}
};

// Corollary 3.5 / Eq. (3.4): a certified lower bound for w(R_beta).
inline BoundReport corollary_3_5_bound(const Configuration& cfg, const VecQ& beta, std::int64_t p,
                                       const Caps& caps = {}) {
  require_prime(p);
  for (const Rat& x : beta)
    if (!is_p_integral(x, p)) throw std::invalid_argument("beta is not p-integral");
  Int l = 1;
  for (const Rat& x : beta) l = lcm(l, denominator(x));
  long a = multiplicative_order(Int(p), l);

  BoundReport rep;
  rep.period = period_e(cfg, beta, p, a, caps);
  rep.e = rep.period.e;
  auto geom = cone_facets(cfg);
  VecQ minus_beta(beta.size());
  for (std::size_t i = 0; i < beta.size(); ++i) minus_beta[i] = -beta[i];
  rep.sigma_face = smallest_face(geom, minus_beta);

  Rat total = 0;
  for (long k = 0; k < rep.e; ++k) {
    VecQ rep_k(rep.period.beta_shifts[static_cast<std::size_t>(k)]);
    for (auto& v : rep_k) v = -v;
    auto w0 = w_delta(cfg, rep_k);
    if (!w0 || !in_relative_interior(geom, rep_k, rep.sigma_face))
      throw std::logic_error("corollary_3_5_bound: -beta^(k) escapes sigma^o (Lemma 3.2)");
    auto scan = min_wdelta_on_coset_auto(cfg, geom, rep_k, rep.sigma_face, *w0 + 1, caps);
    rep.coset_minima.push_back(scan.min);
    rep.coset_argmins.push_back(scan.argmin);
    total += scan.min;
  }
  rep.bound = Rat(p - 1) / Rat(rep.e) * total;
  return rep;
}

struct BoundCertificate {
  BoundReport bound;
  Rat min_enumerated;   // min w over R_{beta,b}, b <= b_max
  VecQ witness;         // argmin attaining it
  bool certified = false;  // bound attained by an enumerated witness
};

// The bound/witness sandwich: when the Corollary 3.5 bound is attained by
// an enumerated witness the exact value of w(R_beta) is certified (and the
// witness series is p-integral); otherwise integrality stays undecided by
// this route.
inline BoundCertificate bound_certificate(const Configuration& cfg, const VecQ& beta,
                                          std::int64_t p, long b_max, const Caps& caps = {}) {
  BoundCertificate cert;
  cert.bound = corollary_3_5_bound(cfg, beta, p, caps);
  Int l = 1;
  for (const Rat& x : beta) l = lcm(l, denominator(x));
  long a = multiplicative_order(Int(p), l);
  auto ctx = SliceContext::make(cfg);
  bool any = false;
  for (long b = 1; b <= b_max; ++b) {
    Int qb = int_pow(int_pow(Int(p), a), b);
    if (qb > caps.qb_cap) break;
    auto st = w_R_slice(ctx, beta, p, a, b, caps, false);
    if (st.count == 0) continue;
    if (!any || st.min_weight < cert.min_enumerated) {
      cert.min_enumerated = st.min_weight;
      cert.witness = st.argmin;
      any = true;
    }
  }
  if (!any) throw not_found("bound_certificate: no R_{beta,b} element within caps");
  cert.certified = cert.min_enumerated == cert.bound.bound;
  return cert;
}

}  // namespace ahyp
