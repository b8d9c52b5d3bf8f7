#pragma once
// The configuration A, its relation lattice L, negative supports, the
// finite slices L_{v,b}, the nonconfluence test and the complete
// intersection configuration builder.

#include "ahyp/linalg.hpp"
#include "ahyp/padic.hpp"
#include "ahyp/simplex.hpp"

#include <functional>
#include <optional>
#include <set>

namespace ahyp {

// The set A = {a_1,...,a_N} of N column vectors in Z^n.
struct Configuration {
  long n = 0;
  long N = 0;
  MatZ cols;  // N vectors, each of length n
  std::vector<std::string> labels;

  const VecZ& column(long i) const { return cols[static_cast<std::size_t>(i)]; }

  // n x N matrix whose columns are the a_i
  MatZ matrix() const {
    MatZ m(static_cast<std::size_t>(n), VecZ(static_cast<std::size_t>(N), Int(0)));
    for (long j = 0; j < N; ++j)
      for (long i = 0; i < n; ++i) m[i][j] = cols[j][i];
    return m;
  }
};

inline Configuration make_configuration(MatZ columns, std::vector<std::string> labels = {}) {
  Configuration cfg;
  cfg.N = static_cast<long>(columns.size());
  if (cfg.N < 1) throw std::invalid_argument("configuration needs at least one column");
  cfg.n = static_cast<long>(columns[0].size());
  if (cfg.n < 1) throw std::invalid_argument("configuration needs ambient dimension >= 1");
  for (const auto& c : columns)
    if (static_cast<long>(c.size()) != cfg.n)
      throw std::invalid_argument("configuration columns have mixed dimensions");
  std::set<VecZ> seen;
  for (const auto& c : columns)
    if (!seen.insert(c).second)
      throw std::invalid_argument("duplicate column in configuration: " + format_vector(c));
  if (!labels.empty() && static_cast<long>(labels.size()) != cfg.N)
    throw std::invalid_argument("label count does not match column count");
  cfg.cols = std::move(columns);
  cfg.labels = std::move(labels);
  return cfg;
}

inline VecQ apply_configuration(const Configuration& cfg, const VecQ& coeffs) {
  VecQ out(static_cast<std::size_t>(cfg.n), Rat(0));
  for (long j = 0; j < cfg.N; ++j)
    for (long i = 0; i < cfg.n; ++i) out[i] += coeffs[j] * Rat(cfg.cols[j][i]);
  return out;
}

inline VecZ apply_configuration(const Configuration& cfg, const VecZ& coeffs) {
  VecZ out(static_cast<std::size_t>(cfg.n), Int(0));
  for (long j = 0; j < cfg.N; ++j)
    for (long i = 0; i < cfg.n; ++i) out[i] += coeffs[j] * cfg.cols[j][i];
  return out;
}

// Basis of the lattice of relations L = { l : sum_i l_i a_i = 0 }.
struct LatticeBasis {
  MatZ vecs;  // rank many vectors of length N, canonical (row HNF)
  long rank() const { return static_cast<long>(vecs.size()); }
};

inline LatticeBasis relation_lattice(const Configuration& cfg) {
  LatticeBasis basis;
  basis.vecs = row_hnf(integer_kernel(cfg.matrix()));
  for (const auto& l : basis.vecs)
    if (!is_zero_vector(apply_configuration(cfg, l)))
      throw std::logic_error("relation_lattice: basis vector is not a relation");
  return basis;
}

inline VecZ lattice_combination(const LatticeBasis& basis, const VecZ& coeffs) {
  long N = basis.rank() ? static_cast<long>(basis.vecs[0].size()) : 0;
  VecZ l(static_cast<std::size_t>(N), Int(0));
  for (long k = 0; k < basis.rank(); ++k)
    for (long j = 0; j < N; ++j) l[j] += coeffs[k] * basis.vecs[k][j];
  return l;
}

// nsupp(v) = { i : v_i is a negative integer }, 0-based indices.
inline std::vector<long> nsupp(const VecQ& v) {
  std::vector<long> out;
  for (long i = 0; i < static_cast<long>(v.size()); ++i)
    if (is_integer(v[i]) && v[i] < 0) out.push_back(i);
  return out;
}

inline bool proper_subset(const std::vector<long>& a, const std::vector<long>& b) {
  if (a.size() >= b.size()) return false;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Bounded search over basis coefficients with infinity norm <= radius.
struct MinimalSupportVerdict {
  bool minimal_within_radius = true;
  VecZ counterexample;         // l with nsupp(v+l) strictly inside nsupp(v)
  VecZ counterexample_coeffs;  // its basis coefficients
};

inline MinimalSupportVerdict minimal_negative_support(const VecQ& v, const LatticeBasis& basis,
                                                      long radius) {
  if (radius < 0) throw std::invalid_argument("radius must be >= 0");
  MinimalSupportVerdict verdict;
  auto base_support = nsupp(v);
  long d = basis.rank();
  if (d == 0) return verdict;
  VecZ coeffs(static_cast<std::size_t>(d), Int(-radius));
  for (;;) {
    VecZ l = lattice_combination(basis, coeffs);
    VecQ shifted(v);
    for (std::size_t j = 0; j < shifted.size(); ++j) shifted[j] += Rat(l[j]);
    if (proper_subset(nsupp(shifted), base_support)) {
      verdict.minimal_within_radius = false;
      verdict.counterexample = l;
      verdict.counterexample_coeffs = coeffs;
      return verdict;
    }
    long k = d - 1;
    while (k >= 0 && coeffs[k] == radius) coeffs[k--] = -radius;
    if (k < 0) break;
    ++coeffs[k];
  }
  return verdict;
}

namespace detail {

// Enumerate integer points c with lo <= B c <= hi componentwise, where B
// is the N x d matrix whose columns are the lattice basis vectors.  Depth
// first over coordinates of c; exact LP bounds certify completeness.
template <class F>
void enumerate_lattice_box(const LatticeBasis& basis, const VecZ& lo, const VecZ& hi,
                           const Caps& caps, F&& emit) {
  long d = basis.rank();
  long N = d ? static_cast<long>(basis.vecs[0].size()) : 0;
  if (d == 0) {
    emit(VecZ{});
    return;
  }
  if (d == 1) {
    bool empty = false;
    Int clo, chi;
    bool have = false;
    for (long i = 0; i < N; ++i) {
      const Int& k = basis.vecs[0][i];
      if (k == 0) {
        if (lo[i] > 0 || hi[i] < 0) empty = true;
        continue;
      }
      Int a = k > 0 ? ceil_div(lo[i], k) : ceil_div(hi[i], k);
      Int b = k > 0 ? floor_div(hi[i], k) : floor_div(lo[i], k);
      if (!have) {
        clo = a;
        chi = b;
        have = true;
      } else {
        if (a > clo) clo = a;
        if (b < chi) chi = b;
      }
    }
    if (empty || !have || clo > chi) return;
    if (chi - clo + 1 > caps.point_cap)
      throw cap_exceeded("lattice box enumeration exceeds point cap");
    for (Int c = clo; c <= chi; ++c) emit(VecZ{c});
    return;
  }
  // general case: LP bounds per level over the free coefficients
  std::int64_t emitted = 0;
  VecZ fixed;
  auto bounds_lp = [&](long level, bool maximize) -> std::optional<Rat> {
    // variables: c_level..c_{d-1} split into +/-, plus N slack pairs are
    // avoided by solving with two-sided rows via slacks: lo <= Bc <= hi
    // becomes Bc - s = lo, s + t = hi - lo with s,t >= 0.
    long free = d - level;
    long vars = 2 * free + 2 * N;
    MatQ A(2 * N, VecQ(vars, Rat(0)));
    VecQ b(2 * N, Rat(0));
    for (long i = 0; i < N; ++i) {
      Rat base = 0;
      for (long k = 0; k < level; ++k) base += Rat(basis.vecs[k][i] * fixed[k]);
      for (long k = 0; k < free; ++k) {
        A[i][2 * k] = Rat(basis.vecs[level + k][i]);
        A[i][2 * k + 1] = -Rat(basis.vecs[level + k][i]);
      }
      A[i][2 * free + 2 * i] = -1;  // slack s_i
      b[i] = Rat(lo[i]) - base;
      A[N + i][2 * free + 2 * i] = 1;
      A[N + i][2 * free + 2 * i + 1] = 1;
      b[N + i] = Rat(hi[i] - lo[i]);
    }
    VecQ c(vars, Rat(0));
    c[0] = maximize ? -1 : 1;
    c[1] = maximize ? 1 : -1;
    auto res = solve_lp_eq(A, b, c);
    if (res.status == LpStatus::infeasible) return std::nullopt;
    if (res.status == LpStatus::unbounded)
      throw std::logic_error("lattice box enumeration: unbounded level LP");
    return maximize ? -res.objective : res.objective;
  };
  std::function<void(long)> rec = [&](long level) {
    if (level == d) {
      if (++emitted > caps.point_cap)
        throw cap_exceeded("lattice box enumeration exceeds point cap");
      VecZ l = lattice_combination(basis, fixed);
      for (long i = 0; i < N; ++i)
        if (l[i] < lo[i] || l[i] > hi[i]) return;
      emit(fixed);
      return;
    }
    auto lo_b = bounds_lp(level, false);
    if (!lo_b) return;
    auto hi_b = bounds_lp(level, true);
    Int from = ceil_rat(*lo_b), to = floor_rat(*hi_b);
    for (Int c = from; c <= to; ++c) {
      fixed.push_back(c);
      rec(level + 1);
      fixed.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

// The complete finite set L_{v,b} = { l in L_v : v + (1-q^b)^{-1} l in
// R_{beta,b} }, q = p^a.  Condition (2.2) per coordinate translates to the
// integer box (q^b-1) v_i <= l_i <= (q^b-1)(v_i + 1).
inline std::vector<VecZ> L_vb_elements(const VecQ& v, const LatticeBasis& basis, std::int64_t p,
                                       long a, long b, const Caps& caps = {}) {
  require_prime(p);
  if (b < 1) throw std::invalid_argument("L_vb_elements: b must be >= 1");
  if (a < 1) throw std::invalid_argument("L_vb_elements: a must be >= 1");
  Int q = int_pow(Int(p), a);
  Int Q = int_pow(q, b);
  if (Q > caps.qb_cap) throw cap_exceeded("L_vb_elements: q^b exceeds cap");
  long N = static_cast<long>(v.size());
  VecZ lo(N), hi(N);
  for (long i = 0; i < N; ++i) {
    if (v[i] < -1 || v[i] > 0 || !is_p_integral(v[i], p))
      throw std::invalid_argument("L_vb_elements: v is not in R");
    Rat scaled = Rat(Q - 1) * v[i];
    if (!is_integer(scaled))
      throw std::invalid_argument("L_vb_elements: (1-p^a)v is not integral (a mismatched)");
    lo[i] = to_int(scaled);
    hi[i] = lo[i] + (Q - 1);
  }
  std::vector<VecZ> out;
  auto base_support = nsupp(v);
  detail::enumerate_lattice_box(basis, lo, hi, caps, [&](const VecZ& coeffs) {
    VecZ l = lattice_combination(basis, coeffs);
    if (basis.rank() == 0) l.assign(static_cast<std::size_t>(N), Int(0));
    VecQ shifted(v);
    for (long i = 0; i < N; ++i) shifted[i] += Rat(l[i]);
    if (nsupp(shifted) != base_support)
      throw std::logic_error("L_vb_elements: box member escaped L_v");
    out.push_back(std::move(l));
  });
  std::sort(out.begin(), out.end(), [](const VecZ& x, const VecZ& y) { return lex_less(x, y); });
  return out;
}

// Rational linear form h with h(a_i) = 1 for all i, when one exists.
inline std::optional<VecQ> is_nonconfluent(const Configuration& cfg) {
  MatQ rows(static_cast<std::size_t>(cfg.N));
  VecQ rhs(static_cast<std::size_t>(cfg.N), Rat(1));
  for (long i = 0; i < cfg.N; ++i) rows[i] = to_vecq(cfg.column(i));
  return solve_q(rows, rhs);
}

// Complete intersection builder: columns (a_j^{(i)}, e_i) in Z^{n+M}.
struct CompleteIntersectionConfig {
  Configuration config;
  long base_dim = 0;  // n
  long blocks = 0;    // M
  std::vector<std::pair<long, long>> index;  // column -> (block i, member j), 0-based
};

inline CompleteIntersectionConfig complete_intersection_config(const std::vector<MatZ>& blocks) {
  long M = static_cast<long>(blocks.size());
  if (M < 1) throw std::invalid_argument("complete intersection needs at least one block");
  long n = -1;
  for (const auto& blk : blocks)
    for (const auto& a : blk) {
      if (n < 0) n = static_cast<long>(a.size());
      if (static_cast<long>(a.size()) != n)
        throw std::invalid_argument("complete intersection blocks have mixed dimensions");
    }
  if (n < 0) throw std::invalid_argument("complete intersection blocks are empty");
  CompleteIntersectionConfig out;
  out.base_dim = n;
  out.blocks = M;
  MatZ cols;
  for (long i = 0; i < M; ++i) {
    for (long j = 0; j < static_cast<long>(blocks[i].size()); ++j) {
      VecZ hat(blocks[i][j]);
      hat.resize(static_cast<std::size_t>(n + M), Int(0));
      hat[static_cast<std::size_t>(n + i)] = 1;
      cols.push_back(std::move(hat));
      out.index.emplace_back(i, j);
    }
  }
  out.config = make_configuration(std::move(cols));
  return out;
}

// The distinguished-monomial exponent of (5.10): v = -1 exactly at the
// chosen member of each block, and beta_hat = (beta, -1, ..., -1).
struct DistinguishedExponent {
  VecQ v;
  VecQ beta_hat;
};

inline DistinguishedExponent distinguished_exponent(const CompleteIntersectionConfig& cic,
                                                    const std::vector<long>& choices) {
  if (static_cast<long>(choices.size()) != cic.blocks)
    throw std::invalid_argument("need one distinguished monomial per block");
  DistinguishedExponent out;
  out.v.assign(static_cast<std::size_t>(cic.config.N), Rat(0));
  for (long col = 0; col < cic.config.N; ++col) {
    auto [i, j] = cic.index[static_cast<std::size_t>(col)];
    if (choices[static_cast<std::size_t>(i)] == j) out.v[static_cast<std::size_t>(col)] = -1;
  }
  long marked = 0;
  for (const auto& x : out.v)
    if (x == -1) ++marked;
  if (marked != cic.blocks)
    throw std::invalid_argument("distinguished choice out of range for some block");
  out.beta_hat = apply_configuration(cic.config, out.v);
  return out;
}

}  // namespace ahyp
