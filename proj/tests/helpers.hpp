#pragma once
// Shared test utilities: fixed-seed RNG (seeds are printed so every
// randomized property run is reproducible) and independent brute-force
// oracles that never touch the implementation paths they check.

#include "ahyp/polytope.hpp"

#include <iostream>
#include <random>

namespace ahyp_test {

using namespace ahyp;

inline std::mt19937_64 seeded_rng(const char* name, std::uint64_t seed) {
  std::cout << "[seed] " << name << " = " << seed << "\n";
  return std::mt19937_64(seed);
}

inline long rand_long(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Legendre's formula by direct summation; the independent oracle for
// ord_p_factorial.
inline Int legendre_ord_factorial(long m, long p) {
  Int total = 0;
  Int pk = p;
  while (pk <= m) {
    total += Int(m) / pk;
    pk *= p;
  }
  return total;
}

// Brute-force LP oracle: min c.x over {Ax = b, x >= 0} by enumerating all
// basic solutions (square column subsets), fully independent of simplex.
inline std::optional<Rat> lp_min_by_vertices(const MatQ& A, const VecQ& b, const VecQ& c) {
  long m = static_cast<long>(A.size());
  long n = m ? static_cast<long>(A[0].size()) : 0;
  std::optional<Rat> best;
  std::vector<long> subset;
  std::function<void(long, long)> rec = [&](long start, long need) {
    if (need == 0) {
      MatQ sq(static_cast<std::size_t>(m), VecQ(subset.size(), Rat(0)));
      for (long i = 0; i < m; ++i)
        for (std::size_t k = 0; k < subset.size(); ++k) sq[i][k] = A[i][subset[k]];
      auto sol = solve_q(sq, b);
      if (!sol) return;
      // solve_q zeroes free columns; verify the residual exactly
      VecQ x(static_cast<std::size_t>(n), Rat(0));
      for (std::size_t k = 0; k < subset.size(); ++k) x[subset[k]] = (*sol)[k];
      for (long i = 0; i < m; ++i) {
        Rat acc = 0;
        for (long j = 0; j < n; ++j) acc += A[i][j] * x[j];
        if (acc != b[i]) return;
      }
      for (long j = 0; j < n; ++j)
        if (x[j] < 0) return;
      Rat obj = dot(c, x);
      if (!best || obj < *best) best = obj;
      return;
    }
    for (long i = start; i <= n - need; ++i) {
      subset.push_back(i);
      rec(i + 1, need - 1);
      subset.pop_back();
    }
  };
  for (long size = 0; size <= std::min(m, n); ++size) rec(0, size);
  return best;
}

// Independent enumeration of R_{beta,b}: constraint-propagation DFS over
// the digit vectors s (force any column that is the last unassigned one in
// some coordinate, otherwise branch on the narrowest column range), all in
// 64-bit arithmetic.  This shares nothing with the Hermite/kernel-line
// path inside w_R_slice.
struct OracleSliceResult {
  long long count = 0;
  long long min_digit_sum = -1;
};

namespace detail {

inline long long lldiv_floor(long long x, long long y) {
  long long q = x / y, r = x % y;
  if (r != 0 && ((x < 0) != (y < 0))) --q;
  return q;
}

inline long long lldiv_ceil(long long x, long long y) {
  long long q = x / y, r = x % y;
  if (r != 0 && ((x < 0) == (y < 0))) ++q;
  return q;
}

struct OracleDfs {
  long n, N, p;
  long long M;
  std::vector<std::vector<long long>> A;          // n x N
  std::vector<std::vector<long>> rows_of_column;  // adjacency
  std::vector<std::vector<long>> cols_of_row;
  std::vector<long long> s, residual;
  std::vector<long> live_in_row;
  OracleSliceResult out;

  long long digit_sum(long long x) const {
    long long acc = 0;
    while (x > 0) {
      acc += x % p;
      x /= p;
    }
    return acc;
  }

  void assign(long j, long long val) {
    s[j] = val;
    for (long i : rows_of_column[j]) {
      residual[i] -= A[i][j] * val;
      --live_in_row[i];
    }
  }

  void unassign(long j) {
    for (long i : rows_of_column[j]) {
      residual[i] += A[i][j] * s[j];
      ++live_in_row[i];
    }
    s[j] = -1;
  }

  // column range implied by interval arithmetic over every row it touches
  std::pair<long long, long long> column_range(long j) const {
    long long lo = 0, hi = M;
    for (long i : rows_of_column[j]) {
      long long c = A[i][j];
      long long rest_min = 0, rest_max = 0;
      for (long jj : cols_of_row[i]) {
        if (jj == j || s[jj] >= 0) continue;
        if (A[i][jj] > 0)
          rest_max += A[i][jj] * M;
        else
          rest_min += A[i][jj] * M;
      }
      long long lo_i = residual[i] - rest_max, hi_i = residual[i] - rest_min;
      long long cl = c > 0 ? lldiv_ceil(lo_i, c) : lldiv_ceil(hi_i, c);
      long long ch = c > 0 ? lldiv_floor(hi_i, c) : lldiv_floor(lo_i, c);
      lo = std::max(lo, cl);
      hi = std::min(hi, ch);
      if (lo > hi) break;
    }
    return {lo, hi};
  }

  void rec() {
    // propagation: a coordinate with one live column forces that column
    for (long i = 0; i < n; ++i) {
      if (live_in_row[i] == 0) {
        if (residual[i] != 0) return;
        continue;
      }
      if (live_in_row[i] != 1) continue;
      long j = -1;
      for (long jj : cols_of_row[i])
        if (s[jj] < 0) j = jj;
      long long c = A[i][j];
      if (residual[i] % c != 0) return;
      long long val = residual[i] / c;
      if (val < 0 || val > M) return;
      assign(j, val);
      rec();
      unassign(j);
      return;
    }
    long branch = -1;
    long long best_width = -1, blo = 0, bhi = 0;
    for (long j = 0; j < N; ++j) {
      if (s[j] >= 0) continue;
      auto [lo, hi] = column_range(j);
      if (lo > hi) return;  // dead prefix
      long long width = hi - lo;
      if (best_width < 0 || width < best_width) {
        best_width = width;
        branch = j;
        blo = lo;
        bhi = hi;
      }
    }
    if (branch < 0) {  // everything assigned and every residual zero
      ++out.count;
      long long w = 0;
      for (long j = 0; j < N; ++j) w += digit_sum(s[j]);
      if (out.min_digit_sum < 0 || w < out.min_digit_sum) out.min_digit_sum = w;
      return;
    }
    for (long long val = blo; val <= bhi; ++val) {
      assign(branch, val);
      rec();
      unassign(branch);
    }
  }
};

}  // namespace detail

inline OracleSliceResult oracle_R_slice(const Configuration& cfg, const VecQ& beta, long p,
                                        long a, long b) {
  detail::OracleDfs dfs;
  dfs.n = cfg.n;
  dfs.N = cfg.N;
  dfs.p = p;
  Int Qb = int_pow(int_pow(Int(p), a), b);
  if (Qb > (Int(1) << 40)) throw cap_exceeded("oracle_R_slice: q^b too large");
  dfs.M = static_cast<long long>(Qb - 1);
  dfs.residual.resize(static_cast<std::size_t>(dfs.n));
  for (long i = 0; i < dfs.n; ++i) {
    Rat t = Rat(Qb - 1) * (-beta[i]);
    if (!is_integer(t)) throw std::invalid_argument("oracle_R_slice: beta incompatible with a");
    dfs.residual[i] = static_cast<long long>(to_int(t));
  }
  dfs.A.assign(static_cast<std::size_t>(dfs.n),
               std::vector<long long>(static_cast<std::size_t>(dfs.N)));
  dfs.rows_of_column.assign(static_cast<std::size_t>(dfs.N), {});
  dfs.cols_of_row.assign(static_cast<std::size_t>(dfs.n), {});
  dfs.live_in_row.assign(static_cast<std::size_t>(dfs.n), 0);
  for (long i = 0; i < dfs.n; ++i)
    for (long j = 0; j < dfs.N; ++j) {
      dfs.A[i][j] = static_cast<long long>(cfg.cols[j][i]);
      if (dfs.A[i][j] != 0) {
        dfs.rows_of_column[j].push_back(i);
        dfs.cols_of_row[i].push_back(j);
        ++dfs.live_in_row[i];
      }
    }
  dfs.s.assign(static_cast<std::size_t>(dfs.N), -1);
  dfs.rec();
  return dfs.out;
}

}  // namespace ahyp_test
