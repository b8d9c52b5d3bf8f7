#pragma once
// Dense exact linear algebra on small matrices: rational elimination for
// rank / solve / nullspace, and integer column-Hermite reduction for
// lattice kernels and integer particular solutions.  The integer kernel of
// a matrix is saturated by construction (k*x in ker, x integral => x in ker),
// so any basis computed here generates the full relation lattice.

#include "ahyp/rational.hpp"

#include <optional>

namespace ahyp {

inline long mat_rows(const MatQ& m) { return static_cast<long>(m.size()); }
inline long mat_cols(const MatQ& m) { return m.empty() ? 0 : static_cast<long>(m[0].size()); }

inline MatQ to_matq(const MatZ& m) {
  MatQ out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = to_vecq(m[i]);
  return out;
}

// Row echelon reduction in place; returns pivot columns.
inline std::vector<long> rref(MatQ& m) {
  long rows = mat_rows(m), cols = mat_cols(m);
  std::vector<long> pivots;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    long pr = -1;
    for (long i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    Rat inv = m[r][c];
    for (long j = c; j < cols; ++j) m[r][j] /= inv;
    for (long i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (long j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline long rank_q(MatQ m) { return static_cast<long>(rref(m).size()); }

// Particular solution of M x = b over Q (free variables set to 0).
inline std::optional<VecQ> solve_q(const MatQ& M, const VecQ& b) {
  long rows = mat_rows(M), cols = mat_cols(M);
  MatQ aug(M);
  for (long i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  // a pivot in the augmented column marks inconsistency
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  // rref is fully reduced, so with free variables at 0 each pivot reads off
  VecQ x(cols, Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
  return x;
}

// Basis of the rational nullspace of M (each vector of length cols).
inline MatQ nullspace_q(const MatQ& M) {
  MatQ m(M);
  long cols = mat_cols(M);
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (long c : pivots) is_pivot[c] = true;
  MatQ basis;
  for (long free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    VecQ v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free];
    basis.push_back(v);
  }
  return basis;
}

// --- integer lattice computations -------------------------------------

// Column-style Hermite reduction: returns H (column echelon, pivots > 0)
// and unimodular U with A * U = H.  A is rows x cols, U is cols x cols.
struct HermiteColumns {
  MatZ H;
  MatZ U;
  std::vector<std::pair<long, long>> pivots;  // (row, col) per pivot
};

inline HermiteColumns hermite_columns(const MatZ& A) {
  long rows = static_cast<long>(A.size());
  long cols = rows ? static_cast<long>(A[0].size()) : 0;
  HermiteColumns out;
  out.H = A;
  out.U.assign(cols, VecZ(cols, Int(0)));
  for (long j = 0; j < cols; ++j) out.U[j][j] = 1;

  auto col_swap = [&](long a, long b) {
    if (a == b) return;
    for (long i = 0; i < rows; ++i) std::swap(out.H[i][a], out.H[i][b]);
    for (long i = 0; i < cols; ++i) std::swap(out.U[i][a], out.U[i][b]);
  };
  auto col_axpy = [&](long dst, long src, const Int& f) {  // col dst -= f * col src
    if (f == 0) return;
    for (long i = 0; i < rows; ++i) out.H[i][dst] -= f * out.H[i][src];
    for (long i = 0; i < cols; ++i) out.U[i][dst] -= f * out.U[i][src];
  };
  auto col_negate = [&](long c) {
    for (long i = 0; i < rows; ++i) out.H[i][c] = -out.H[i][c];
    for (long i = 0; i < cols; ++i) out.U[i][c] = -out.U[i][c];
  };

  long lead = 0;
  for (long row = 0; row < rows && lead < cols; ++row) {
    // chained gcd elimination across columns lead..cols-1 in this row
    for (;;) {
      long best = -1;
      for (long j = lead; j < cols; ++j) {
        if (out.H[row][j] == 0) continue;
        if (best < 0 || abs(out.H[row][j]) < abs(out.H[row][best])) best = j;
      }
      if (best < 0) break;  // row is zero from lead onward
      col_swap(lead, best);
      bool cleared = true;
      for (long j = lead + 1; j < cols; ++j) {
        if (out.H[row][j] == 0) continue;
        Int q = out.H[row][j] / out.H[row][lead];
        col_axpy(j, lead, q);
        if (out.H[row][j] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (lead < cols && out.H[row][lead] != 0) {
      if (out.H[row][lead] < 0) col_negate(lead);
      out.pivots.emplace_back(row, lead);
      ++lead;
    }
  }
  return out;
}

// Basis of { x integral : A x = 0 }; rows of the result are basis vectors.
inline MatZ integer_kernel(const MatZ& A) {
  auto hc = hermite_columns(A);
  long cols = A.empty() ? 0 : static_cast<long>(A[0].size());
  long rank = static_cast<long>(hc.pivots.size());
  MatZ basis;
  for (long j = rank; j < cols; ++j) {
    VecZ v(cols);
    for (long i = 0; i < cols; ++i) v[i] = hc.U[i][j];
    basis.push_back(v);
  }
  return basis;
}

// Row-style Hermite normal form; canonicalizes a lattice basis (pivots
// positive, entries above each pivot reduced into [0, pivot)).
inline MatZ row_hnf(MatZ m) {
  long rows = static_cast<long>(m.size());
  long cols = rows ? static_cast<long>(m[0].size()) : 0;
  long r = 0;
  for (long c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      long best = -1;
      for (long i = r; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        if (best < 0 || abs(m[i][c]) < abs(m[best][c])) best = i;
      }
      if (best < 0) break;
      std::swap(m[r], m[best]);
      bool cleared = true;
      for (long i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Int q = m[i][c] / m[r][c];
        for (long j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (m[r][c] != 0) {
      if (m[r][c] < 0)
        for (long j = 0; j < cols; ++j) m[r][j] = -m[r][j];
      for (long i = 0; i < r; ++i) {
        Int q = floor_div(m[i][c], m[r][c]);
        if (q != 0)
          for (long j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
      }
      ++r;
    }
  }
  m.resize(static_cast<std::size_t>(r));  // drop zero rows
  return m;
}

// Integer particular solution of A x = b given the Hermite data of A.
inline std::optional<VecZ> solve_integer(const HermiteColumns& hc, const VecZ& b) {
  long rows = static_cast<long>(hc.H.size());
  long cols = rows ? static_cast<long>(hc.H[0].size()) : 0;
  VecZ y(cols, Int(0));
  VecZ residual(b);
  for (auto [prow, pcol] : hc.pivots) {
    Int num = residual[prow];
    Int piv = hc.H[prow][pcol];
    if (num % piv != 0) return std::nullopt;
    Int coef = num / piv;
    y[pcol] = coef;
    if (coef != 0)
      for (long i = 0; i < rows; ++i) residual[i] -= coef * hc.H[i][pcol];
  }
  if (!is_zero_vector(residual)) return std::nullopt;
  VecZ x(cols, Int(0));
  for (long i = 0; i < cols; ++i) {
    Int s = 0;
    for (long j = 0; j < cols; ++j)
      if (y[j] != 0) s += hc.U[i][j] * y[j];
    x[i] = s;
  }
  return x;
}

inline std::optional<VecZ> solve_integer(const MatZ& A, const VecZ& b) {
  return solve_integer(hermite_columns(A), b);
}

// Scale a rational vector to a primitive integer vector (gcd 1).  The sign
// is left as-is; callers orient it.
inline VecZ primitive_integer(const VecQ& v) {
  Int l = 1;
  for (const Rat& x : v) l = lcm(l, denominator(x));
  VecZ out(v.size());
  Int g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = numerator(v[i]) * (l / denominator(v[i]));
    g = gcd(g, out[i]);
  }
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

}  // namespace ahyp
