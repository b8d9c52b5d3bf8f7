#pragma once
// Exact rational simplex (dense tableau, two phase, Bland's rule).  Solves
//   min c.x   s.t.  A x = b,  x >= 0
// over cpp_rational.  Bland's rule guarantees termination; problem sizes
// in this library are tiny so no effort is spent on sparsity.

#include "ahyp/rational.hpp"

#include <cassert>

namespace ahyp {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rat objective = 0;
  VecQ x;  // primal solution when optimal
};

namespace detail {

// Tableau rows: m constraint rows then one objective row.  Columns: n
// variables then the rhs.  basis[i] is the variable basic in row i.
struct Tableau {
  long m = 0, n = 0;
  MatQ t;
  std::vector<long> basis;

  void pivot(long row, long col) {
    Rat inv = t[row][col];
    for (long j = 0; j <= n; ++j) t[row][j] /= inv;
    for (long i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (long j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  enum class Step { progressed, optimal, unbounded };

  // Bland: entering = lowest-index column with negative reduced cost;
  // leaving = lowest ratio, ties broken by lowest basic variable index.
  Step step() {
    long enter = -1;
    for (long j = 0; j < n; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;
      }
    if (enter < 0) return Step::optimal;
    long leave = -1;
    Rat best_ratio = 0;
    for (long i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) return Step::unbounded;
    pivot(leave, enter);
    return Step::progressed;
  }

  Step run() {
    for (;;) {
      Step s = step();
      if (s != Step::progressed) return s;
    }
  }
};

}  // namespace detail

inline LpResult solve_lp_eq(const MatQ& A, const VecQ& b, const VecQ& c) {
  long m = mat_rows(A);
  long n = m ? mat_cols(A) : static_cast<long>(c.size());
  assert(static_cast<long>(c.size()) == n);

  detail::Tableau tab;
  tab.m = m;
  tab.n = n + m;  // original variables + artificials
  tab.t.assign(m + 1, VecQ(tab.n + 1, Rat(0)));
  tab.basis.assign(m, 0);
  for (long i = 0; i < m; ++i) {
    bool neg = b[i] < 0;
    for (long j = 0; j < n; ++j) tab.t[i][j] = neg ? -A[i][j] : A[i][j];
    tab.t[i][tab.n] = neg ? -b[i] : b[i];
    tab.t[i][n + i] = 1;
    tab.basis[i] = n + i;
  }
  // phase 1: minimize the sum of artificials
  for (long j = 0; j < tab.n; ++j) {
    Rat s = 0;
    for (long i = 0; i < m; ++i) s += tab.t[i][j];
    tab.t[m][j] = (j >= n ? Rat(1) : Rat(0)) - s;
  }
  {
    Rat s = 0;
    for (long i = 0; i < m; ++i) s += tab.t[i][tab.n];
    tab.t[m][tab.n] = -s;
  }
  // phase 1 objective is bounded below by 0, so run() must report optimal
  [[maybe_unused]] auto phase1 = tab.run();
  assert(phase1 == detail::Tableau::Step::optimal);
  if (tab.t[m][tab.n] != 0) return LpResult{LpStatus::infeasible, 0, {}};

  // drive any artificial still basic (at zero) out of the basis
  for (long i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    long col = -1;
    for (long j = 0; j < n; ++j)
      if (tab.t[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0)
      tab.pivot(i, col);
    else
      tab.basis[i] = -1;  // redundant row
  }

  // phase 2 objective: c on original columns, artificials forbidden
  for (long j = 0; j <= tab.n; ++j) tab.t[m][j] = 0;
  for (long j = 0; j < n; ++j) tab.t[m][j] = c[j];
  for (long i = 0; i < m; ++i) {
    if (tab.basis[i] < 0 || tab.basis[i] >= n) continue;
    Rat f = tab.t[m][tab.basis[i]];
    if (f == 0) continue;
    for (long j = 0; j <= tab.n; ++j) tab.t[m][j] -= f * tab.t[i][j];
  }
  // freeze artificial columns so they can never re-enter
  for (long i = 0; i <= m; ++i)
    for (long j = n; j < tab.n; ++j) tab.t[i][j] = 0;

  if (tab.run() == detail::Tableau::Step::unbounded)
    return LpResult{LpStatus::unbounded, 0, {}};

  LpResult res;
  res.status = LpStatus::optimal;
  res.x.assign(n, Rat(0));
  for (long i = 0; i < m; ++i)
    if (tab.basis[i] >= 0 && tab.basis[i] < n) res.x[tab.basis[i]] = tab.t[i][tab.n];
  res.objective = -tab.t[m][tab.n];
  return res;
}

// Feasibility of { A x = b, 0 <= x <= upper } via slack variables.
inline bool lp_feasible_box(const MatQ& A, const VecQ& b, const VecQ& upper) {
  long m = mat_rows(A), n = mat_cols(A);
  assert(static_cast<long>(upper.size()) == n);
  MatQ big(m + n, VecQ(2 * n, Rat(0)));
  VecQ rhs(m + n);
  for (long i = 0; i < m; ++i) {
    for (long j = 0; j < n; ++j) big[i][j] = A[i][j];
    rhs[i] = b[i];
  }
  for (long j = 0; j < n; ++j) {
    big[m + j][j] = 1;
    big[m + j][n + j] = 1;
    rhs[m + j] = upper[j];
  }
  VecQ c(2 * n, Rat(0));
  return solve_lp_eq(big, rhs, c).status == LpStatus::optimal;
}

}  // namespace ahyp
