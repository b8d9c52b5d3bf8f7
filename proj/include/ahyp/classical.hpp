#pragma once
// Classical rFs-1 series: the domination relation between parameter lists
// (in its ordered-sequence and counting forms, which provably agree), the
// shifted-parameter criterion, Dwork's digitwise criterion, direct
// termwise coefficient valuations, and the GKZ embedding of the series.

#include "ahyp/gkz.hpp"
#include "ahyp/padic.hpp"

#include <optional>

namespace ahyp {

// theta_1..theta_r over sigma_1..sigma_{s-1}, all in (0,1], s >= r.
struct ClassicalParams {
  VecQ thetas;
  VecQ sigmas;

  long r() const { return static_cast<long>(thetas.size()); }
  long s() const { return static_cast<long>(sigmas.size()) + 1; }
};

inline ClassicalParams make_classical_params(VecQ thetas, VecQ sigmas) {
  ClassicalParams cp{std::move(thetas), std::move(sigmas)};
  if (cp.s() < cp.r())
    throw std::invalid_argument("classical series needs s >= r");
  for (const Rat& x : cp.thetas)
    if (x <= 0 || x > 1)
      throw std::invalid_argument("theta parameter outside (0,1]: " + x.str());
  for (const Rat& x : cp.sigmas)
    if (x <= 0 || x > 1)
      throw std::invalid_argument("sigma parameter outside (0,1]: " + x.str());
  return cp;
}

struct DominationRow {
  Rat sigma;
  long I = 0;  // #{ theta_i < sigma_j }
  long J = 0;  // #{ sigma_j' <= sigma_j }
  bool ok = false;
};

struct DominationCertificate {
  bool dominated = false;
  bool counting_verdict = false;
  bool ordered_verdict = false;
  std::vector<DominationRow> rows;
  VecQ merged;                     // the ordered tilde-theta sequence
  std::vector<long> marker_positions;  // positions i_k of the k/(s-r) entries
};

// Works for values in [0,1]; the two formulations are computed
// independently and must agree (this is the Lemma 4.3 equivalence).
inline DominationCertificate dominated_lists(const VecQ& theta, const VecQ& sigma, long s_minus_r) {
  long s1 = static_cast<long>(sigma.size());  // s - 1
  DominationCertificate cert;

  // counting form
  cert.counting_verdict = true;
  for (long j = 0; j < s1; ++j) {
    DominationRow row;
    row.sigma = sigma[j];
    for (const Rat& t : theta)
      if (t < sigma[j]) ++row.I;
    for (const Rat& x : sigma)
      if (sigma[j] >= x) ++row.J;
    if (s_minus_r <= 1) {
      row.ok = row.I >= row.J;
    } else {
      // the deficit J_j - I_j must be coverable by the marker pool
      // (k/(s-r))_{k=1}^{s-r-1}; markers above sigma_j cannot help
      row.ok = row.I >= row.J ||
               (row.J - row.I <= s_minus_r - 1 && sigma[j] >= Rat(row.J - row.I, Int(s_minus_r)));
    }
    cert.counting_verdict = cert.counting_verdict && row.ok;
    cert.rows.push_back(row);
  }
  if (s_minus_r == 0) {
    for (const Rat& t : theta)
      if (!(t < 1)) cert.counting_verdict = false;
  }

  // ordered form
  VecQ ts(theta), ss(sigma);
  std::sort(ts.begin(), ts.end());
  std::sort(ss.begin(), ss.end());
  if (s_minus_r == 0) ss.push_back(Rat(1));  // sigma_r = 1 augmentation
  if (s_minus_r <= 1) {
    cert.merged = ts;
    cert.ordered_verdict = ts.size() == ss.size();
    for (std::size_t k = 0; k < ts.size() && cert.ordered_verdict; ++k)
      if (!(ts[k] < ss[k])) cert.ordered_verdict = false;
  } else {
    // merge theta with the markers k/(s-r); a marker goes before equal
    // thetas so that tilde_theta_{i_k} > tilde_theta_{i_k - 1}
    std::vector<std::pair<Rat, bool>> merged;  // (value, is_marker)
    long mi = 1;
    std::size_t ti = 0;
    while (mi <= s_minus_r - 1 || ti < ts.size()) {
      if (mi <= s_minus_r - 1 &&
          (ti >= ts.size() || Rat(mi, Int(s_minus_r)) <= ts[ti])) {
        merged.emplace_back(Rat(mi, Int(s_minus_r)), true);
        ++mi;
      } else {
        merged.emplace_back(ts[ti], false);
        ++ti;
      }
    }
    cert.ordered_verdict = merged.size() == ss.size();
    for (std::size_t k = 0; k < merged.size(); ++k) {
      cert.merged.push_back(merged[k].first);
      if (merged[k].second) cert.marker_positions.push_back(static_cast<long>(k));
      if (!cert.ordered_verdict) continue;
      bool ok = merged[k].second ? merged[k].first <= ss[k] : merged[k].first < ss[k];
      if (!ok) cert.ordered_verdict = false;
    }
  }

  if (cert.counting_verdict != cert.ordered_verdict)
    throw std::logic_error("domination: ordered and counting forms disagree");
  cert.dominated = cert.counting_verdict;
  return cert;
}

inline DominationCertificate dominated(const ClassicalParams& params) {
  return dominated_lists(params.thetas, params.sigmas, params.s() - params.r());
}

// Common exponent: least a with (p^a - 1) alpha integral for every
// parameter (lcm of the per-parameter multiplicative orders).
inline long classical_exponent(const ClassicalParams& params, std::int64_t p) {
  require_prime(p);
  Int l = 1;
  for (const Rat& x : params.thetas) {
    if (!is_p_integral(x, p)) throw std::invalid_argument("theta not p-integral: " + x.str());
    l = lcm(l, denominator(x));
  }
  for (const Rat& x : params.sigmas) {
    if (!is_p_integral(x, p)) throw std::invalid_argument("sigma not p-integral: " + x.str());
    l = lcm(l, denominator(x));
  }
  return multiplicative_order(Int(p), l);
}

// alpha^{(k)} = t^{(k)}/(p^a - 1) for t = (p^a - 1) alpha.
inline Rat shift_param(const Rat& alpha, std::int64_t p, long a, long k) {
  Int D = int_pow(Int(p), a) - 1;
  Int t = to_int(alpha * Rat(D));
  return Rat(cyclic_shift(t, p, a, k), D);
}

struct CriterionResult {
  bool holds = true;
  long failing_k = -1;  // shift (or digit slot) where domination first fails
};

// Proposition 4.7: the shifted sequences (theta^{(k)}) must be dominated
// by (sigma^{(k)}) for k = 0..a-1.
inline CriterionResult prop_4_7_check(const ClassicalParams& params, std::int64_t p) {
  long a = classical_exponent(params, p);
  long smr = params.s() - params.r();
  for (long k = 0; k < a; ++k) {
    VecQ th, sg;
    for (const Rat& x : params.thetas) th.push_back(shift_param(x, p, a, k));
    for (const Rat& x : params.sigmas) sg.push_back(shift_param(x, p, a, k));
    if (!dominated_lists(th, sg, smr).dominated) return CriterionResult{false, k};
  }
  return CriterionResult{true, -1};
}

// Proposition 4.10 (Dwork's criterion restated): digitwise domination of
// (theta_{ik}/(p-1)) by (sigma_{jk}/(p-1)) for each digit slot k.
inline CriterionResult dwork_check(const ClassicalParams& params, std::int64_t p) {
  long a = classical_exponent(params, p);
  Int D = int_pow(Int(p), a) - 1;
  auto digit_rows = [&](const VecQ& vals) {
    std::vector<std::vector<std::int64_t>> rows;
    for (const Rat& x : vals) rows.push_back(base_p_digits(to_int(x * Rat(D)), p, a));
    return rows;
  };
  auto th_digits = digit_rows(params.thetas);
  auto sg_digits = digit_rows(params.sigmas);
  long smr = params.s() - params.r();
  for (long k = 0; k < a; ++k) {
    VecQ th, sg;
    for (const auto& row : th_digits) th.push_back(Rat(row[k], Int(p - 1)));
    for (const auto& row : sg_digits) sg.push_back(Rat(row[k], Int(p - 1)));
    if (!dominated_lists(th, sg, smr).dominated) return CriterionResult{false, k};
  }
  return CriterionResult{true, -1};
}

// Exact valuation of the j-th coefficient of (4.1):
//   (theta_1)_j ... (theta_r)_j pi^{(s-r)j} / (j! (sigma_1)_j ... (sigma_{s-1})_j)
inline Rat classical_coefficient_valuation(const ClassicalParams& params, std::int64_t p, long j) {
  require_prime(p);
  if (j < 0) throw std::invalid_argument("term index must be >= 0");
  auto pochhammer_ord = [&](const Rat& x) {
    Rat v = 0;
    for (long t = 0; t < j; ++t) {
      Rat f = x + Rat(t);
      v += ord_p(f, p).finite_value();  // f > 0 for x in (0,1]
    }
    return v;
  };
  Rat val = 0;
  for (const Rat& th : params.thetas) val += pochhammer_ord(th);
  for (const Rat& sg : params.sigmas) val -= pochhammer_ord(sg);
  val -= ord_p_factorial(Int(j), p);
  val += Rat((params.s() - params.r()) * j, Int(p - 1));
  return val;
}

// The section-4 embedding: columns e_1..e_{r+s-1} and (1,..,1,-1,..,-1),
// v = (-theta_1,..,-theta_r, sigma_1-1,..,sigma_{s-1}-1, 0).  Degenerate
// parameter shapes (ambient dimension zero, duplicate columns) are
// reported and routed to the direct termwise valuations instead.
struct GkzEmbedding {
  bool degenerate = false;
  std::string reason;
  Configuration config;
  VecQ v;
  VecQ beta;
};

inline GkzEmbedding to_gkz(const ClassicalParams& params) {
  GkzEmbedding out;
  long r = params.r(), s = params.s();
  long n = r + s - 1;
  if (n < 1) {
    out.degenerate = true;
    out.reason = "ambient dimension r+s-1 is zero";
    return out;
  }
  MatZ cols;
  for (long i = 0; i < n; ++i) {
    VecZ e(static_cast<std::size_t>(n), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    cols.push_back(std::move(e));
  }
  VecZ last(static_cast<std::size_t>(n), Int(0));
  for (long i = 0; i < r; ++i) last[static_cast<std::size_t>(i)] = 1;
  for (long i = r; i < n; ++i) last[static_cast<std::size_t>(i)] = -1;
  cols.push_back(std::move(last));
  try {
    out.config = make_configuration(std::move(cols));
  } catch (const std::invalid_argument& e) {
    out.degenerate = true;
    out.reason = e.what();  // r = s = 1 duplicates the single column
    return out;
  }
  for (const Rat& th : params.thetas) out.v.push_back(-th);
  for (const Rat& sg : params.sigmas) out.v.push_back(sg - 1);
  out.v.push_back(Rat(0));
  out.beta.assign(out.v.begin(), out.v.end() - 1);
  return out;
}

}  // namespace ahyp
