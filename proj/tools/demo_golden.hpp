#pragma once
// Golden demo reports: byte-exact expected text for the preset jobs.
// `ahyp demo` re-runs the jobs and fails on any mismatch.

inline const char* kGoldenExample1Kernel = R"GOLD(configuration: n = 2, N = 3
  a1 = (3, 0)
  a2 = (0, 3)
  a3 = (2, 2)
relation lattice rank: 1
  basis (2, 2, -3)
)GOLD";

inline const char* kGoldenExample1Verdict = R"GOLD(integrality verdict: v = (0, 0, -1/2), beta = (-1, -1), p = 3, b_max = 3
w(v) = 1
  b = 1: |R_{beta,b}| = 1, w(R_{beta,b}) = 1, equal
  b = 2: |R_{beta,b}| = 2, w(R_{beta,b}) = 1, equal
  b = 3: |R_{beta,b}| = 5, w(R_{beta,b}) = 1, equal
verdict: integral-up-to-3 (w(v) = w(R_{beta,b}) for every checked b)
)GOLD";

inline const char* kGoldenExample1Bound = R"GOLD(Corollary 3.5 bound: beta = (-1, -1), p = 3
witness r = (0, 0, -1/2) (from R_{beta,1})
period e = 1
  k = 0: -beta^(k) = (1, 1), coset min w_Delta = 1/2 at (1, 1)
bound: w(R_beta) >= 1
enumerated minimum over b <= 3: w = 1 at r = (0, 0, -1/2)
certificate: bound attained; w(R_beta) = 1 exactly and the witness series is p-integral
)GOLD";

inline const char* kGoldenExample2Classical = R"GOLD(classical series: theta = (5/13, 6/13), sigma = (1/2), p = 3, s - r = 0
exponent a = 3
domination at k = 0: dominated
  sigma_j = 1/2: I = 2, J = 1
Prop 4.7 (shifted domination): true
Prop 4.10 (Dwork digitwise): false at digit slot k = 2
termwise valuations j <= 20: least = 0 (all nonnegative)
)GOLD";

inline const char* kGoldenExample3Kernel = R"GOLD(configuration: n = 8, N = 8
  a1 = (3, 0, 0, 0, 0, 0, 1, 0)
  a2 = (0, 3, 0, 0, 0, 0, 1, 0)
  a3 = (0, 0, 3, 0, 0, 0, 1, 0)
  a4 = (0, 0, 0, 1, 1, 1, 1, 0)
  a5 = (0, 0, 0, 3, 0, 0, 0, 1)
  a6 = (0, 0, 0, 0, 3, 0, 0, 1)
  a7 = (0, 0, 0, 0, 0, 3, 0, 1)
  a8 = (1, 1, 1, 0, 0, 0, 0, 1)
relation lattice rank: 1
  basis (1, 1, 1, -3, 1, 1, 1, -3)
)GOLD";

inline const char* kGoldenExample3Verdict = R"GOLD(integrality verdict: v = (0, 0, 0, -1, 0, 0, 0, -1), beta = (-1, -1, -1, -1, -1, -1, -1, -1), p = 2, b_max = 2
w(v) = 2
  b = 1: |R_{beta,b}| = 1, w(R_{beta,b}) = 2, equal
  b = 2: |R_{beta,b}| = 2, w(R_{beta,b}) = 2, equal
verdict: integral-up-to-2 (w(v) = w(R_{beta,b}) for every checked b)
)GOLD";

