#include "helpers.hpp"

#include "ahyp/presets.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ahyp;
using ahyp_test::lp_min_by_vertices;
using ahyp_test::rand_long;
using ahyp_test::seeded_rng;

namespace {

MatQ config_matq(const Configuration& cfg) {
  MatQ A(static_cast<std::size_t>(cfg.n), VecQ(static_cast<std::size_t>(cfg.N), Rat(0)));
  for (long j = 0; j < cfg.N; ++j)
    for (long i = 0; i < cfg.n; ++i) A[i][j] = Rat(cfg.cols[j][i]);
  return A;
}

std::optional<Rat> w_delta_oracle(const Configuration& cfg, const VecQ& gamma) {
  return lp_min_by_vertices(config_matq(cfg), gamma, VecQ(static_cast<std::size_t>(cfg.N), Rat(1)));
}

}  // namespace

TEST_CASE("cone facets") {
  SECTION("Example 1: the first quadrant") {
    auto geom = cone_facets(example1_configuration());
    CHECK(geom.dim == 2);
    CHECK(geom.span_eqs.empty());
    REQUIRE(geom.facets.size() == 2);
    CHECK(geom.facets[0] == VecZ{Int(0), Int(1)});
    CHECK(geom.facets[1] == VecZ{Int(1), Int(0)});
  }
  SECTION("standard basis: the first orthant") {
    auto cfg = make_configuration({{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}});
    auto geom = cone_facets(cfg);
    CHECK(geom.facets.size() == 3);
    for (const auto& h : geom.facets) CHECK(p_weight(VecZ{h[0] + h[1] + h[2]}, 2) == 1);
  }
  SECTION("r=1, s=2 classical footprint: facets x1 >= 0 and x1 + x2 >= 0") {
    auto cfg = make_configuration({{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(1), Int(-1)}});
    auto geom = cone_facets(cfg);
    REQUIRE(geom.facets.size() == 2);
    CHECK(geom.facets[0] == VecZ{Int(1), Int(0)});
    CHECK(geom.facets[1] == VecZ{Int(1), Int(1)});
    for (const auto& h : geom.facets) {
      long tight = 0;
      for (long i = 0; i < cfg.N; ++i)
        if (dot(h, to_vecq(cfg.column(i))) == 0) ++tight;
      CHECK(tight >= 1);  // tight on a spanning subset of the facet hyperplane
      for (long i = 0; i < cfg.N; ++i) CHECK(dot(h, to_vecq(cfg.column(i))) >= 0);
    }
  }
  SECTION("degenerate span: Example 3 lives in a 7-dimensional hyperplane") {
    auto geom = cone_facets(example3().config);
    CHECK(geom.dim == 7);
    REQUIRE(geom.span_eqs.size() == 1);
    // x1+...+x6 = 3 x7 + 3 x8 on the span
    CHECK(geom.span_eqs[0] == VecZ{Int(1), Int(1), Int(1), Int(1), Int(1), Int(1), Int(-3), Int(-3)});
    for (const auto& c : geom.generators) {
      CHECK(dot(geom.span_eqs[0], to_vecq(c)) == 0);
      for (const auto& h : geom.facets) CHECK(dot(h, to_vecq(c)) >= 0);
    }
  }
}

TEST_CASE("w_delta exact LP") {
  auto cfg = example1_configuration();
  CHECK(w_delta(cfg, {Rat(1), Rat(1)}) == Rat(1, 2));
  CHECK(w_delta(cfg, {Rat(2), Rat(2)}) == Rat(1));
  CHECK(w_delta(cfg, {Rat(4), Rat(1)}) == Rat(3, 2));
  CHECK(w_delta(cfg, {Rat(3), Rat(0)}) == Rat(1));  // a vertex of Delta
  CHECK_FALSE(w_delta(cfg, {Rat(-1), Rat(0)}));
  SECTION("agrees with the basic-solution oracle on random cones") {
    auto rng = seeded_rng("w_delta_oracle", 112233);
    for (int iter = 0; iter < 60; ++iter) {
      long n = rand_long(rng, 1, 3), N = rand_long(rng, 1, 4);
      MatZ cols;
      std::set<VecZ> seen;
      for (long j = 0; j < N; ++j) {
        VecZ c(static_cast<std::size_t>(n));
        for (auto& x : c) x = rand_long(rng, -3, 3);
        if (seen.insert(c).second) cols.push_back(c);
      }
      auto cfg2 = make_configuration(cols);
      VecQ gamma(static_cast<std::size_t>(n), Rat(0));
      // half in-cone by construction, half arbitrary
      if (rand_long(rng, 0, 1)) {
        for (long j = 0; j < cfg2.N; ++j) {
          Rat t(rand_long(rng, 0, 6), rand_long(rng, 1, 3));
          for (long i = 0; i < n; ++i) gamma[i] += t * Rat(cfg2.cols[j][i]);
        }
      } else {
        for (auto& x : gamma) x = Rat(rand_long(rng, -4, 4));
      }
      auto lp = w_delta(cfg2, gamma);
      auto oracle = w_delta_oracle(cfg2, gamma);
      REQUIRE(lp.has_value() == oracle.has_value());
      if (lp) CHECK(*lp == *oracle);
    }
  }
}

TEST_CASE("faces and relative interiors") {
  auto cfg = example1_configuration();
  auto geom = cone_facets(cfg);
  SECTION("interior point: the whole cone, sigma° = open quadrant") {
    auto face = smallest_face(geom, {Rat(1), Rat(1)});
    CHECK(face.tight_facets.empty());
    CHECK(face.columns.size() == 3);
    CHECK(in_relative_interior(geom, {Rat(1), Rat(1)}, face));
    CHECK(in_relative_interior(geom, {Rat(5), Rat(1, 3)}, face));
    CHECK_FALSE(in_relative_interior(geom, {Rat(1), Rat(0)}, face));
    CHECK_FALSE(in_relative_interior(geom, {Rat(0), Rat(0)}, face));
  }
  SECTION("the origin: vertex face, relative interior = {0}") {
    auto face = smallest_face(geom, {Rat(0), Rat(0)});
    CHECK(face.tight_facets.size() == 2);
    CHECK(in_relative_interior(geom, {Rat(0), Rat(0)}, face));
    CHECK_FALSE(in_relative_interior(geom, {Rat(1), Rat(0)}, face));
  }
  SECTION("a ray: (1,0) interior to it, origin not") {
    auto face = smallest_face(geom, {Rat(1), Rat(0)});
    CHECK(face.tight_facets.size() == 1);
    CHECK(in_relative_interior(geom, {Rat(1), Rat(0)}, face));
    CHECK(in_relative_interior(geom, {Rat(7, 2), Rat(0)}, face));
    CHECK_FALSE(in_relative_interior(geom, {Rat(0), Rat(0)}, face));
    CHECK_FALSE(in_relative_interior(geom, {Rat(1), Rat(1)}, face));
  }
  SECTION("outside the cone") {
    CHECK_THROWS_AS(smallest_face(geom, {Rat(-1), Rat(0)}), std::invalid_argument);
  }
}

TEST_CASE("coset minimization of w_delta") {
  auto cfg = example1_configuration();
  auto geom = cone_facets(cfg);
  SECTION("Example 1: min 1/2 at (1,1) over the open quadrant") {
    auto face = smallest_face(geom, {Rat(1), Rat(1)});
    auto scan = min_wdelta_on_coset(cfg, geom, {Rat(1), Rat(1)}, face, Rat(2));
    REQUIRE(scan.found);
    CHECK(scan.min == Rat(1, 2));
    CHECK(scan.argmin == VecQ{Rat(1), Rat(1)});
  }
  SECTION("the zero coset over the whole cone: 0 at the origin") {
    auto scan = min_wdelta_on_coset(cfg, geom, {Rat(0), Rat(0)}, std::nullopt, Rat(1));
    REQUIRE(scan.found);
    CHECK(scan.min == Rat(0));
    CHECK(scan.argmin == VecQ{Rat(0), Rat(0)});
  }
  SECTION("section-4 embedding of Example 2: min 35/26 at -beta") {
    auto emb = to_gkz(example2_params());
    REQUIRE_FALSE(emb.degenerate);
    auto geom3 = cone_facets(emb.config);
    VecQ minus_beta{Rat(5, 13), Rat(6, 13), Rat(1, 2)};
    auto scan = min_wdelta_on_coset(emb.config, geom3, minus_beta, std::nullopt, Rat(2));
    REQUIRE(scan.found);
    CHECK(scan.min == Rat(35, 26));
    CHECK(scan.argmin == minus_beta);
  }
  SECTION("cap-exceeded is honest: empty region below W") {
    // coset (1/2, 1/2) + Z^2 inside the ray face of (1,0): no point at all
    auto face = smallest_face(geom, {Rat(1), Rat(0)});
    auto scan = min_wdelta_on_coset(cfg, geom, {Rat(1, 2), Rat(1, 2)}, face, Rat(3));
    CHECK_FALSE(scan.found);
    Caps caps;
    caps.w_ceiling = 4;
    CHECK_THROWS_AS(
        min_wdelta_on_coset_auto(cfg, geom, {Rat(1, 2), Rat(1, 2)}, face, Rat(1), caps),
        cap_exceeded);
  }
}

TEST_CASE("nonconfluent shortcut: w_delta equals h on the cone") {
  auto rng = seeded_rng("nonconfluent_shortcut", 445566);
  for (auto which : {0, 1}) {
    Configuration cfg = which == 0 ? to_gkz(example2_params()).config : example3().config;
    auto h = is_nonconfluent(cfg);
    REQUIRE(h);
    for (int iter = 0; iter < 25; ++iter) {
      VecQ gamma(static_cast<std::size_t>(cfg.n), Rat(0));
      for (long j = 0; j < cfg.N; ++j) {
        Rat t(rand_long(rng, 0, 5), rand_long(rng, 1, 4));
        for (long i = 0; i < cfg.n; ++i) gamma[i] += t * Rat(cfg.cols[j][i]);
      }
      auto w = w_delta(cfg, gamma);
      REQUIRE(w);
      CHECK(*w == dot(*h, gamma));
    }
  }
}

TEST_CASE("Lemma 3.2: shifted sums stay in the relative interior") {
  struct Case {
    Configuration cfg;
    VecQ beta;
    long p;
    long a;
    long b;
  };
  std::vector<Case> cases;
  cases.push_back({example1_configuration(), example1_beta(), 3, 1, 2});
  cases.push_back({example3().config, example3().beta_hat, 2, 1, 1});
  {
    auto emb = to_gkz(example2_params());
    cases.push_back({emb.config, emb.beta, 3, 3, 1});
  }
  for (const auto& c : cases) {
    auto geom = cone_facets(c.cfg);
    VecQ minus_beta(c.beta.size());
    for (std::size_t i = 0; i < c.beta.size(); ++i) minus_beta[i] = -c.beta[i];
    auto face = smallest_face(geom, minus_beta);
    for (const auto& r : enumerate_R_beta_b(c.cfg, c.beta, c.p, c.a, c.b)) {
      long ar = normalization_exponent(r, c.p);
      for (long k = 0; k < ar; ++k) {
        VecQ point = apply_configuration(c.cfg, shift_r(r, c.p, k));
        for (auto& x : point) x = -x;
        CHECK(in_relative_interior(geom, point, face));
      }
    }
  }
}

TEST_CASE("Corollary 3.5 bound") {
  SECTION("Example 1: (p-1)/2") {
    for (long p : {3L, 7L}) {
      auto rep = corollary_3_5_bound(example1_configuration(), example1_beta(), p);
      CHECK(rep.e == 1);
      CHECK(rep.coset_minima == std::vector<Rat>{Rat(1, 2)});
      CHECK(rep.bound == Rat(p - 1, 2));
    }
  }
  SECTION("beta = 0: bound 0") {
    auto rep = corollary_3_5_bound(example1_configuration(), {Rat(0), Rat(0)}, 3);
    CHECK(rep.bound == Rat(0));
  }
  SECTION("bound certificate: certified for Example 1, undecided for A=[3], p=2") {
    auto cert1 = bound_certificate(example1_configuration(), example1_beta(), 3, 3);
    CHECK(cert1.certified);
    CHECK(cert1.min_enumerated == Rat(1));
    CHECK(cert1.witness == example1_v());

    auto cfg = make_configuration({{Int(3)}});
    auto cert2 = bound_certificate(cfg, {Rat(-1)}, 2, 4);
    CHECK_FALSE(cert2.certified);       // (3.4) is strict here
    CHECK(cert2.bound.bound == Rat(1, 3));
    CHECK(cert2.min_enumerated == Rat(1, 2));
    CHECK(cert2.witness == VecQ{Rat(-1, 3)});
  }
}

TEST_CASE("Lemma 4.12 at desk scale") {
  auto rng = seeded_rng("lemma_4_12", 41241);
  auto random_params = [&](long r, long s) -> std::optional<ClassicalParams> {
    VecQ theta(static_cast<std::size_t>(r)), sigma(static_cast<std::size_t>(s - 1));
    for (auto& x : theta) {
      long d = rand_long(rng, 2, 9);
      x = Rat(rand_long(rng, 1, d), d);
    }
    for (auto& x : sigma) {
      long d = rand_long(rng, 2, 9);
      x = Rat(rand_long(rng, 1, d), d);
    }
    auto cp = make_classical_params(theta, sigma);
    if (!dominated(cp).dominated) return std::nullopt;
    return cp;
  };
  for (auto [r, s] : std::vector<std::pair<long, long>>{{2, 2}, {3, 3}, {1, 2}, {2, 3}}) {
    int done = 0, guard = 0;
    while (done < 4 && ++guard < 400) {
      auto cp = random_params(r, s);
      if (!cp) continue;
      auto emb = to_gkz(*cp);
      REQUIRE_FALSE(emb.degenerate);
      Rat expected = 0;
      for (const Rat& th : cp->thetas) expected += th;
      for (const Rat& sg : cp->sigmas) expected += 1 - sg;
      if (expected > Rat(5, 2)) continue;  // keep the dilate scan desk-sized
      VecQ minus_beta(emb.beta.size());
      for (std::size_t i = 0; i < emb.beta.size(); ++i) minus_beta[i] = -emb.beta[i];
      auto geom = cone_facets(emb.config);
      auto scan = min_wdelta_on_coset(emb.config, geom, minus_beta, std::nullopt, expected);
      REQUIRE(scan.found);
      CHECK(scan.min == expected);
      ++done;
    }
    CHECK(done == 4);
  }
}
