#pragma once
// The built-in example configurations shipped with the CLI.

#include "ahyp/classical.hpp"

namespace ahyp {

// Columns (3,0), (0,3), (2,2); beta = (-1,-1), v = (0,0,-1/2).
inline Configuration example1_configuration() {
  return make_configuration({{Int(3), Int(0)}, {Int(0), Int(3)}, {Int(2), Int(2)}},
                            {"a1", "a2", "a3"});
}
inline VecQ example1_v() { return {Rat(0), Rat(0), Rat(-1, 2)}; }
inline VecQ example1_beta() { return {Rat(-1), Rat(-1)}; }

// 2F1(5/13, 6/13; 1/2 | t) at p = 3.
inline ClassicalParams example2_params() {
  return make_classical_params({Rat(5, 13), Rat(6, 13)}, {Rat(1, 2)});
}

// Two cubic-surface blocks in Z^6 with the distinguished monomials
// x4 x5 x6 and x1 x2 x3; the hatted configuration lives in Z^8.
inline CompleteIntersectionConfig example3_blocks() {
  auto e = [](int i) {
    VecZ v(6, Int(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto scale = [](VecZ v, int f) {
    for (auto& x : v) x *= f;
    return v;
  };
  MatZ A1 = {scale(e(0), 3), scale(e(1), 3), scale(e(2), 3), VecZ{Int(0), Int(0), Int(0), Int(1), Int(1), Int(1)}};
  MatZ A2 = {scale(e(3), 3), scale(e(4), 3), scale(e(5), 3), VecZ{Int(1), Int(1), Int(1), Int(0), Int(0), Int(0)}};
  return complete_intersection_config({A1, A2});
}

struct Example3Data {
  Configuration config;
  VecQ v;
  VecQ beta_hat;
};

inline Example3Data example3() {
  auto cic = example3_blocks();
  auto de = distinguished_exponent(cic, {3, 3});
  return Example3Data{cic.config, de.v, de.beta_hat};
}

}  // namespace ahyp
