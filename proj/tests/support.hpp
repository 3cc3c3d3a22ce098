#pragma once

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "phasedyn/operator.hpp"
#include "phasedyn/spin.hpp"

namespace phasedyn::testing {

inline constexpr double kPi = 3.14159265358979323846;

/// Fixed-seed engine so failures reproduce.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine{20240611};
  return engine;
}

inline double uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Operator random_operator(Index dim) {
  Operator::Matrix m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) m(r, c) = cplx(uniform(-1, 1), uniform(-1, 1));
  }
  return Operator(std::move(m));
}

/// j in {1/2, ..., max_twice/2}.
inline Spin random_spin(int max_twice = 9) { return Spin::from_twice(uniform_int(1, max_twice)); }

inline std::vector<Spin> spins_up_to(int max_twice) {
  std::vector<Spin> out;
  for (int t = 1; t <= max_twice; ++t) out.push_back(Spin::from_twice(t));
  return out;
}

inline double tol_for(Index dim) { return 1e-12 * static_cast<double>(dim); }

} // namespace phasedyn::testing

#define EXPECT_OP_NEAR(a, b, tol) EXPECT_LT(::phasedyn::residual((a), (b)), (tol))
