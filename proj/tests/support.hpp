#pragma once

#include <cstdint>
#include <random>

#include "codim2/invariants.hpp"

namespace codim2::rnd {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240601);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline double uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

/// Random valid tuple with n in [4, n_max].
inline Invariants random_tuple(int n_max = 14, std::int64_t d_max = 5000,
                               std::int64_t e_max = 200, std::int64_t s_max = 60) {
  return Invariants::make(static_cast<int>(uniform(4, n_max)), uniform(1, d_max),
                          uniform(-10, e_max), uniform(1, s_max));
}

}  // namespace codim2::rnd
