#pragma once

// Seeded generators for random sparse instances, shared by selftest and the test suites.

#include <cstdint>
#include <random>

#include "fthresh/poly.hpp"

namespace fthresh {

using Rng = std::mt19937_64;

struct RandomPolySpec {
  std::uint64_t p = 2;
  std::size_t num_vars = 2;     // at most 3, named x, y, z
  std::uint64_t max_degree = 3;
  std::size_t min_terms = 1;
  std::size_t max_terms = 4;
};

/// Uniform integer in [lo, hi].
std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);

/// Nonzero f in the maximal ideal: every term has degree 1..max_degree and a
/// nonzero coefficient.
FpPoly random_poly(Rng& rng, const RandomPolySpec& spec);

}  // namespace fthresh
