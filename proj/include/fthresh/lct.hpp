#pragma once

// Log canonical thresholds: closed forms, values read off a resolution, and
// the multiplier-ideal tables of the two cusp fixtures.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fthresh/arith.hpp"
#include "fthresh/resolution.hpp"

namespace fthresh {

/// lct of z_1^{a_1}···z_N^{a_N}: min 1/a_i.
Rat lct_monomial(std::span<const std::uint64_t> exponents);

/// lct of a homogeneous degree-d polynomial in N variables with an isolated
/// singularity: min(N/d, 1). The isolated-singularity hypothesis is not checked.
Rat lct_homogeneous(std::uint64_t num_vars, std::uint64_t degree);

/// lct of x^m - y^n for coprime m, n: min(1/m + 1/n, 1).
Rat lct_plane_binomial(std::uint64_t m, std::uint64_t n);

/// min over divisors of (k_i + 1) / a_i.
Rat lct_from_resolution(const ResolutionData& data);

/// Sorted, distinct values (k_i + m)/a_i <= bound for integers m >= 1.
std::vector<Rat> candidate_jumping_numbers(const ResolutionData& data, const Rat& bound);

struct FixtureInterval {
  Rat lo;  // inclusive
  Rat hi;  // exclusive
  std::vector<std::string> generators;
};

/// Multiplier ideals J(f^λ) over Q for the fixture curves, listed on [0, top)
/// and extended above by J(f^{λ+1}) = (f)·J(f^λ).
struct FixtureTable {
  std::string curve;
  std::vector<FixtureInterval> intervals;

  const Rat& top() const { return intervals.back().hi; }
  std::vector<std::string> ideal_at(const Rat& lambda) const;
};

/// Known curves: "x^2 - y^3" and "x^2 - y^5" (whitespace-insensitive).
FixtureTable fixture_multiplier_table(std::string_view curve);

std::vector<std::string> fixture_curves();

}  // namespace fthresh
