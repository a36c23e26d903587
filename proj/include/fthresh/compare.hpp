#pragma once

// Reduction mod p: F-threshold brackets of f mod p against lct(f), and the
// ordinary/supersingular ν-pattern test for cones over plane cubics.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/arith.hpp"
#include "fthresh/poly.hpp"

namespace fthresh {

struct CompareRow {
  std::uint64_t p = 0;
  unsigned e_max = 0;
  Rat lower;
  Rat upper;
  std::optional<Rat> guess;
  Rat lct;
  bool leq_holds = false;       // lower <= lct
  bool equality_guess = false;  // guess present and equal to lct

  friend bool operator==(const CompareRow&, const CompareRow&) = default;
};

/// One row per distinct prime, ascending. Primes run concurrently.
std::vector<CompareRow> run_compare(const QPoly& f, const std::vector<Prime>& primes, unsigned e_max,
                                    const Rat& lct);

/// Any row with lower > lct.
bool has_hard_failure(const std::vector<CompareRow>& rows);

enum class EllipticPattern { OrdinaryConsistent, SupersingularConsistent, Inconclusive };

std::string pattern_name(EllipticPattern pattern);
EllipticPattern pattern_from_name(const std::string& name);

struct EllipticReport {
  std::uint64_t p = 0;
  EllipticPattern pattern = EllipticPattern::Inconclusive;
  std::vector<std::uint64_t> nu_values;

  friend bool operator==(const EllipticReport&, const EllipticReport&) = default;
};

/// Classify ν_e(f mod p), e = 1..e_max, as p^e - 1 for every e (ordinary) or
/// p^e - p^(e-1) - 1 for every e (supersingular).
EllipticReport elliptic_check(const QPoly& f, Prime p, unsigned e_max);

}  // namespace fthresh
