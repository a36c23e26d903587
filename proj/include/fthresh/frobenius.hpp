#pragma once

// ν-function and F-threshold bracketing at the maximal ideal of the origin.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fthresh/arith.hpp"
#include "fthresh/poly.hpp"

namespace fthresh {

struct NuRecord {
  unsigned e = 0;
  std::uint64_t nu = 0;
  Rat lower;  // nu / p^e
  Rat upper;  // (nu + 1) / p^e

  friend bool operator==(const NuRecord&, const NuRecord&) = default;
};

/// Brackets FT(f) in (lower_e, upper_e] for e = 1..e_max. The closed form is a
/// guess read off the base-p digits of the ν sequence; nothing else uses it.
struct NuTable {
  FpPoly f;
  std::vector<NuRecord> records;
  std::optional<Rat> closed_form_guess;

  std::uint64_t p() const { return f.field().characteristic(); }
  const NuRecord& last() const { return records.back(); }
};

/// Delete every term with some exponent >= q, i.e. reduce modulo m^[q].
FpPoly frobenius_reduce(const FpPoly& f, std::uint64_t q);

/// f^a mod m^[q] by square-and-multiply, truncating after every product.
FpPoly truncated_power(const FpPoly& f, std::uint64_t a, std::uint64_t q);

/// ν_f(p^e) = max{a : f^a ∉ m^[p^e]}.
std::uint64_t nu(const FpPoly& f, unsigned e);

/// ν_f(p), ν_f(p^2), ..., ν_f(p^e_max) in one pass.
std::vector<std::uint64_t> nu_sequence(const FpPoly& f, unsigned e_max);

inline constexpr double kDefaultOracleTermCap = 4.0e6;

/// Same value as nu(), by full untruncated expansion. Throws OracleTooLarge
/// when the estimated size of f^(p^e) exceeds `term_cap`.
std::uint64_t nu_oracle(const FpPoly& f, unsigned e, double term_cap = kDefaultOracleTermCap);

NuTable fpt_bounds(const FpPoly& f, unsigned e_max);

/// Exact limit of the eventually periodic base-p expansion that explains the
/// digits r_e = ν_e - p·ν_{e-1} with the shortest preperiod+period. With three
/// or more levels the period must repeat at least once inside the data.
std::optional<Rat> guess_threshold(std::span<const std::uint64_t> nus, std::uint64_t p);

/// ν of x^m + y^n through the binomial criterion with Lucas's theorem.
std::uint64_t nu_binomial(std::uint64_t m, std::uint64_t n, Prime p, unsigned e);

struct MultInequalityReport {
  std::uint64_t mult = 0;
  std::uint64_t num_vars = 0;
  Rat lower;
  Rat upper;
  bool ok = false;
};

/// Checks lower_e <= N/mult and upper_e >= 1/mult, the finite-level form of
/// N/mult(f) >= FT(f) >= 1/mult(f).
MultInequalityReport check_mult_inequality(const FpPoly& f, unsigned e);

}  // namespace fthresh
