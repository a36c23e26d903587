#include "fthresh/lct.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fthresh/parse.hpp"

namespace fthresh {

namespace {

Rat ratio(std::uint64_t n, std::uint64_t d) {
  return Rat(BigInt(static_cast<unsigned long>(n)), BigInt(static_cast<unsigned long>(d)));
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out += c;
  }
  return out;
}

}  // namespace

Rat lct_monomial(std::span<const std::uint64_t> exponents) {
  if (exponents.empty()) throw Error(ErrorCode::EmptyExponentList, "monomial has no exponents");
  if (std::find(exponents.begin(), exponents.end(), 0u) != exponents.end()) {
    throw Error(ErrorCode::InvalidArgument, "monomial exponents must be >= 1");
  }
  return ratio(1, *std::max_element(exponents.begin(), exponents.end()));
}

Rat lct_homogeneous(std::uint64_t num_vars, std::uint64_t degree) {
  if (num_vars == 0 || degree == 0) throw Error(ErrorCode::InvalidArgument, "N and d must be >= 1");
  return min(ratio(num_vars, degree), Rat(1));
}

Rat lct_plane_binomial(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "exponents must be >= 1");
  if (std::gcd(m, n) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1");
  }
  return min(ratio(1, m) + ratio(1, n), Rat(1));
}

Rat lct_from_resolution(const ResolutionData& data) {
  if (data.divisors.empty()) throw Error(ErrorCode::InvalidArgument, "empty resolution data");
  Rat best = ratio(data.divisors.front().k + 1, data.divisors.front().a);
  for (const auto& d : data.divisors) best = min(best, ratio(d.k + 1, d.a));
  return best;
}

std::vector<Rat> candidate_jumping_numbers(const ResolutionData& data, const Rat& bound) {
  if (bound.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
  std::set<Rat> values;
  for (const auto& d : data.divisors) {
    for (std::uint64_t m = 1;; ++m) {
      Rat v = ratio(d.k + m, d.a);
      if (v > bound) break;
      values.insert(v);
    }
  }
  return {values.begin(), values.end()};
}

std::vector<std::string> FixtureTable::ideal_at(const Rat& lambda) const {
  if (lambda.sign() < 0) throw Error(ErrorCode::InvalidArgument, "λ must be >= 0");
  if (lambda < top()) {
    for (const auto& iv : intervals) {
      if (iv.lo <= lambda && lambda < iv.hi) return iv.generators;
    }
  }
  // J(f^λ) = (f)·J(f^{λ-1}) for λ >= 1.
  auto lower = ideal_at(lambda - Rat(1));
  const std::vector<std::string> vars{"x", "y"};
  QPoly f = parse_q(curve, vars);
  std::vector<std::string> out;
  for (const auto& g : lower) out.push_back((f * parse_q(g, vars)).str());
  return out;
}

FixtureTable fixture_multiplier_table(std::string_view curve) {
  const std::string key = strip_spaces(curve);
  if (key == "x^2-y^3") {
    return {"x^2 - y^3",
            {{Rat(0), Rat(5, 6), {"1"}},
             {Rat(5, 6), Rat(1), {"x", "y"}},
             {Rat(1), Rat(11, 6), {"x^2 - y^3"}}}};
  }
  if (key == "x^2-y^5") {
    return {"x^2 - y^5",
            {{Rat(0), Rat(7, 10), {"1"}},
             {Rat(7, 10), Rat(9, 10), {"x", "y"}},
             {Rat(9, 10), Rat(1), {"x", "y^2"}},
             {Rat(1), Rat(17, 10), {"x^2 - y^5"}}}};
  }
  throw Error(ErrorCode::UnknownFixture, "no multiplier-ideal table for '" + std::string(curve) + "'");
}

std::vector<std::string> fixture_curves() { return {"x^2 - y^3", "x^2 - y^5"}; }

}  // namespace fthresh
