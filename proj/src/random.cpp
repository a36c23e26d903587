#include "fthresh/random.hpp"

#include <algorithm>

namespace fthresh {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

FpPoly random_poly(Rng& rng, const RandomPolySpec& spec) {
  static const std::vector<std::string> names{"x", "y", "z"};
  if (spec.num_vars == 0 || spec.num_vars > names.size() || spec.max_degree == 0 || spec.min_terms == 0 ||
      spec.min_terms > spec.max_terms) {
    throw Error(ErrorCode::InvalidArgument, "bad random polynomial spec");
  }
  Prime p(spec.p);
  auto ring = make_ring(PrimeField(p), std::vector<std::string>(names.begin(), names.begin() + spec.num_vars));
  for (;;) {
    std::vector<FpPoly::Term> terms;
    auto count = uniform(rng, spec.min_terms, spec.max_terms);
    for (std::uint64_t t = 0; t < count; ++t) {
      std::vector<std::uint64_t> exps(spec.num_vars, 0);
      auto degree = uniform(rng, 1, spec.max_degree);
      for (std::uint64_t d = 0; d < degree; ++d) ++exps[uniform(rng, 0, spec.num_vars - 1)];
      terms.emplace_back(Monomial(std::move(exps)), uniform(rng, 1, spec.p - 1));
    }
    auto f = FpPoly::from_terms(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

}  // namespace fthresh
