#include "fthresh/poly.hpp"

namespace fthresh {

FpPoly frobenius_twist(const FpPoly& f, std::uint64_t q) {
  std::vector<FpPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m.scaled(q), c);
  return FpPoly::from_terms(f.ring_ptr(), std::move(terms));
}

FpPoly poly_pow(const FpPoly& f, std::uint64_t a) {
  const std::uint64_t p = f.field().characteristic();
  FpPoly result = FpPoly::one(f.ring_ptr());
  std::uint64_t twist = 1;
  while (a) {
    std::uint64_t digit = a % p;
    a /= p;
    if (digit) {
      FpPoly piece = FpPoly::one(f.ring_ptr());
      for (std::uint64_t i = 0; i < digit; ++i) piece = piece * f;
      result = result * frobenius_twist(piece, twist);
    }
    twist *= p;  // bounded by the original exponent while digits remain
  }
  return result;
}

FpPoly reduce_mod_p(const QPoly& f, Prime p) {
  auto ring = make_ring(PrimeField(p), f.ring().vars);
  const auto& F = ring->field;
  std::vector<FpPoly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    BigInt den = c.den();
    if (den % p.value() == 0) {
      throw Error(ErrorCode::BadReduction,
                  "coefficient " + c.str() + " has p = " + std::to_string(p.value()) +
                      " in its denominator");
    }
    terms.emplace_back(m, F.div(F.from_integer(c.num()), F.from_integer(den)));
  }
  return FpPoly::from_terms(ring, std::move(terms));
}

}  // namespace fthresh
