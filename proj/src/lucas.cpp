#include "fthresh/lucas.hpp"

#include "fthresh/field.hpp"

namespace fthresh {

std::vector<std::uint64_t> base_p_digits(std::uint64_t n, std::uint64_t p) {
  std::vector<std::uint64_t> digits;
  while (n) {
    digits.push_back(n % p);
    n /= p;
  }
  return digits;
}

FpElem lucas_binomial(std::uint64_t m, std::uint64_t n, Prime p) {
  const PrimeField F(p);
  if (n > m) return {0, p};
  std::uint64_t acc = 1;
  while (n) {
    std::uint64_t mj = m % p.value();
    std::uint64_t nj = n % p.value();
    if (nj > mj) return {0, p};
    // C(mj, nj) with mj < p: all factors of nj! are units.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < nj; ++i) {
      num = F.mul(num, mj - i);
      den = F.mul(den, i + 1);
    }
    acc = F.mul(acc, F.div(num, den));
    m /= p.value();
    n /= p.value();
  }
  return {acc, p};
}

}  // namespace fthresh
