#pragma once

#include <cstdint>
#include <vector>

#include "fthresh/arith.hpp"

namespace fthresh {

/// Base-p digits of n, least significant first (empty for n = 0).
std::vector<std::uint64_t> base_p_digits(std::uint64_t n, std::uint64_t p);

/// C(m, n) mod p as the product of C(m_j, n_j) over base-p digits (Lucas).
FpElem lucas_binomial(std::uint64_t m, std::uint64_t n, Prime p);

}  // namespace fthresh
