#include "fthresh/frobenius.hpp"

#include <algorithm>
#include <cmath>

#include "fthresh/lucas.hpp"

namespace fthresh {

namespace {

void require_power_of_p(const FpPoly& f, std::uint64_t q) {
  if (log_base(q, f.field().characteristic()) < 1) {
    throw Error(ErrorCode::WrongCharacteristic,
                std::to_string(q) + " is not a positive power of " +
                    std::to_string(f.field().characteristic()));
  }
}

void require_in_maximal_ideal(const FpPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "ν of the zero polynomial");
  if (!f.field().is_zero(f.constant_term())) {
    throw Error(ErrorCode::NotInMaximalIdeal, f.str() + " does not vanish at the origin");
  }
}

bool below(const Monomial& m, std::uint64_t q) { return m.max_exponent() < q; }

FpPoly truncated_product(const FpPoly& a, const FpPoly& b, std::uint64_t q) {
  return FpPoly::multiply_filtered(a, b, [q](const Monomial& m) { return below(m, q); });
}

// Log-gamma estimate of C(n + k, k).
double log_binomial(double n, double k) {
  return std::lgamma(n + k + 1) - std::lgamma(n + 1) - std::lgamma(k + 1);
}

}  // namespace

FpPoly frobenius_reduce(const FpPoly& f, std::uint64_t q) {
  require_power_of_p(f, q);
  return f.filtered([q](const Monomial& m) { return below(m, q); });
}

FpPoly truncated_power(const FpPoly& f, std::uint64_t a, std::uint64_t q) {
  require_power_of_p(f, q);
  FpPoly result = frobenius_reduce(FpPoly::one(f.ring_ptr()), q);
  FpPoly base = frobenius_reduce(f, q);
  while (a && !result.is_zero()) {
    if (a & 1) result = truncated_product(result, base, q);
    a >>= 1;
    if (a) base = truncated_product(base, base, q);
  }
  return result;
}

std::vector<std::uint64_t> nu_sequence(const FpPoly& f, unsigned e_max) {
  require_in_maximal_ideal(f);
  if (e_max < 1) throw Error(ErrorCode::InvalidArgument, "Frobenius level must be >= 1");
  const std::uint64_t p = f.field().characteristic();
  std::vector<std::uint64_t> out;
  // `cached` holds f^ν mod m^[q] for the current level.
  FpPoly cached = FpPoly::one(f.ring_ptr());
  std::uint64_t q = 1;
  std::uint64_t nu_prev = 0;
  for (unsigned e = 1; e <= e_max; ++e) {
    q = checked_pow(p, e);
    std::uint64_t a = p * nu_prev;
    // (f^ν)^p mod m^[p^e] is the Frobenius twist of f^ν mod m^[p^(e-1)].
    FpPoly g = e == 1 ? cached : frobenius_twist(cached, p);
    for (;;) {
      FpPoly next = truncated_product(g, f, q);
      if (next.is_zero()) break;
      g = std::move(next);
      ++a;
    }
    if (a > p * nu_prev + p - 1) {
      throw Error(ErrorCode::InvalidArgument, "ν recursion window violated; arithmetic is inconsistent");
    }
    out.push_back(a);
    cached = std::move(g);
    nu_prev = a;
  }
  return out;
}

std::uint64_t nu(const FpPoly& f, unsigned e) { return nu_sequence(f, e).back(); }

std::uint64_t nu_oracle(const FpPoly& f, unsigned e, double term_cap) {
  require_in_maximal_ideal(f);
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "Frobenius level must be >= 1");
  const std::uint64_t q = checked_pow(f.field().characteristic(), e);
  // Every a with f^a ∉ m^[q] is below q, so f^q bounds the work.
  const double qd = static_cast<double>(q);
  double by_terms = log_binomial(qd, static_cast<double>(f.size()) - 1);
  double by_degree = log_binomial(qd * static_cast<double>(f.degree()), static_cast<double>(f.arity()));
  double estimate = std::exp(std::min(by_terms, by_degree));
  if (estimate > term_cap) {
    throw Error(ErrorCode::OracleTooLarge,
                "expansion of f^" + std::to_string(q) + " estimated at " +
                    std::to_string(static_cast<long long>(estimate)) + " terms");
  }
  FpPoly power = FpPoly::one(f.ring_ptr());
  for (std::uint64_t a = 0;; ++a) {
    FpPoly next = power * f;
    if (frobenius_reduce(next, q).is_zero()) return a;
    power = std::move(next);
  }
}

std::optional<Rat> guess_threshold(std::span<const std::uint64_t> nus, std::uint64_t p) {
  const std::size_t levels = nus.size();
  if (levels == 0) return std::nullopt;
  std::vector<std::uint64_t> digit(levels);
  digit[0] = nus[0];
  for (std::size_t i = 1; i < levels; ++i) digit[i] = nus[i] - p * nus[i - 1];

  const std::size_t max_len = levels >= 3 ? levels - 1 : levels;
  const BigInt bp(static_cast<unsigned long>(p));
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::optional<Rat> best;
    for (std::size_t pre = 0; pre < len; ++pre) {
      const std::size_t period = len - pre;
      bool consistent = true;
      for (std::size_t i = pre; i + period < levels; ++i) {
        if (digit[i] != digit[i + period]) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      BigInt prefix = 0, block = 0;
      for (std::size_t i = 0; i < pre; ++i) prefix = prefix * bp + digit[i];
      for (std::size_t i = pre; i < len; ++i) block = block * bp + digit[i];
      BigInt pt, ps;
      mpz_pow_ui(pt.get_mpz_t(), bp.get_mpz_t(), period);
      mpz_pow_ui(ps.get_mpz_t(), bp.get_mpz_t(), pre);
      Rat value = (Rat(prefix) + Rat(block, pt - 1)) / Rat(ps);
      if (!best || value.den() < best->den() || (value.den() == best->den() && value < *best)) {
        best = value;
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

NuTable fpt_bounds(const FpPoly& f, unsigned e_max) {
  auto nus = nu_sequence(f, e_max);
  const std::uint64_t p = f.field().characteristic();
  NuTable table{f, {}, std::nullopt};
  for (unsigned e = 1; e <= e_max; ++e) {
    BigInt q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, e);
    std::uint64_t v = nus[e - 1];
    table.records.push_back({e, v, Rat(BigInt(static_cast<unsigned long>(v)), q),
                             Rat(BigInt(static_cast<unsigned long>(v)) + 1, q)});
  }
  table.closed_form_guess = guess_threshold(nus, p);
  return table;
}

std::uint64_t nu_binomial(std::uint64_t m, std::uint64_t n, Prime p, unsigned e) {
  if (m == 0 || n == 0) throw Error(ErrorCode::InvalidArgument, "exponents of x^m + y^n must be >= 1");
  if (e < 1) throw Error(ErrorCode::InvalidArgument, "Frobenius level must be >= 1");
  const std::uint64_t q = checked_pow(p.value(), e);
  const std::uint64_t i_max = (q - 1) / m;  // m·i < q
  const std::uint64_t j_max = (q - 1) / n;  // n·(a-i) < q
  // (x^m + y^n)^a = sum C(a,i) x^{mi} y^{n(a-i)}; distinct bidegrees never cancel.
  for (std::uint64_t a = i_max + j_max;; --a) {
    std::uint64_t lo = a > j_max ? a - j_max : 0;
    std::uint64_t hi = std::min(a, i_max);
    for (std::uint64_t i = lo; i <= hi; ++i) {
      if (lucas_binomial(a, i, p).residue != 0) return a;
    }
    if (a == 0) return 0;
  }
}

MultInequalityReport check_mult_inequality(const FpPoly& f, unsigned e) {
  require_in_maximal_ideal(f);
  MultInequalityReport r;
  r.mult = multiplicity_at_origin(f);
  r.num_vars = f.arity();
  auto table = fpt_bounds(f, e);
  r.lower = table.last().lower;
  r.upper = table.last().upper;
  Rat mult(BigInt(static_cast<unsigned long>(r.mult)));
  r.ok = r.lower <= Rat(BigInt(static_cast<unsigned long>(r.num_vars))) / mult &&
         r.upper >= Rat(1) / mult;
  return r;
}

}  // namespace fthresh
