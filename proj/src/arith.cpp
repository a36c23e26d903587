#include "fthresh/arith.hpp"

#include <limits>

#include "fthresh/errors.hpp"

namespace fthresh {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::NotInMaximalIdeal: return "NotInMaximalIdeal";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::WrongDomain: return "WrongDomain";
    case ErrorCode::NegativeExponentParameter: return "NegativeExponentParameter";
    case ErrorCode::ScanTooLarge: return "ScanTooLarge";
    case ErrorCode::EmptyExponentList: return "EmptyExponentList";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::IrrationalCenter: return "IrrationalCenter";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::DoesNotVanishAtOrigin: return "DoesNotVanishAtOrigin";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::NotHomogeneousCubic: return "NotHomogeneousCubic";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t value) : value_(value) {
  if (value > (std::uint64_t{1} << 31) || !is_prime(value)) {
    throw Error(ErrorCode::NotPrime, std::to_string(value) + " is not a prime below 2^31");
  }
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::ExponentOverflow,
                  std::to_string(base) + "^" + std::to_string(exponent) + " overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

int log_base(std::uint64_t q, std::uint64_t p) noexcept {
  if (p < 2 || q < p) return -1;
  int e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  return q == 1 ? e : -1;
}

Rat::Rat(const BigInt& n, const BigInt& d) : v_(n, d) {
  if (d == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s, 10));
    return Rat(BigInt(s.substr(0, slash), 10), BigInt(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "not a rational: '" + s + "'");
  }
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

BigInt Rat::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat r(1);
  for (unsigned i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace fthresh
