#pragma once

// Exact scalar types: primes, residues mod p, and big rationals.

#include <cstdint>
#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fthresh {

using BigInt = mpz_class;

/// A prime p < 2^31, checked at construction.
class Prime {
 public:
  explicit Prime(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  operator std::uint64_t() const noexcept { return value_; }

  friend bool operator==(Prime a, Prime b) noexcept { return a.value_ == b.value_; }

 private:
  std::uint64_t value_;
};

bool is_prime(std::uint64_t n) noexcept;

/// p^e with overflow detection (throws ExponentOverflow).
std::uint64_t checked_pow(std::uint64_t base, unsigned exponent);

/// Returns e when q = p^e with e >= 1, otherwise -1.
int log_base(std::uint64_t q, std::uint64_t p) noexcept;

/// Residue class in F_p.
struct FpElem {
  std::uint64_t residue;
  Prime modulus;

  friend bool operator==(const FpElem& a, const FpElem& b) noexcept {
    return a.residue == b.residue && a.modulus == b.modulus;
  }
};

/// Exact rational number, always stored in lowest terms with positive denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(const BigInt& n, const BigInt& d);
  Rat(long n, long d) : Rat(BigInt(n), BigInt(d)) {}
  explicit Rat(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Accepts "n" or "n/d" with optional sign.
  static Rat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  const mpq_class& raw() const noexcept { return v_; }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const noexcept { return sgn(v_); }

  BigInt floor() const;
  BigInt ceil() const;

  std::string str() const { return v_.get_str(); }
  double to_double() const { return v_.get_d(); }

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

Rat min(const Rat& a, const Rat& b);
Rat pow(const Rat& base, unsigned exponent);

}  // namespace fthresh
