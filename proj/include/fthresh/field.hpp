#pragma once

// Coefficient domains. Both satisfy the same duck-typed interface so that
// Poly<Field> is written once.

#include <cstdint>
#include <string>

#include "fthresh/arith.hpp"
#include "fthresh/errors.hpp"

namespace fthresh {

enum class DomainKind { PrimeField, Rationals };

/// Runtime tag naming a coefficient domain: F_p or Q.
struct Domain {
  DomainKind kind = DomainKind::Rationals;
  std::uint64_t p = 0;

  static Domain fp(Prime prime) { return {DomainKind::PrimeField, prime.value()}; }
  static Domain rationals() { return {DomainKind::Rationals, 0}; }

  std::string str() const {
    return kind == DomainKind::Rationals ? "QQ" : "GF(" + std::to_string(p) + ")";
  }
  friend bool operator==(const Domain&, const Domain&) = default;
};

class PrimeField {
 public:
  using Elem = std::uint64_t;

  explicit PrimeField(Prime p) : p_(p) {}

  Prime prime() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_.value(); }
  Domain domain() const { return Domain::fp(p_); }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  bool is_one(Elem a) const noexcept { return a == 1; }

  Elem add(Elem a, Elem b) const noexcept {
    Elem s = a + b;
    return s >= p_.value() ? s - p_.value() : s;
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : a + p_.value() - b; }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_.value() - a; }
  Elem mul(Elem a, Elem b) const noexcept { return (a * b) % p_.value(); }
  Elem pow(Elem a, std::uint64_t n) const noexcept {
    Elem r = 1;
    while (n) {
      if (n & 1) r = mul(r, a);
      a = mul(a, a);
      n >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "inverse of zero in " + domain().str());
    return pow(a, p_.value() - 2);
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem from_integer(const BigInt& n) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_.value());
    return r.get_ui();
  }
  Elem from_int(long n) const { return from_integer(BigInt(n)); }

  /// Canonical residue in [0, p).
  std::string render(Elem a) const { return std::to_string(a); }
  bool is_negative(Elem) const noexcept { return false; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept {
    return a.p_ == b.p_;
  }

 private:
  Prime p_;
};

class RationalField {
 public:
  using Elem = Rat;

  Domain domain() const { return Domain::rationals(); }
  std::uint64_t characteristic() const noexcept { return 0; }

  Elem zero() const { return Rat(0); }
  Elem one() const { return Rat(1); }
  bool is_zero(const Elem& a) const noexcept { return a.is_zero(); }
  bool is_one(const Elem& a) const { return a == Rat(1); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem pow(const Elem& a, std::uint64_t n) const { return fthresh::pow(a, static_cast<unsigned>(n)); }
  Elem inv(const Elem& a) const { return Rat(1) / a; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }

  Elem from_integer(const BigInt& n) const { return Rat(n); }
  Elem from_int(long n) const { return Rat(n); }

  std::string render(const Elem& a) const { return a.str(); }
  bool is_negative(const Elem& a) const noexcept { return a.sign() < 0; }

  friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

}  // namespace fthresh
