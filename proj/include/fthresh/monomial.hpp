#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace fthresh {

/// Exponent vector x^A, one natural per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  Monomial(std::initializer_list<std::uint64_t> e) : exps_(e) {}
  explicit Monomial(std::vector<std::uint64_t> e) : exps_(std::move(e)) {}

  static Monomial unit(std::size_t arity, std::size_t var, std::uint64_t power = 1) {
    Monomial m(arity);
    m.exps_[var] = power;
    return m;
  }

  std::size_t arity() const noexcept { return exps_.size(); }
  std::uint64_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint64_t& operator[](std::size_t i) noexcept { return exps_[i]; }
  std::span<const std::uint64_t> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const noexcept;
  std::uint64_t max_exponent() const noexcept;

  /// Product with overflow check (throws ExponentOverflow).
  Monomial operator*(const Monomial& o) const;
  /// Exponent-wise scaling x^A -> x^{kA}, overflow-checked.
  Monomial scaled(std::uint64_t k) const;
  bool divides(const Monomial& o) const noexcept;
  /// Requires divides(o, *this).
  Monomial quotient(const Monomial& divisor) const noexcept;
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint64_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (auto e : m.exponents()) h = (h ^ std::hash<std::uint64_t>{}(e)) * 0x100000001b3ULL;
    return h;
  }
};

enum class OrderKind { Grevlex, Lex };

/// Term order. `priority` lists variable indices from most to least significant;
/// an empty priority means the natural order x_0 > x_1 > ... .
class MonomialOrder {
 public:
  MonomialOrder() = default;
  MonomialOrder(OrderKind kind, std::vector<std::size_t> priority = {})
      : kind_(kind), priority_(std::move(priority)) {}

  static MonomialOrder grevlex() { return {OrderKind::Grevlex}; }
  static MonomialOrder lex(std::vector<std::size_t> priority = {}) {
    return {OrderKind::Lex, std::move(priority)};
  }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& priority() const noexcept { return priority_; }

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  std::size_t var(std::size_t rank) const noexcept {
    return priority_.empty() ? rank : priority_[rank];
  }

  OrderKind kind_ = OrderKind::Grevlex;
  std::vector<std::size_t> priority_;
};

}  // namespace fthresh
