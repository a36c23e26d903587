#include "fthresh/monomial.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "fthresh/errors.hpp"

namespace fthresh {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorCode::ExponentOverflow, "monomial exponent overflow");
  }
  return a + b;
}

}  // namespace

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d = checked_add(d, e);
  return d;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

std::uint64_t Monomial::max_exponent() const noexcept {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = checked_add(exps_[i], o.exps_[i]);
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (k != 0 && exps_[i] > std::numeric_limits<std::uint64_t>::max() / k) {
      throw Error(ErrorCode::ExponentOverflow, "monomial exponent overflow");
    }
    r.exps_[i] = exps_[i] * k;
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > o.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const noexcept {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(arity());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], o.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& o) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && o.exps_[i] != 0) return false;
  }
  return true;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.arity();
  if (kind_ == OrderKind::Lex) {
    for (std::size_t r = 0; r < n; ++r) {
      auto v = var(r);
      if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
  }
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Reverse lexicographic tie-break: the smaller exponent in the least
  // significant variable wins.
  for (std::size_t r = n; r-- > 0;) {
    auto v = var(r);
    if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
  }
  return 0;
}

std::string MonomialOrder::name() const {
  std::string s = kind_ == OrderKind::Grevlex ? "grevlex" : "lex";
  if (!priority_.empty()) {
    s += "(";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(priority_[i]);
    }
    s += ")";
  }
  return s;
}

}  // namespace fthresh
