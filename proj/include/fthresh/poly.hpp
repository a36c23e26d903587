#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fthresh/errors.hpp"
#include "fthresh/field.hpp"
#include "fthresh/monomial.hpp"

namespace fthresh {

/// Polynomial ring k[x_1..x_n]: coefficient field plus variable names.
template <class Field>
struct Ring {
  Field field;
  std::vector<std::string> vars;

  std::size_t arity() const noexcept { return vars.size(); }
  friend bool operator==(const Ring& a, const Ring& b) {
    return a.field == b.field && a.vars == b.vars;
  }
};

template <class Field>
using RingPtr = std::shared_ptr<const Ring<Field>>;

template <class Field>
RingPtr<Field> make_ring(Field field, std::vector<std::string> vars) {
  return std::make_shared<const Ring<Field>>(Ring<Field>{std::move(field), std::move(vars)});
}

/// Sparse multivariate polynomial. Terms are kept sorted grevlex-descending
/// with no zero coefficients, so equal polynomials have equal term lists.
template <class Field>
class Poly {
 public:
  using Elem = typename Field::Elem;
  using Term = std::pair<Monomial, Elem>;

  explicit Poly(RingPtr<Field> ring) : ring_(std::move(ring)) {}

  static Poly from_terms(RingPtr<Field> ring, std::vector<Term> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }
  static Poly constant(RingPtr<Field> ring, Elem c) {
    auto n = ring->arity();
    return from_terms(std::move(ring), {Term{Monomial(n), std::move(c)}});
  }
  static Poly one(RingPtr<Field> ring) {
    auto c = ring->field.one();
    return constant(std::move(ring), std::move(c));
  }
  static Poly monomial(RingPtr<Field> ring, Monomial m, Elem c) {
    return from_terms(std::move(ring), {Term{std::move(m), std::move(c)}});
  }
  static Poly variable(RingPtr<Field> ring, std::size_t i) {
    auto n = ring->arity();
    auto c = ring->field.one();
    return monomial(std::move(ring), Monomial::unit(n, i), std::move(c));
  }

  const RingPtr<Field>& ring_ptr() const noexcept { return ring_; }
  const Ring<Field>& ring() const noexcept { return *ring_; }
  const Field& field() const noexcept { return ring_->field; }
  std::size_t arity() const noexcept { return ring_->arity(); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Elem coeff(const Monomial& m) const {
    for (const auto& [mono, c] : terms_) {
      if (mono == m) return c;
    }
    return field().zero();
  }
  Elem constant_term() const {
    if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
    return field().zero();
  }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  std::uint64_t degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }
  /// Lowest total degree of a term (the order of vanishing at the origin).
  std::uint64_t low_degree() const {
    std::uint64_t d = terms_.empty() ? 0 : terms_.back().first.degree();
    for (const auto& t : terms_) d = std::min(d, t.first.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.first.degree() != degree()) return false;
    }
    return true;
  }

  Poly operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, field().neg(c));
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    return multiply_filtered(a, b, [](const Monomial&) { return true; });
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Elem& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    for (const auto& [m, a] : terms_) {
      auto prod = field().mul(a, c);
      if (!field().is_zero(prod)) r.terms_.emplace_back(m, std::move(prod));
    }
    return r;
  }
  Poly times_monomial(const Monomial& mono, const Elem& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    for (const auto& [m, a] : terms_) r.terms_.emplace_back(m * mono, field().mul(a, c));
    // Multiplying by a monomial preserves grevlex order.
    return r;
  }

  /// Product keeping only monomials accepted by `keep`. Used for truncated
  /// arithmetic modulo monomial ideals, where dropping terms before
  /// collection is the same as dropping them after.
  template <class Pred>
  static Poly multiply_filtered(const Poly& a, const Poly& b, Pred keep) {
    a.check_same_ring(b);
    std::unordered_map<Monomial, Elem, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    const auto& F = a.field();
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m = ma * mb;
        if (!keep(m)) continue;
        auto it = acc.find(m);
        if (it == acc.end()) {
          acc.emplace(std::move(m), F.mul(ca, cb));
        } else {
          it->second = F.add(it->second, F.mul(ca, cb));
        }
      }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!F.is_zero(c)) terms.emplace_back(m, std::move(c));
    }
    return from_terms(a.ring_, std::move(terms));
  }

  template <class Pred>
  Poly filtered(Pred keep) const {
    Poly r(ring_);
    for (const auto& t : terms_) {
      if (keep(t.first)) r.terms_.push_back(t);
    }
    return r;
  }

  Elem evaluate(std::span<const Elem> point) const {
    if (point.size() != arity()) throw Error(ErrorCode::InvalidArgument, "point has wrong arity");
    const auto& F = field();
    Elem sum = F.zero();
    for (const auto& [m, c] : terms_) {
      Elem v = c;
      for (std::size_t i = 0; i < arity(); ++i) v = F.mul(v, F.pow(point[i], m[i]));
      sum = F.add(sum, v);
    }
    return sum;
  }

  /// Canonical text: grevlex-descending terms, `*`-separated factors, `^1` omitted.
  std::string str() const {
    if (terms_.empty()) return "0";
    const auto& F = field();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      bool neg = F.is_negative(c);
      Elem mag = neg ? F.neg(c) : c;
      if (first) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < arity(); ++i) {
        if (m[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += ring_->vars[i];
        if (m[i] > 1) mono += "^" + std::to_string(m[i]);
      }
      if (mono.empty()) {
        out += F.render(mag);
      } else if (F.is_one(mag)) {
        out += mono;
      } else {
        out += F.render(mag) + "*" + mono;
      }
    }
    return out;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return (a.ring_ == b.ring_ || *a.ring_ == *b.ring_) && a.terms_ == b.terms_;
  }

  void check_same_ring(const Poly& o) const {
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
      throw Error(ErrorCode::RingMismatch, "polynomials live in different rings");
    }
  }

 private:
  static bool grevlex_greater(const Monomial& a, const Monomial& b) {
    return MonomialOrder::grevlex().compare(a, b) > 0;
  }

  void normalize() {
    const auto& F = field();
    for (const auto& t : terms_) {
      if (t.first.arity() != arity()) {
        throw Error(ErrorCode::RingMismatch, "monomial arity differs from ring arity");
      }
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_greater(x.first, y.first); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second = F.add(out.back().second, t.second);
      } else {
        if (!out.empty() && F.is_zero(out.back().second)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && F.is_zero(out.back().second)) out.pop_back();
    terms_ = std::move(out);
  }

  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    a.check_same_ring(b);
    const auto& F = a.field();
    Poly r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) {
        cmp = -1;
      } else if (j == b.terms_.size()) {
        cmp = 1;
      } else {
        cmp = MonomialOrder::grevlex().compare(a.terms_[i].first, b.terms_[j].first);
      }
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.emplace_back(t.first, subtract ? F.neg(t.second) : t.second);
      } else {
        auto c = subtract ? F.sub(a.terms_[i].second, b.terms_[j].second)
                          : F.add(a.terms_[i].second, b.terms_[j].second);
        if (!F.is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  RingPtr<Field> ring_;
  std::vector<Term> terms_;
};

using FpRing = RingPtr<PrimeField>;
using QRing = RingPtr<RationalField>;
using FpPoly = Poly<PrimeField>;
using QPoly = Poly<RationalField>;

/// f^a by square-and-multiply; f^0 = 1.
template <class Field>
Poly<Field> poly_pow(const Poly<Field>& f, std::uint64_t a) {
  Poly<Field> result = Poly<Field>::one(f.ring_ptr());
  Poly<Field> base = f;
  while (a) {
    if (a & 1) result = result * base;
    a >>= 1;
    if (a) base = base * base;
  }
  return result;
}

/// Frobenius twist over F_p: sum c x^A -> sum c x^{qA}. Since c^p = c in F_p
/// this equals f^q when q is a power of p.
FpPoly frobenius_twist(const FpPoly& f, std::uint64_t q);

/// f^a over F_p using the base-p digits of a and Frobenius twists.
FpPoly poly_pow(const FpPoly& f, std::uint64_t a);

/// Coefficient-wise image of an integral Q-polynomial in F_p (BadReduction if
/// some coefficient has p in its denominator).
FpPoly reduce_mod_p(const QPoly& f, Prime p);

/// Substitute x_i -> x_i + point_i.
template <class Field>
Poly<Field> translate(const Poly<Field>& f, std::span<const typename Field::Elem> point) {
  if (point.size() != f.arity()) throw Error(ErrorCode::InvalidArgument, "point has wrong arity");
  const auto& ring = f.ring_ptr();
  std::vector<Poly<Field>> shifted;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    shifted.push_back(Poly<Field>::variable(ring, i) + Poly<Field>::constant(ring, point[i]));
  }
  Poly<Field> out(ring);
  for (const auto& [m, c] : f.terms()) {
    auto term = Poly<Field>::constant(ring, c);
    for (std::size_t i = 0; i < f.arity(); ++i) {
      if (m[i]) term = term * poly_pow(shifted[i], m[i]);
    }
    out += term;
  }
  return out;
}

/// Order of vanishing at `point`: lowest total degree after translating the
/// point to the origin; 0 iff f(point) != 0.
template <class Field>
std::uint64_t multiplicity_at(const Poly<Field>& f, std::span<const typename Field::Elem> point) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity of the zero polynomial");
  if (!f.field().is_zero(f.evaluate(point))) return 0;
  return translate(f, point).low_degree();
}

template <class Field>
std::uint64_t multiplicity_at_origin(const Poly<Field>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity of the zero polynomial");
  return f.low_degree();
}

}  // namespace fthresh
