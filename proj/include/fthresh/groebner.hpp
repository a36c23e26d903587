#pragma once

// Buchberger's algorithm over F_p, plus ideals carrying their reduced basis.

#include <vector>

#include "fthresh/parse.hpp"
#include "fthresh/poly.hpp"

namespace fthresh {

/// Reduced Gröbner basis: monic, inter-reduced, sorted by leading monomial
/// descending. The zero ideal has the empty basis.
std::vector<FpPoly> groebner(const std::vector<FpPoly>& gens,
                             const MonomialOrder& order = MonomialOrder::grevlex());

/// Runtime-tagged entry point: rational input is rejected with WrongDomain.
std::vector<FpPoly> groebner(const std::vector<AnyPoly>& gens,
                             const MonomialOrder& order = MonomialOrder::grevlex());

/// Remainder of full multivariate division by `basis` (a Gröbner basis for `order`).
FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis,
                   const MonomialOrder& order = MonomialOrder::grevlex());

/// Leading monomial of a nonzero polynomial under `order`.
const Monomial& leading_monomial(const FpPoly& f, const MonomialOrder& order);

class Ideal {
 public:
  /// Throws InvalidArgument on an empty generator list.
  static Ideal generated_by(std::vector<FpPoly> generators,
                            const MonomialOrder& order = MonomialOrder::grevlex());
  static Ideal unit(const FpRing& ring, const MonomialOrder& order = MonomialOrder::grevlex());

  const FpRing& ring() const noexcept { return ring_; }
  const std::vector<FpPoly>& generators() const noexcept { return generators_; }
  const std::vector<FpPoly>& basis() const noexcept { return basis_; }
  const MonomialOrder& order() const noexcept { return order_; }

  bool is_unit() const;
  bool is_zero() const noexcept { return basis_.empty(); }

  bool contains(const FpPoly& f) const;
  /// J ⊆ *this.
  bool contains(const Ideal& j) const;

  /// (f)·I, generated by f times each generator.
  Ideal product(const FpPoly& f) const;

  /// Same ideal with its basis computed under `order`.
  Ideal with_order(const MonomialOrder& order) const;

  /// Reduced basis rendered canonically.
  std::vector<std::string> basis_strings() const;

 private:
  Ideal(FpRing ring, std::vector<FpPoly> gens, MonomialOrder order);

  FpRing ring_;
  std::vector<FpPoly> generators_;
  MonomialOrder order_;
  std::vector<FpPoly> basis_;
};

bool ideal_member(const FpPoly& f, const Ideal& ideal);
bool ideal_equal(const Ideal& a, const Ideal& b);

}  // namespace fthresh
