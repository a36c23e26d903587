#include <doctest.h>

#include "fthresh/groebner.hpp"
#include "fthresh/random.hpp"
#include "oracles.hpp"

using namespace fthresh;

namespace {

FpPoly fp(const std::string& s, std::uint64_t p = 7, std::vector<std::string> vars = {"x", "y"}) {
  return parse_fp(s, vars, Prime(p));
}

std::vector<FpPoly> fps(std::initializer_list<const char*> items, std::uint64_t p = 7) {
  std::vector<FpPoly> out;
  for (const auto* s : items) out.push_back(fp(s, p));
  return out;
}

Ideal ideal(std::initializer_list<const char*> items, std::uint64_t p = 7) {
  return Ideal::generated_by(fps(items, p));
}

// S-polynomial of f and g under grevlex, written out independently.
FpPoly s_poly(const FpPoly& f, const FpPoly& g) {
  const auto& order = MonomialOrder::grevlex();
  auto lf = leading_monomial(f, order), lg = leading_monomial(g, order);
  auto l = lf.lcm(lg);
  const auto& F = f.field();
  auto cf = F.inv(f.coeff(lf)), cg = F.inv(g.coeff(lg));
  return f.times_monomial(l.quotient(lf), cf) - g.times_monomial(l.quotient(lg), cg);
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("groebner examples") {
    CHECK(groebner(fps({"x", "y"})) == fps({"x", "y"}));
    CHECK(groebner(fps({"x + y", "y"})) == fps({"x", "y"}));
    CHECK(groebner(fps({"x^2", "x*y"})) == fps({"x^2", "x*y"}));
    CHECK(groebner(fps({"3*x + 2", "x*y"})) == groebner(fps({"3*x + 2", "y"})));
    CHECK(groebner(fps({"x + 1", "x*y", "x"})) == fps({"1"}));
    CHECK(groebner(fps({"0"})).empty());
  }

  TEST_CASE("groebner rejects rationals and empty input") {
    std::vector<AnyPoly> gens{parse_q("x", {"x"})};
    try {
      groebner(gens);
      FAIL("expected WrongDomain");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WrongDomain);
    }
    std::vector<AnyPoly> ok{fp("x + y"), fp("y")};
    CHECK(groebner(ok) == fps({"x", "y"}));
    try {
      Ideal::generated_by({});
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }

  TEST_CASE("normal form examples") {
    CHECK(normal_form(fp("x^2"), fps({"x"})).is_zero());
    auto lex_yx = MonomialOrder::lex({1, 0});
    CHECK(normal_form(fp("x^2*y"), fps({"y - x^2"}), lex_yx) == fp("x^4"));
    CHECK(normal_form(fp("1"), fps({"x", "y"})) == fp("1"));
  }

  TEST_CASE("membership and equality examples") {
    CHECK(ideal_member(fp("x"), ideal({"x + y", "y"})));
    CHECK(!ideal_member(fp("1"), ideal({"x"})));
    CHECK(ideal_member(fp("x^2*y^3"), ideal({"x^2", "y^2"})));
    CHECK(ideal_equal(ideal({"x", "y"}), ideal({"y", "x"})));
    CHECK(ideal_equal(ideal({"x + y", "y"}), ideal({"x", "y"})));
    CHECK(!ideal_equal(ideal({"x"}), ideal({"x^2"})));
    CHECK(ideal({"x + 1", "x"}).is_unit());
    CHECK(!ideal({"x", "y"}).is_unit());
  }

  TEST_CASE("orders give the same ideal") {
    auto I = ideal({"x^2 - y", "x*y - 1"});
    auto J = I.with_order(MonomialOrder::lex());
    CHECK(ideal_equal(I, J));
    CHECK(ideal_equal(J, I));
    CHECK(J.basis() != I.basis());
  }

  TEST_CASE("basis invariants on random ideals") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
      std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[i % 4];
      std::size_t k = uniform(rng, 1, 3);
      std::vector<FpPoly> gens;
      RandomPolySpec spec;
      spec.p = p;
      spec.num_vars = 1 + i % 3;
      spec.max_degree = 3;
      spec.max_terms = 3;
      for (std::size_t j = 0; j < k; ++j) gens.push_back(random_poly(rng, spec));
      for (const auto& order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
        auto basis = groebner(gens, order);
        for (const auto& g : gens) CHECK(normal_form(g, basis, order).is_zero());
        for (std::size_t a = 0; a < basis.size(); ++a) {
          const auto& lm = leading_monomial(basis[a], order);
          CHECK(basis[a].coeff(lm) == 1);
          for (std::size_t b = 0; b < basis.size(); ++b) {
            if (a != b) {
              // reduced: no term of basis[b] is divisible by LM(basis[a])
              for (const auto& [m, c] : basis[b].terms()) CHECK(!lm.divides(m));
            }
            if (a < b) CHECK(normal_form(s_poly(basis[a], basis[b]), basis, order).is_zero());
          }
          if (a + 1 < basis.size()) CHECK(order.compare(lm, leading_monomial(basis[a + 1], order)) > 0);
        }
        // idempotence and determinism
        auto h = random_poly(rng, spec);
        auto r = normal_form(h, basis, order);
        CHECK(normal_form(r, basis, order) == r);
        CHECK(groebner(gens, order) == basis);
        // permuting the generators does not change the reduced basis
        auto rev = gens;
        std::reverse(rev.begin(), rev.end());
        CHECK(groebner(rev, order) == basis);
      }
    }
  }

  TEST_CASE("membership agrees with monomial-ideal divisibility") {
    Rng rng(32);
    for (int i = 0; i < 60; ++i) {
      std::vector<oracle::Exps> mons;
      std::vector<FpPoly> gens;
      auto ring = make_ring(PrimeField(Prime(5)), {"x", "y", "z"});
      std::size_t k = uniform(rng, 1, 3);
      for (std::size_t j = 0; j < k; ++j) {
        oracle::Exps e{uniform(rng, 0, 3), uniform(rng, 0, 3), uniform(rng, 0, 3)};
        mons.push_back(e);
        gens.push_back(FpPoly::monomial(ring, Monomial(e), 1));
      }
      auto I = Ideal::generated_by(gens);
      RandomPolySpec spec;
      spec.p = 5;
      spec.num_vars = 3;
      spec.max_degree = 6;
      auto f = random_poly(rng, spec);
      CHECK(I.contains(f) == oracle::in_monomial_ideal(oracle::from_poly(f), mons));
    }
  }

  TEST_CASE("ideal_equal is an equivalence compatible with membership") {
    std::vector<Ideal> ideals{ideal({"x", "y"}), ideal({"x + y", "y"}), ideal({"x^2", "y"}),
                              ideal({"y", "x^2 + y"}), ideal({"x*y"}), ideal({"1"})};
    for (const auto& a : ideals) {
      CHECK(ideal_equal(a, a));
      for (const auto& b : ideals) {
        CHECK(ideal_equal(a, b) == ideal_equal(b, a));
        if (ideal_equal(a, b)) {
          for (const auto& g : a.generators()) CHECK(ideal_member(g, b));
          for (const auto& c : ideals) {
            if (ideal_equal(b, c)) CHECK(ideal_equal(a, c));
          }
        }
      }
    }
  }

  TEST_CASE("product ideal") {
    auto I = ideal({"x", "y"});
    auto P = I.product(fp("x^2 + y^3"));
    CHECK(ideal_equal(P, ideal({"x^3 + x*y^3", "x^2*y + y^4"})));
    CHECK(I.contains(P));
    CHECK(!P.contains(I));
  }
}
