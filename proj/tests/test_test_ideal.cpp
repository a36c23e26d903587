#include <doctest.h>

#include "fthresh/frobenius.hpp"
#include "fthresh/random.hpp"
#include "fthresh/test_ideal.hpp"
#include "oracles.hpp"

using namespace fthresh;

namespace {

FpPoly fp(const std::string& s, std::uint64_t p, std::vector<std::string> vars = {"x", "y"}) {
  return parse_fp(s, vars, Prime(p));
}

Ideal ideal_of(std::initializer_list<const char*> items, std::uint64_t p, std::vector<std::string> vars = {"x", "y"}) {
  std::vector<FpPoly> gens;
  for (const auto* s : items) gens.push_back(fp(s, p, vars));
  return Ideal::generated_by(gens);
}

FpPoly draw(Rng& rng, std::uint64_t deg = 3) {
  RandomPolySpec spec;
  spec.p = std::vector<std::uint64_t>{2, 3, 5}[uniform(rng, 0, 2)];
  spec.num_vars = uniform(rng, 1, 3);
  spec.max_degree = deg;
  return random_poly(rng, spec);
}

std::uint64_t first_nonunit(const FpPoly& f, unsigned e) {
  for (std::uint64_t a = 0;; ++a) {
    if (!trivial_at_origin(test_ideal(f, a, e))) return a;
  }
}

}  // namespace

TEST_SUITE("test_ideal") {
  TEST_CASE("root decomposition examples") {
    auto one = pe_root_components(fp("1", 2), 3);
    REQUIRE(one.size() == 1);
    CHECK(one[0].residue_exponent == Monomial{0, 0});
    CHECK(one[0].part == fp("1", 2));

    auto c = pe_root_components(fp("x^2 + x*y", 2), 1);
    REQUIRE(c.size() == 2);
    CHECK(c[0].residue_exponent == Monomial{0, 0});
    CHECK(c[0].part == fp("x", 2));
    CHECK(c[1].residue_exponent == Monomial{1, 1});
    CHECK(c[1].part == fp("1", 2));

    auto d = pe_root_components(fp("x^2 + y^3", 2), 1);
    REQUIRE(d.size() == 2);
    CHECK(d[0].residue_exponent == Monomial{0, 0});
    CHECK(d[0].part == fp("x", 2));
    CHECK(d[1].residue_exponent == Monomial{0, 1});
    CHECK(d[1].part == fp("y", 2));
  }

  TEST_CASE("test_ideal examples") {
    CHECK(test_ideal(fp("x^2 + y^3", 5), 0, 2).is_unit());
    CHECK(ideal_equal(test_ideal(fp("x^2 + y^3", 2), 1, 1), ideal_of({"x", "y"}, 2)));
    CHECK(ideal_equal(test_ideal(fp("x", 3, {"x"}), 3, 1), ideal_of({"x"}, 3, {"x"})));
  }

  TEST_CASE("test_ideal_at examples") {
    auto zero = test_ideal_at(fp("x^2 + y^3", 7), Rat(0), 3);
    CHECK(zero.ideal.is_unit());
    CHECK(zero.stabilized);

    auto cusp = test_ideal_at(fp("x^2 + y^3", 7), Rat(5, 6), 3);
    CHECK(cusp.stabilized);
    CHECK(ideal_equal(cusp.ideal, ideal_of({"x", "y"}, 7)));

    auto smooth = test_ideal_at(fp("x", 2, {"x"}), Rat(1), 2);
    CHECK(smooth.stabilized);
    CHECK(ideal_equal(smooth.ideal, ideal_of({"x"}, 2, {"x"})));

    try {
      test_ideal_at(fp("x", 2, {"x"}), Rat(-1, 2), 3);
      FAIL("expected NegativeExponentParameter");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NegativeExponentParameter);
    }
  }

  TEST_CASE("stabilization on fixtures") {
    struct Case {
      const char* f;
      std::uint64_t p;
      Rat c;
    };
    for (const auto& k : {Case{"x^2 + y^3", 7, Rat(5, 6)}, Case{"x^2 + y^3", 7, Rat(1, 2)},
                          Case{"x^2 + y^3", 13, Rat(9, 10)}, Case{"x*y", 3, Rat(1)}, Case{"x*y", 5, Rat(1, 2)},
                          Case{"x^2 + y^5", 11, Rat(4, 5)}}) {
      auto r = test_ideal_at(fp(k.f, k.p), k.c, 4);
      CHECK(r.stabilized);
    }
  }

  TEST_CASE("skoda examples") {
    CHECK(check_skoda(fp("x", 3, {"x"}), 0, 1));
    CHECK(check_skoda(fp("x^2 + y^3", 2), 1, 1));
    CHECK(check_skoda(fp("x*y", 3), 2, 1));
  }

  TEST_CASE("jump_scan examples") {
    auto smooth = jump_scan(fp("x", 2, {"x"}), 2);
    REQUIRE(smooth.drops.size() == 1);
    CHECK(smooth.drops[0].a == 4);
    CHECK(smooth.drops[0].c == Rat(1));
    CHECK(ideal_equal(smooth.drops[0].after, ideal_of({"x"}, 2, {"x"})));

    auto cusp = jump_scan(fp("x^2 + y^3", 7), 2);
    REQUIRE(!cusp.drops.empty());
    CHECK(cusp.drops[0].c == Rat(41, 49));

    auto node = jump_scan(fp("x*y", 3), 1);
    REQUIRE(node.drops.size() == 1);
    CHECK(node.drops[0].a == 3);
    CHECK(node.drops[0].before.is_unit());
    CHECK(ideal_equal(node.drops[0].after, ideal_of({"x*y"}, 3)));

    try {
      jump_scan(fp("x", 13, {"x"}), 3, 100);
      FAIL("expected ScanTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ScanTooLarge);
    }
  }

  TEST_CASE("jump drops are strict and ascending") {
    for (const auto& fx : oracle::fp_fixtures()) {
      for (std::uint64_t p : {2u, 3u, 5u}) {
        auto f = parse_fp(fx.text, fx.vars, Prime(p));
        auto report = jump_scan(f, p == 5 ? 1 : 2);
        for (std::size_t i = 0; i < report.drops.size(); ++i) {
          const auto& d = report.drops[i];
          CHECK(d.before.contains(d.after));
          CHECK(!d.after.contains(d.before));
          if (i) CHECK(report.drops[i - 1].c < d.c);
        }
      }
    }
  }

  TEST_CASE("decomposition agrees with a schoolbook split") {
    Rng rng(41);
    for (int i = 0; i < 40; ++i) {
      auto f = draw(rng);
      std::uint64_t p = f.field().characteristic();
      unsigned e = uniform(rng, 1, 2);
      std::uint64_t a = uniform(rng, 0, 12);
      auto g = poly_pow(f, a);
      auto parts = oracle::root_parts(oracle::power(oracle::from_poly(f), a, p), oracle::ipow(p, e));
      auto comps = pe_root_components(g, e);
      REQUIRE(parts.size() == comps.size());
      for (std::size_t k = 0; k < comps.size(); ++k) CHECK(oracle::from_poly(comps[k].part) == parts[k]);
      CHECK(reassemble(comps, e, f.ring_ptr()) == g);
    }
  }

  TEST_CASE("monotonicity and well-definedness") {
    Rng rng(42);
    for (int i = 0; i < 30; ++i) {
      auto f = draw(rng);
      std::uint64_t p = f.field().characteristic();
      unsigned e = uniform(rng, 1, 2);
      std::uint64_t q = oracle::ipow(p, e);
      std::uint64_t b = uniform(rng, 0, q), a = b + uniform(rng, 0, q);
      CHECK(test_ideal(f, b, e).contains(test_ideal(f, a, e)));
      if (p * b <= 40) CHECK(ideal_equal(test_ideal(f, b, e), test_ideal(f, p * b, e + 1)));
    }
  }

  TEST_CASE("minimality against monomial ideals") {
    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
      auto f = draw(rng);
      std::uint64_t p = f.field().characteristic();
      unsigned e = uniform(rng, 1, 2);
      std::uint64_t a = uniform(rng, 0, oracle::ipow(p, e));
      auto n = f.arity();
      std::vector<oracle::Exps> mons;
      std::vector<FpPoly> gens;
      for (std::size_t j = 0, k = uniform(rng, 1, 3); j < k; ++j) {
        oracle::Exps ex(n);
        for (auto& x : ex) x = uniform(rng, 0, 2);
        mons.push_back(ex);
        gens.push_back(FpPoly::monomial(f.ring_ptr(), Monomial(ex), 1));
      }
      auto J = Ideal::generated_by(gens);
      auto parts = oracle::root_parts(oracle::power(oracle::from_poly(f), a, p), oracle::ipow(p, e));
      bool all_in = std::all_of(parts.begin(), parts.end(),
                                [&](const oracle::Naive& r) { return oracle::in_monomial_ideal(r, mons); });
      CHECK(all_in == J.contains(test_ideal(f, a, e)));
    }
  }

  TEST_CASE("first non-unit level sits one above nu") {
    for (const auto& fx : oracle::fp_fixtures()) {
      for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
        auto f = parse_fp(fx.text, fx.vars, Prime(p));
        for (unsigned e = 1; e <= (p <= 3 ? 2u : 1u); ++e) CHECK(first_nonunit(f, e) == nu(f, e) + 1);
      }
    }
    Rng rng(44);
    for (int i = 0; i < 30; ++i) {
      auto f = draw(rng);
      unsigned e = uniform(rng, 1, 2);
      CHECK(first_nonunit(f, e) == nu(f, e) + 1);
    }
  }

  TEST_CASE("skoda on random instances") {
    Rng rng(45);
    for (int i = 0; i < 30; ++i) {
      auto f = draw(rng);
      unsigned e = uniform(rng, 1, 2);
      std::uint64_t a = uniform(rng, 0, oracle::ipow(f.field().characteristic(), e));
      CHECK(check_skoda(f, a, e));
    }
  }
}
