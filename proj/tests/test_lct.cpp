#include <doctest.h>

#include <numeric>

#include "fthresh/lct.hpp"
#include "fthresh/parse.hpp"
#include "fthresh/resolution.hpp"

using namespace fthresh;

namespace {

QPoly q(const std::string& s) { return parse_q(s, {"x", "y"}); }

template <class F>
ErrorCode code_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> exceptional_ka(const ResolutionData& d) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& r : d.divisors) {
    if (r.label != "strict") out.emplace_back(r.k, r.a);
  }
  return out;
}

std::vector<Rat> rats(std::initializer_list<std::pair<long, long>> items) {
  std::vector<Rat> out;
  for (auto [n, d] : items) out.emplace_back(n, d);
  return out;
}

// min(1/m + 1/n, 1), restated here so the engine is not checked against itself.
Rat binomial_formula(std::uint64_t m, std::uint64_t n) {
  Rat v = Rat(1, static_cast<long>(m)) + Rat(1, static_cast<long>(n));
  return v < Rat(1) ? v : Rat(1);
}

}  // namespace

TEST_SUITE("lct") {
  TEST_CASE("closed forms") {
    std::vector<std::uint64_t> one{1}, two_three{2, 3}, fives{5, 5, 5};
    CHECK(lct_monomial(one) == Rat(1));
    CHECK(lct_monomial(two_three) == Rat(1, 3));
    CHECK(lct_monomial(fives) == Rat(1, 5));
    CHECK(code_of([] { lct_monomial(std::vector<std::uint64_t>{}); }) == ErrorCode::EmptyExponentList);
    CHECK(lct_homogeneous(3, 3) == Rat(1));
    CHECK(lct_homogeneous(2, 6) == Rat(1, 3));
    CHECK(lct_homogeneous(4, 2) == Rat(1));
    CHECK(lct_plane_binomial(2, 3) == Rat(5, 6));
    CHECK(lct_plane_binomial(2, 5) == Rat(7, 10));
    CHECK(lct_plane_binomial(1, 9) == Rat(1));
    CHECK(code_of([] { lct_plane_binomial(2, 4); }) == ErrorCode::NotCoprime);
  }

  TEST_CASE("smooth curve needs no blowup") {
    auto d = resolve_plane_curve(q("y - x^2"));
    CHECK(d.blowup_count == 0);
    REQUIRE(d.divisors.size() == 1);
    CHECK(d.divisors[0] == DivisorRecord{"strict", 0, 1});
    CHECK(lct_from_resolution(d) == Rat(1));
  }

  TEST_CASE("cusp resolution") {
    auto d = resolve_plane_curve(q("x^2 - y^3"));
    CHECK(d.blowup_count == 3);
    using KA = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
    CHECK(exceptional_ka(d) == KA{{1, 2}, {2, 3}, {4, 6}});
    CHECK(d.divisors.back() == DivisorRecord{"strict", 0, 1});
    REQUIRE(d.log.size() == 3);
    CHECK(d.log[0].k == 1);
    CHECK(d.log[1].k == 2);
    CHECK(d.log[2].k == 4);
    CHECK(d.log[0].a == 2);
    CHECK(d.log[1].a == 3);
    CHECK(d.log[2].a == 6);
    CHECK(lct_from_resolution(d) == Rat(5, 6));
    CHECK(candidate_jumping_numbers(d, Rat(1)) == rats({{5, 6}, {1, 1}}));
  }

  TEST_CASE("x^2 - y^5") {
    auto d = resolve_plane_curve(q("x^2 - y^5"));
    CHECK(lct_from_resolution(d) == Rat(7, 10));
    CHECK(candidate_jumping_numbers(d, Rat(1)) == rats({{7, 10}, {3, 4}, {4, 5}, {9, 10}, {1, 1}}));
  }

  TEST_CASE("candidates of smooth data") {
    ResolutionData smooth{{{"strict", 0, 1}}, 0, {}, {}};
    CHECK(candidate_jumping_numbers(smooth, Rat(3)) == rats({{1, 1}, {2, 1}, {3, 1}}));
    CHECK(code_of([&] { candidate_jumping_numbers(smooth, Rat(0)); }) == ErrorCode::InvalidArgument);
  }

  TEST_CASE("engine agrees with the binomial formula") {
    for (std::uint64_t m = 1; m <= 7; ++m) {
      for (std::uint64_t n = m; n <= 9; ++n) {
        if (std::gcd(m, n) != 1) continue;
        auto d = resolve_plane_curve(q("x^" + std::to_string(m) + " - y^" + std::to_string(n)));
        CHECK(lct_from_resolution(d) == lct_plane_binomial(m, n));
        CHECK(lct_from_resolution(d) == binomial_formula(m, n));
      }
    }
  }

  TEST_CASE("resolution invariants on assorted curves") {
    for (const auto* s : {"x^2 - y^3", "x*y", "x*y*(x + y)", "x*y*(x - y)*(x + 2*y)", "y^2 - x^2 - x^3",
                          "(y - x^2)*(y + x^2)", "x^3 - y^7", "y*(y - x^3)", "x^4 - y^6 + x^5",
                          "y^2 - x^5 + x^4*y", "(x^2 - y^3)*(x + y)"}) {
      INFO(s);
      auto d = resolve_plane_curve(q(s));
      auto l = lct_from_resolution(d);
      CHECK(l > Rat(0));
      CHECK(l <= Rat(1));
      auto cands = candidate_jumping_numbers(d, Rat(1));
      REQUIRE(!cands.empty());
      CHECK(cands.front() == l);
      CHECK(cands.back() == Rat(1));
      CHECK(d.blowup_count == d.log.size());
      for (const auto& r : d.divisors) {
        if (r.label == "strict") {
          CHECK(r.k == 0);
        } else {
          CHECK(r.k >= 1);
        }
        CHECK(r.a >= 1);
      }
      for (const auto& pt : d.snc_points) {
        CHECK(pt.components.size() <= 2);
        CHECK(!pt.reason.empty());
      }
      // deterministic
      CHECK(resolve_plane_curve(q(s)) == d);
    }
  }

  TEST_CASE("node and tacnode") {
    auto node = resolve_plane_curve(q("x*y"));
    // the strict transform is singular at a node, so one blowup separates the branches
    CHECK(node.blowup_count == 1);
    CHECK(lct_from_resolution(node) == Rat(1));
    auto three = resolve_plane_curve(q("x*y*(x + y)"));
    CHECK(three.blowup_count == 1);
    CHECK(lct_from_resolution(three) == Rat(2, 3));
    auto tac = resolve_plane_curve(q("(y - x^2)*(y + x^2)"));
    CHECK(lct_from_resolution(tac) == Rat(3, 4));
  }

  TEST_CASE("resolution preconditions") {
    CHECK(code_of([] { resolve_plane_curve(q("x^2 - y^3 + 1")); }) == ErrorCode::DoesNotVanishAtOrigin);
    CHECK(code_of([] { resolve_plane_curve(q("0")); }) == ErrorCode::ZeroPolynomial);
    CHECK(code_of([] { resolve_plane_curve(q("(x - y^2)^2")); }) == ErrorCode::NotSquareFree);
    CHECK(code_of([] { resolve_plane_curve(q("(x^2 - 2*y^2)^2 + y^5")); }) == ErrorCode::IrrationalCenter);
    // simple irrational points on the exceptional line are already normal crossings
    CHECK(lct_from_resolution(resolve_plane_curve(q("x^2 - 2*y^2"))) == Rat(1));
    CHECK(code_of([] { resolve_plane_curve(parse_q("x - y*z", {"x", "y", "z"})); }) ==
          ErrorCode::InvalidArgument);
    CHECK(is_square_free(q("x^2 - y^3")));
    CHECK(!is_square_free(q("x*(x - y)^2")));
  }

  TEST_CASE("fixture tables") {
    auto t3 = fixture_multiplier_table("x^2 - y^3");
    CHECK(t3.ideal_at(Rat(9, 10)) == std::vector<std::string>{"x", "y"});
    CHECK(t3.ideal_at(Rat(1, 2)) == std::vector<std::string>{"1"});
    CHECK(t3.ideal_at(Rat(0)) == std::vector<std::string>{"1"});
    CHECK(t3.ideal_at(Rat(5, 6)) == std::vector<std::string>{"x", "y"});
    CHECK(t3.ideal_at(Rat(1)) == std::vector<std::string>{"x^2 - y^3"});
    CHECK(t3.ideal_at(Rat(19, 10)).size() == 2);
    auto t5 = fixture_multiplier_table("x^2-y^5");
    CHECK(t5.ideal_at(Rat(95, 100)) == std::vector<std::string>{"x", "y^2"});
    CHECK(t5.ideal_at(Rat(7, 10)) == std::vector<std::string>{"x", "y"});
    CHECK(t5.ideal_at(Rat(69, 100)) == std::vector<std::string>{"1"});
    CHECK(code_of([] { fixture_multiplier_table("x^2 - y^7"); }) == ErrorCode::UnknownFixture);
  }

  TEST_CASE("fixture tables partition their range and decrease") {
    for (const auto& curve : fixture_curves()) {
      auto t = fixture_multiplier_table(curve);
      CHECK(t.intervals.front().lo == Rat(0));
      for (std::size_t i = 0; i + 1 < t.intervals.size(); ++i) {
        CHECK(t.intervals[i].hi == t.intervals[i + 1].lo);
        CHECK(t.intervals[i].lo < t.intervals[i].hi);
      }
      // each listed jump is a candidate from the resolution
      auto cands = candidate_jumping_numbers(resolve_plane_curve(q(curve)), Rat(1));
      for (std::size_t i = 1; i < t.intervals.size(); ++i) {
        CHECK(std::find(cands.begin(), cands.end(), t.intervals[i].lo) != cands.end());
      }
    }
  }
}
