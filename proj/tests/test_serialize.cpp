#include <doctest.h>

#include "fthresh/lct.hpp"
#include "fthresh/random.hpp"
#include "fthresh/serialize.hpp"

using namespace fthresh;

namespace {

FpPoly fp(const std::string& s, std::uint64_t p) { return parse_fp(s, {"x", "y"}, Prime(p)); }

Json reparse(const Json& j) { return Json::parse(j.dump()); }

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("nu table schema") {
    auto j = to_json(fpt_bounds(fp("x^2 + y^3", 7), 2));
    CHECK(j["nu"] == Json::array({5, 40}));
    CHECK(j["lower"] == "40/49");
    CHECK(j["upper"] == "41/49");
    CHECK(j["guess"] == "5/6");
    CHECK(j["records"][0]["e"] == 1);
    CHECK(j["records"][0]["lower"] == "5/7");
    CHECK(j.dump().find('.') == std::string::npos);
  }

  TEST_CASE("nu tables round trip") {
    Rng rng(51);
    for (int i = 0; i < 25; ++i) {
      RandomPolySpec spec;
      spec.p = std::vector<std::uint64_t>{2, 3, 5, 7}[i % 4];
      spec.num_vars = 1 + i % 3;
      auto t = fpt_bounds(random_poly(rng, spec), 3);
      auto back = nu_table_from_json(reparse(to_json(t)));
      CHECK(back.f == t.f);
      CHECK(back.records == t.records);
      CHECK(back.closed_form_guess == t.closed_form_guess);
      CHECK(to_json(back).dump() == to_json(t).dump());
    }
  }

  TEST_CASE("ideals round trip") {
    auto I = Ideal::generated_by({fp("x^2 + y^3", 7), fp("x*y", 7)});
    auto j = to_json(I);
    CHECK(j["order"] == "grevlex");
    auto back = ideal_from_json(reparse(j));
    CHECK(ideal_equal(back, I));
    CHECK(back.basis_strings() == I.basis_strings());
    auto L = I.with_order(MonomialOrder::lex({1, 0}));
    auto lback = ideal_from_json(reparse(to_json(L)));
    CHECK(lback.order() == L.order());
    CHECK(lback.basis() == L.basis());
  }

  TEST_CASE("order names round trip") {
    for (const auto& o : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::lex({2, 0, 1}),
                          MonomialOrder(OrderKind::Grevlex, {1, 0})}) {
      CHECK(order_from_string(order_to_string(o)) == o);
    }
    CHECK_THROWS_AS(order_from_string("deglex"), Error);
    CHECK_THROWS_AS(order_from_string("lex(1,a)"), Error);
  }

  TEST_CASE("resolution data round trip") {
    for (const auto* s : {"x^2 - y^3", "x^2 - y^5", "x*y*(x + y)", "y - x^2"}) {
      auto d = resolve_plane_curve(parse_q(s, {"x", "y"}));
      CHECK(resolution_from_json(reparse(to_json(d))) == d);
    }
    auto j = to_json(resolve_plane_curve(parse_q("x^2 - y^3", {"x", "y"})));
    CHECK(j["divisors"][2]["k"] == 4);
    CHECK(j["divisors"][2]["a"] == 6);
    CHECK(j["divisors"][3]["label"] == "strict");
  }

  TEST_CASE("compare rows round trip and csv") {
    auto rows = run_compare(parse_q("x^2 + y^3", {"x", "y"}), {Prime(2), Prime(7)}, 2, Rat(5, 6));
    for (const auto& r : rows) CHECK(compare_row_from_json(reparse(to_json(r))) == r);
    CompareRow none{3, 1, Rat(1, 3), Rat(2, 3), std::nullopt, Rat(5, 6), true, false};
    CHECK(compare_row_from_json(reparse(to_json(none))) == none);
    CHECK(to_json(none)["guess"].is_null());
    auto csv = compare_csv(rows);
    CHECK(csv.rfind("p,e_max,lower,upper,guess,lct,leq,eq\n", 0) == 0);
    CHECK(csv.find("7,2,40/49,41/49,5/6,5/6,true,true\n") != std::string::npos);
    CHECK(compare_csv({}) == "p,e_max,lower,upper,guess,lct,leq,eq\n");
  }

  TEST_CASE("elliptic reports round trip") {
    auto r = elliptic_check(parse_q("x^3 + y^3 + z^3", {"x", "y", "z"}), Prime(7), 2);
    CHECK(elliptic_from_json(reparse(to_json(r))) == r);
    CHECK(to_json(r)["pattern"] == "ordinary-consistent");
  }

  TEST_CASE("jump and mult reports") {
    auto j = to_json(jump_scan(fp("x*y", 3), 1));
    CHECK(j["drops"].size() == 1);
    CHECK(j["drops"][0]["c"] == "1");
    CHECK(j["drops"][0]["after"] == Json::array({"x*y"}));
    auto m = to_json(check_mult_inequality(fp("x^2 + y^3", 7), 1));
    CHECK(m["lower"] == "5/7");
    CHECK(m["ok"] == true);
  }
}
