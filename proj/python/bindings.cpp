#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fthresh/compare.hpp"
#include "fthresh/frobenius.hpp"
#include "fthresh/groebner.hpp"
#include "fthresh/lct.hpp"
#include "fthresh/parse.hpp"
#include "fthresh/resolution.hpp"
#include "fthresh/serialize.hpp"
#include "fthresh/test_ideal.hpp"

namespace py = pybind11;
using namespace fthresh;

namespace {

using Vars = std::optional<std::vector<std::string>>;

std::vector<std::string> vars_for(const std::string& f, const Vars& vars) {
  return vars ? *vars : scan_variables(f);
}

FpPoly fp_of(const std::string& f, std::uint64_t p, const Vars& vars) {
  return parse_fp(f, vars_for(f, vars), Prime(p));
}

QPoly q_of(const std::string& f, const Vars& vars) { return parse_q(f, vars_for(f, vars)); }

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<FpPoly> gens_of(const std::vector<std::string>& gens, std::uint64_t p, const Vars& vars) {
  std::string joined;
  for (const auto& g : gens) joined += g + " ";
  auto names = vars ? *vars : scan_variables(joined);
  std::vector<FpPoly> out;
  for (const auto& g : gens) out.push_back(parse_fp(g, names, Prime(p)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> error(m, "FthreshError");
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      PyErr_SetObject(error.ptr(), py::make_tuple(error_code_name(e.code()), e.what()).ptr());
    }
  });

  m.def("nu", [](const std::string& f, std::uint64_t p, unsigned e, const Vars& vars) {
    return nu(fp_of(f, p, vars), e);
  }, py::arg("f"), py::arg("p"), py::arg("e"), py::arg("vars") = py::none());

  m.def("nu_sequence", [](const std::string& f, std::uint64_t p, unsigned e_max, const Vars& vars) {
    return nu_sequence(fp_of(f, p, vars), e_max);
  }, py::arg("f"), py::arg("p"), py::arg("e_max"), py::arg("vars") = py::none());

  m.def("fpt_bounds", [](const std::string& f, std::uint64_t p, unsigned e_max, const Vars& vars) {
    return to_py(to_json(fpt_bounds(fp_of(f, p, vars), e_max)));
  }, py::arg("f"), py::arg("p"), py::arg("e_max") = 3, py::arg("vars") = py::none());

  m.def("test_ideal", [](const std::string& f, std::uint64_t p, std::uint64_t a, unsigned e, const Vars& vars) {
    return test_ideal(fp_of(f, p, vars), a, e).basis_strings();
  }, py::arg("f"), py::arg("p"), py::arg("a"), py::arg("e"), py::arg("vars") = py::none());

  m.def("test_ideal_at", [](const std::string& f, std::uint64_t p, const std::string& c, unsigned e_max,
                            const Vars& vars) {
    auto r = test_ideal_at(fp_of(f, p, vars), Rat::parse(c), e_max);
    py::dict d;
    d["generators"] = r.ideal.basis_strings();
    d["stabilized"] = r.stabilized;
    d["e_used"] = r.e_used;
    return d;
  }, py::arg("f"), py::arg("p"), py::arg("c"), py::arg("e_max") = 4, py::arg("vars") = py::none());

  m.def("groebner", [](const std::vector<std::string>& gens, std::uint64_t p, const std::string& order,
                       const Vars& vars) {
    return Ideal::generated_by(gens_of(gens, p, vars), order_from_string(order)).basis_strings();
  }, py::arg("gens"), py::arg("p"), py::arg("order") = "grevlex", py::arg("vars") = py::none());

  m.def("ideal_member", [](const std::string& g, const std::vector<std::string>& gens, std::uint64_t p,
                           const Vars& vars) {
    auto all = gens;
    all.push_back(g);
    auto polys = gens_of(all, p, vars);
    auto target = polys.back();
    polys.pop_back();
    return Ideal::generated_by(polys).contains(target);
  }, py::arg("g"), py::arg("gens"), py::arg("p"), py::arg("vars") = py::none());

  m.def("lct_monomial", [](const std::vector<std::uint64_t>& exps) { return lct_monomial(exps).str(); });
  m.def("lct_homogeneous", [](std::uint64_t n, std::uint64_t d) { return lct_homogeneous(n, d).str(); });
  m.def("lct_plane_binomial", [](std::uint64_t a, std::uint64_t b) { return lct_plane_binomial(a, b).str(); });

  m.def("resolve", [](const std::string& f, const Vars& vars) {
    auto data = resolve_plane_curve(q_of(f, vars));
    py::dict d;
    d["lct"] = lct_from_resolution(data).str();
    d["resolution"] = to_py(to_json(data));
    return d;
  }, py::arg("f"), py::arg("vars") = py::none());

  m.def("candidates", [](const std::string& f, const std::string& bound, const Vars& vars) {
    std::vector<std::string> out;
    for (const auto& r : candidate_jumping_numbers(resolve_plane_curve(q_of(f, vars)), Rat::parse(bound)))
      out.push_back(r.str());
    return out;
  }, py::arg("f"), py::arg("bound") = "1", py::arg("vars") = py::none());

  m.def("compare", [](const std::string& f, const std::vector<std::uint64_t>& primes, unsigned e_max,
                      const std::optional<std::string>& lct, const Vars& vars) {
    auto q = q_of(f, vars);
    Rat value = lct ? Rat::parse(*lct) : lct_from_resolution(resolve_plane_curve(q));
    std::vector<Prime> ps;
    for (auto p : primes) ps.emplace_back(p);
    auto rows = run_compare(q, ps, e_max, value);
    Json equal = Json::array();
    for (const auto& r : rows)
      if (r.equality_guess) equal.push_back(r.p);
    return to_py(Json{{"f", q.str()}, {"lct", value.str()}, {"rows", to_json(rows)},
                      {"hard_failure", has_hard_failure(rows)}, {"equality_primes", equal}});
  }, py::arg("f"), py::arg("primes"), py::arg("e_max") = 3, py::arg("lct") = py::none(),
     py::arg("vars") = py::none());

  m.def("elliptic", [](const std::string& f, std::uint64_t p, unsigned e_max, const Vars& vars) {
    return to_py(to_json(elliptic_check(q_of(f, vars), Prime(p), e_max)));
  }, py::arg("f"), py::arg("p"), py::arg("e_max") = 2, py::arg("vars") = py::none());
}
