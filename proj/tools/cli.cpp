#include "cli.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fthresh/compare.hpp"
#include "fthresh/frobenius.hpp"
#include "fthresh/lct.hpp"
#include "fthresh/parse.hpp"
#include "fthresh/random.hpp"
#include "fthresh/resolution.hpp"
#include "fthresh/serialize.hpp"
#include "fthresh/test_ideal.hpp"

namespace fthresh::cli {

namespace {

constexpr const char* kGrammar = R"(polynomial grammar:
  expr    := ['+' | '-'] term (('+' | '-') term)*
  term    := factor (('*' factor) | ('/' INTEGER))*
  factor  := primary ['^' INTEGER]
  primary := INTEGER | VARIABLE | '(' expr ')'
juxtaposition is not multiplication: "2x" and "x y" are syntax errors.
variables default to the identifiers found in the input, sorted; override with --vars x,y,z
)";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t prime = 0;
  unsigned emax = 0;
  std::vector<std::string> vars;
  std::string format = "json";
  std::string poly;
};

void add_format(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "json | csv | text")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

void add_vars(CLI::App* sub, Common& c) {
  sub->add_option("--vars", c.vars, "ring variables, comma separated")->delimiter(',');
}

void add_poly(CLI::App* sub, Common& c) { sub->add_option("f", c.poly, "polynomial")->required(); }

std::vector<std::string> vars_for(const Common& c) {
  return c.vars.empty() ? scan_variables(c.poly) : c.vars;
}

Prime prime_of(const Common& c) {
  if (c.prime == 0) throw UsageError("--prime is required");
  return Prime(c.prime);
}

FpPoly fp_input(const Common& c) { return parse_fp(c.poly, vars_for(c), prime_of(c)); }
QPoly q_input(const Common& c) { return parse_q(c.poly, vars_for(c)); }

void no_csv(const Common& c, const std::string& name) {
  if (c.format == "csv") throw UsageError("csv output is not available for '" + name + "'");
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

void print_nu_table(std::ostream& out, const NuTable& t, const Common& c, bool full) {
  if (c.format == "csv") {
    out << "e,nu,lower,upper\n";
    for (const auto& r : t.records) out << r.e << ',' << r.nu << ',' << r.lower << ',' << r.upper << '\n';
    return;
  }
  if (c.format == "text") {
    for (const auto& r : t.records) {
      out << "e=" << r.e << " nu=" << r.nu << " (" << r.lower << ", " << r.upper << "]\n";
    }
    if (full) out << "guess " << (t.closed_form_guess ? t.closed_form_guess->str() : "none") << '\n';
    return;
  }
  Json j = to_json(t);
  if (!full) {
    Json slim;
    slim["f"] = j["f"];
    slim["p"] = j["p"];
    slim["nu"] = j["nu"];
    j = slim;
  }
  emit(out, j);
}

void print_ideal(std::ostream& out, const Ideal& ideal, const Common& c, Json extra = Json::object()) {
  if (c.format == "text") {
    out << "(" << join(ideal.basis_strings(), ", ") << ")\n";
    return;
  }
  Json j = to_json(ideal);
  for (auto& [k, v] : extra.items()) j[k] = v;
  emit(out, j);
}

struct SelftestCheck {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

std::vector<SelftestCheck> run_selftest(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  const std::vector<std::uint64_t> primes{2, 3, 5, 7};
  auto draw = [&](std::uint64_t max_deg) {
    RandomPolySpec spec;
    spec.p = primes[uniform(rng, 0, primes.size() - 1)];
    spec.num_vars = uniform(rng, 1, 3);
    spec.max_degree = max_deg;
    return random_poly(rng, spec);
  };
  std::vector<SelftestCheck> checks{{"nu_oracle"}, {"skoda"}, {"reassembly"}, {"mult_inequality"}};
  for (std::size_t i = 0; i < count; ++i) {
    auto f = draw(4);
    unsigned e = uniform(rng, 1, 2);
    ++checks[0].cases;
    if (nu(f, e) != nu_oracle(f, e)) ++checks[0].failures;

    auto g = draw(3);
    unsigned e2 = uniform(rng, 1, 2);
    std::uint64_t q = checked_pow(g.field().characteristic(), e2);
    std::uint64_t a = uniform(rng, 0, std::min<std::uint64_t>(q, 8));
    ++checks[1].cases;
    if (!check_skoda(g, a, e2)) ++checks[1].failures;

    auto power = poly_pow(g, a);
    ++checks[2].cases;
    if (!(reassemble(pe_root_components(power, e2), e2, g.ring_ptr()) == power)) ++checks[2].failures;

    ++checks[3].cases;
    if (!check_mult_inequality(f, 2).ok) ++checks[3].failures;
  }
  return checks;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"F-thresholds, test ideals and log canonical thresholds", "fthresh"};
  app.require_subcommand(1);
  app.footer(kGrammar);

  Common c;
  std::uint64_t a = 0;
  unsigned e = 1;
  std::string c_value, bound = "1", lct_text, primes_text;
  std::uint64_t scan_cap = kDefaultScanCap, seed = 1;
  std::size_t count = 20;
  std::vector<std::uint64_t> monomial, homogeneous, binomial;
  std::string resolve;

  auto* nu_cmd = app.add_subcommand("nu", "ν_f(p^e) for e = 1..emax");
  auto* fpt_cmd = app.add_subcommand("fpt", "F-threshold brackets and closed-form guess");
  for (auto* sub : {nu_cmd, fpt_cmd}) {
    sub->add_option("--prime", c.prime, "characteristic")->required();
    sub->add_option("--emax", c.emax, "deepest level")->default_val(3);
    add_vars(sub, c);
    add_format(sub, c);
    add_poly(sub, c);
  }

  auto* ti_cmd = app.add_subcommand("testideal", "τ(f^(a/p^e)), or τ(f^c) with -c");
  ti_cmd->add_option("--prime", c.prime)->required();
  auto* a_opt = ti_cmd->add_option("-a", a, "numerator a");
  auto* c_opt = ti_cmd->add_option("-c", c_value, "rational exponent c")->excludes(a_opt);
  ti_cmd->add_option("-e", e, "level e")->default_val(1);
  ti_cmd->add_option("--emax", c.emax, "deepest level for -c")->default_val(4);
  add_vars(ti_cmd, c);
  add_format(ti_cmd, c);
  add_poly(ti_cmd, c);

  auto* jump_cmd = app.add_subcommand("jump", "scan a = 1..p^e for drops of τ(f^(a/p^e))");
  jump_cmd->add_option("--prime", c.prime)->required();
  jump_cmd->add_option("-e", e, "level e")->default_val(1);
  jump_cmd->add_option("--cap", scan_cap, "largest p^e scanned")->default_val(kDefaultScanCap);
  add_vars(jump_cmd, c);
  add_format(jump_cmd, c);
  add_poly(jump_cmd, c);

  auto* skoda_cmd = app.add_subcommand("skoda", "compare τ(f^(a/p^e + 1)) with (f)·τ(f^(a/p^e))");
  skoda_cmd->add_option("--prime", c.prime)->required();
  skoda_cmd->add_option("-a", a, "numerator a")->required();
  skoda_cmd->add_option("-e", e, "level e")->default_val(1);
  add_vars(skoda_cmd, c);
  add_format(skoda_cmd, c);
  add_poly(skoda_cmd, c);

  auto* lct_cmd = app.add_subcommand("lct", "log canonical threshold");
  auto* mono_opt = lct_cmd->add_option("--monomial", monomial, "exponents a_1 .. a_N")->expected(1, -1);
  auto* homog_opt = lct_cmd->add_option("--homogeneous", homogeneous, "N d")->expected(2);
  auto* binom_opt = lct_cmd->add_option("--binomial", binomial, "m n")->expected(2);
  auto* resolve_opt = lct_cmd->add_option("--resolve", resolve, "plane curve over Q");
  lct_cmd->add_option("--vars", c.vars, "ring variables, comma separated")->delimiter(',');
  add_format(lct_cmd, c);
  mono_opt->excludes(homog_opt)->excludes(binom_opt)->excludes(resolve_opt);
  homog_opt->excludes(binom_opt)->excludes(resolve_opt);
  binom_opt->excludes(resolve_opt);

  auto* cand_cmd = app.add_subcommand("candidates", "candidate jumping numbers from a resolution");
  cand_cmd->add_option("--bound", bound, "largest candidate")->default_val("1");
  add_vars(cand_cmd, c);
  add_format(cand_cmd, c);
  add_poly(cand_cmd, c);

  auto* cmp_cmd = app.add_subcommand("compare", "F-threshold of f mod p against lct(f)");
  cmp_cmd->add_option("--primes", primes_text, "comma separated primes")->required();
  cmp_cmd->add_option("--emax", c.emax)->default_val(3);
  cmp_cmd->add_option("--lct", lct_text, "lct(f); resolved from f when omitted");
  add_vars(cmp_cmd, c);
  add_format(cmp_cmd, c);
  add_poly(cmp_cmd, c);

  auto* ell_cmd = app.add_subcommand("elliptic", "ν-pattern of a homogeneous cubic in three variables");
  ell_cmd->add_option("--prime", c.prime)->required();
  ell_cmd->add_option("--emax", c.emax)->default_val(2);
  add_vars(ell_cmd, c);
  add_format(ell_cmd, c);
  add_poly(ell_cmd, c);

  auto* mult_cmd = app.add_subcommand("mult", "check N/mult >= FT >= 1/mult at level e");
  mult_cmd->add_option("--prime", c.prime)->required();
  mult_cmd->add_option("-e,--emax", c.emax, "level e")->default_val(2);
  add_vars(mult_cmd, c);
  add_format(mult_cmd, c);
  add_poly(mult_cmd, c);

  auto* self_cmd = app.add_subcommand("selftest", "randomized property checks");
  self_cmd->add_option("--seed", seed)->default_val(1);
  self_cmd->add_option("--count", count, "instances per check")->default_val(20);
  add_format(self_cmd, c);

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "usage error: " << ex.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (nu_cmd->parsed() || fpt_cmd->parsed()) {
      print_nu_table(out, fpt_bounds(fp_input(c), c.emax), c, fpt_cmd->parsed());
    } else if (ti_cmd->parsed()) {
      no_csv(c, "testideal");
      auto f = fp_input(c);
      if (*c_opt) {
        auto res = test_ideal_at(f, Rat::parse(c_value), c.emax);
        print_ideal(out, res.ideal, c,
                    {{"c", Rat::parse(c_value).str()}, {"stabilized", res.stabilized}, {"e_used", res.e_used}});
      } else {
        print_ideal(out, test_ideal(f, a, e), c, {{"a", a}, {"e", e}});
      }
    } else if (jump_cmd->parsed()) {
      no_csv(c, "jump");
      auto report = jump_scan(fp_input(c), e, scan_cap);
      if (c.format == "text") {
        for (const auto& d : report.drops) {
          out << d.c << ": (" << join(d.before.basis_strings(), ", ") << ") -> ("
              << join(d.after.basis_strings(), ", ") << ")\n";
        }
      } else {
        emit(out, to_json(report));
      }
    } else if (skoda_cmd->parsed()) {
      no_csv(c, "skoda");
      auto f = fp_input(c);
      bool holds = check_skoda(f, a, e);
      if (c.format == "text") {
        out << (holds ? "holds" : "fails") << '\n';
      } else {
        emit(out, {{"f", f.str()}, {"p", f.field().characteristic()}, {"a", a}, {"e", e}, {"holds", holds}});
      }
    } else if (lct_cmd->parsed()) {
      no_csv(c, "lct");
      std::optional<Rat> value;
      std::optional<ResolutionData> data;
      if (*mono_opt) {
        value = lct_monomial(monomial);
      } else if (*homog_opt) {
        value = lct_homogeneous(homogeneous[0], homogeneous[1]);
      } else if (*binom_opt) {
        value = lct_plane_binomial(binomial[0], binomial[1]);
      } else if (*resolve_opt) {
        c.poly = resolve;
        data = resolve_plane_curve(q_input(c));
        value = lct_from_resolution(*data);
      } else {
        throw UsageError("lct needs one of --monomial, --homogeneous, --binomial, --resolve");
      }
      if (c.format == "text") {
        out << *value << '\n';
      } else if (data) {
        emit(out, {{"lct", value->str()}, {"resolution", to_json(*data)}});
      } else {
        out << Json(value->str()).dump() << '\n';
      }
    } else if (cand_cmd->parsed()) {
      no_csv(c, "candidates");
      auto data = resolve_plane_curve(q_input(c));
      auto values = candidate_jumping_numbers(data, Rat::parse(bound));
      std::vector<std::string> rendered;
      for (const auto& v : values) rendered.push_back(v.str());
      if (c.format == "text") {
        out << join(rendered, " ") << '\n';
      } else {
        emit(out, {{"lct", lct_from_resolution(data).str()}, {"bound", Rat::parse(bound).str()},
                   {"candidates", rendered}});
      }
    } else if (cmp_cmd->parsed()) {
      auto f = q_input(c);
      std::vector<Prime> primes;
      for (const auto& item : CLI::detail::split(primes_text, ',')) {
        try {
          primes.emplace_back(std::stoull(item));
        } catch (const std::logic_error&) {
          throw UsageError("bad prime list '" + primes_text + "'");
        }
      }
      Rat lct = lct_text.empty() ? lct_from_resolution(resolve_plane_curve(f)) : Rat::parse(lct_text);
      auto rows = run_compare(f, primes, c.emax, lct);
      if (c.format == "csv") {
        out << compare_csv(rows);
      } else if (c.format == "text") {
        for (const auto& r : rows) {
          out << "p=" << r.p << " (" << r.lower << ", " << r.upper << "] guess "
              << (r.guess ? r.guess->str() : "none") << " lct " << r.lct << (r.leq_holds ? "" : " VIOLATION")
              << (r.equality_guess ? " equal" : "") << '\n';
        }
      } else {
        Json equal = Json::array();
        for (const auto& r : rows) {
          if (r.equality_guess) equal.push_back(r.p);
        }
        emit(out, {{"f", f.str()}, {"lct", lct.str()}, {"rows", to_json(rows)},
                   {"hard_failure", has_hard_failure(rows)}, {"equality_primes", equal}});
      }
    } else if (ell_cmd->parsed()) {
      no_csv(c, "elliptic");
      auto report = elliptic_check(q_input(c), prime_of(c), c.emax);
      if (c.format == "text") {
        out << "p=" << report.p << ' ' << pattern_name(report.pattern) << '\n';
      } else {
        emit(out, to_json(report));
      }
    } else if (mult_cmd->parsed()) {
      no_csv(c, "mult");
      auto report = check_mult_inequality(fp_input(c), c.emax);
      if (c.format == "text") {
        out << (report.ok ? "ok" : "violated") << " mult=" << report.mult << " (" << report.lower << ", "
            << report.upper << "]\n";
      } else {
        emit(out, to_json(report));
      }
    } else if (self_cmd->parsed()) {
      no_csv(c, "selftest");
      auto checks = run_selftest(seed, count);
      bool ok = true;
      Json list = Json::array();
      for (const auto& ch : checks) {
        ok = ok && ch.failures == 0;
        list.push_back({{"name", ch.name}, {"cases", ch.cases}, {"failures", ch.failures}});
        if (c.format == "text") out << ch.name << ": " << ch.failures << '/' << ch.cases << " failures\n";
      }
      if (c.format != "text") emit(out, {{"seed", seed}, {"checks", list}, {"ok", ok}});
      return ok ? 0 : 1;
    }
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n' << kGrammar;
    return 2;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace fthresh::cli
