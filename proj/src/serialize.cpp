#include "fthresh/serialize.hpp"

#include <sstream>

#include "fthresh/parse.hpp"

namespace fthresh {

namespace {

Json opt_rat(const std::optional<Rat>& r) { return r ? Json(r->str()) : Json(nullptr); }

std::optional<Rat> opt_rat_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Rat::parse(j.get<std::string>());
}

Rat rat_from(const Json& j) { return Rat::parse(j.get<std::string>()); }

}  // namespace

Json to_json(const NuTable& table) {
  Json records = Json::array();
  Json nus = Json::array();
  for (const auto& r : table.records) {
    records.push_back({{"e", r.e}, {"nu", r.nu}, {"lower", r.lower.str()}, {"upper", r.upper.str()}});
    nus.push_back(r.nu);
  }
  Json j;
  j["f"] = table.f.str();
  j["p"] = table.p();
  j["vars"] = table.f.ring().vars;
  j["records"] = records;
  j["nu"] = nus;
  if (!table.records.empty()) {
    j["lower"] = table.last().lower.str();
    j["upper"] = table.last().upper.str();
  }
  j["guess"] = opt_rat(table.closed_form_guess);
  return j;
}

NuTable nu_table_from_json(const Json& j) {
  NuTable t{parse_fp(j.at("f").get<std::string>(), j.at("vars").get<std::vector<std::string>>(),
                     Prime(j.at("p").get<std::uint64_t>())),
            {},
            opt_rat_from(j.at("guess"))};
  for (const auto& r : j.at("records")) {
    t.records.push_back({r.at("e").get<unsigned>(), r.at("nu").get<std::uint64_t>(), rat_from(r.at("lower")),
                         rat_from(r.at("upper"))});
  }
  return t;
}

Json to_json(const Ideal& ideal) {
  Json j;
  j["p"] = ideal.ring()->field.characteristic();
  j["vars"] = ideal.ring()->vars;
  j["order"] = order_to_string(ideal.order());
  j["generators"] = ideal.basis_strings();
  return j;
}

Ideal ideal_from_json(const Json& j) {
  auto vars = j.at("vars").get<std::vector<std::string>>();
  Prime p(j.at("p").get<std::uint64_t>());
  auto order = order_from_string(j.at("order").get<std::string>());
  std::vector<FpPoly> gens;
  for (const auto& g : j.at("generators")) gens.push_back(parse_fp(g.get<std::string>(), vars, p));
  if (gens.empty()) gens.push_back(parse_fp("0", vars, p));
  return Ideal::generated_by(std::move(gens), order);
}

Json to_json(const ResolutionData& data) {
  Json divisors = Json::array();
  for (const auto& d : data.divisors) divisors.push_back({{"label", d.label}, {"k", d.k}, {"a", d.a}});
  Json log = Json::array();
  for (const auto& s : data.log) {
    log.push_back({{"label", s.label}, {"center", s.center}, {"through", s.through}, {"k", s.k}, {"a", s.a}});
  }
  Json snc = Json::array();
  for (const auto& s : data.snc_points) {
    snc.push_back({{"where", s.where}, {"components", s.components}, {"reason", s.reason}});
  }
  Json j;
  j["divisors"] = divisors;
  j["blowup_count"] = data.blowup_count;
  j["log"] = log;
  j["snc_points"] = snc;
  return j;
}

ResolutionData resolution_from_json(const Json& j) {
  ResolutionData data;
  for (const auto& d : j.at("divisors")) {
    data.divisors.push_back({d.at("label").get<std::string>(), d.at("k").get<std::uint64_t>(),
                             d.at("a").get<std::uint64_t>()});
  }
  data.blowup_count = j.at("blowup_count").get<std::size_t>();
  for (const auto& s : j.at("log")) {
    data.log.push_back({s.at("label").get<std::string>(), s.at("center").get<std::string>(),
                        s.at("through").get<std::vector<std::string>>(), s.at("k").get<std::uint64_t>(),
                        s.at("a").get<std::uint64_t>()});
  }
  for (const auto& s : j.at("snc_points")) {
    data.snc_points.push_back({s.at("where").get<std::string>(),
                               s.at("components").get<std::vector<std::string>>(),
                               s.at("reason").get<std::string>()});
  }
  return data;
}

Json to_json(const CompareRow& row) {
  Json j;
  j["p"] = row.p;
  j["e_max"] = row.e_max;
  j["lower"] = row.lower.str();
  j["upper"] = row.upper.str();
  j["guess"] = opt_rat(row.guess);
  j["lct"] = row.lct.str();
  j["leq"] = row.leq_holds;
  j["eq"] = row.equality_guess;
  return j;
}

CompareRow compare_row_from_json(const Json& j) {
  CompareRow row;
  row.p = j.at("p").get<std::uint64_t>();
  row.e_max = j.at("e_max").get<unsigned>();
  row.lower = rat_from(j.at("lower"));
  row.upper = rat_from(j.at("upper"));
  row.guess = opt_rat_from(j.at("guess"));
  row.lct = rat_from(j.at("lct"));
  row.leq_holds = j.at("leq").get<bool>();
  row.equality_guess = j.at("eq").get<bool>();
  return row;
}

Json to_json(const std::vector<CompareRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(r));
  return out;
}

std::string compare_csv(const std::vector<CompareRow>& rows) {
  std::ostringstream os;
  os << "p,e_max,lower,upper,guess,lct,leq,eq\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.e_max << ',' << r.lower << ',' << r.upper << ',' << (r.guess ? r.guess->str() : "")
       << ',' << r.lct << ',' << (r.leq_holds ? "true" : "false") << ','
       << (r.equality_guess ? "true" : "false") << '\n';
  }
  return os.str();
}

Json to_json(const EllipticReport& report) {
  Json j;
  j["p"] = report.p;
  j["pattern"] = pattern_name(report.pattern);
  j["nu"] = report.nu_values;
  return j;
}

EllipticReport elliptic_from_json(const Json& j) {
  return {j.at("p").get<std::uint64_t>(), pattern_from_name(j.at("pattern").get<std::string>()),
          j.at("nu").get<std::vector<std::uint64_t>>()};
}

Json to_json(const JumpReport& report) {
  Json drops = Json::array();
  for (const auto& d : report.drops) {
    drops.push_back({{"a", d.a},
                     {"c", d.c.str()},
                     {"before", d.before.basis_strings()},
                     {"after", d.after.basis_strings()}});
  }
  Json j;
  j["p"] = report.p;
  j["e"] = report.e;
  j["drops"] = drops;
  return j;
}

Json to_json(const MultInequalityReport& report) {
  Json j;
  j["mult"] = report.mult;
  j["num_vars"] = report.num_vars;
  j["lower"] = report.lower.str();
  j["upper"] = report.upper.str();
  j["ok"] = report.ok;
  return j;
}

std::string order_to_string(const MonomialOrder& order) { return order.name(); }

MonomialOrder order_from_string(const std::string& text) {
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "unknown monomial order '" + text + "'"); };
  auto open = text.find('(');
  std::string kind = text.substr(0, open);
  std::vector<std::size_t> priority;
  if (open != std::string::npos) {
    if (text.back() != ')') throw bad();
    std::istringstream in(text.substr(open + 1, text.size() - open - 2));
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        priority.push_back(std::stoul(item));
      } catch (const std::exception&) {
        throw bad();
      }
    }
  }
  if (kind == "grevlex") return {OrderKind::Grevlex, priority};
  if (kind == "lex") return MonomialOrder::lex(priority);
  throw bad();
}

}  // namespace fthresh
