#pragma once

// JSON (and CSV for comparison rows) forms of the computed records.
// Rationals are written as strings "n" or "n/d"; polynomials in canonical form.

#include <string>
#include <vector>

#include <json.hpp>

#include "fthresh/compare.hpp"
#include "fthresh/frobenius.hpp"
#include "fthresh/groebner.hpp"
#include "fthresh/resolution.hpp"
#include "fthresh/test_ideal.hpp"

namespace fthresh {

using Json = nlohmann::ordered_json;

Json to_json(const NuTable& table);
NuTable nu_table_from_json(const Json& j);

Json to_json(const Ideal& ideal);
Ideal ideal_from_json(const Json& j);

Json to_json(const ResolutionData& data);
ResolutionData resolution_from_json(const Json& j);

Json to_json(const CompareRow& row);
CompareRow compare_row_from_json(const Json& j);
Json to_json(const std::vector<CompareRow>& rows);

/// Header `p,e_max,lower,upper,guess,lct,leq,eq`, one line per row.
std::string compare_csv(const std::vector<CompareRow>& rows);

Json to_json(const EllipticReport& report);
EllipticReport elliptic_from_json(const Json& j);

Json to_json(const JumpReport& report);
Json to_json(const MultInequalityReport& report);

std::string order_to_string(const MonomialOrder& order);
/// Inverse of MonomialOrder::name(): "grevlex", "lex", "lex(2,0,1)".
MonomialOrder order_from_string(const std::string& text);

}  // namespace fthresh
