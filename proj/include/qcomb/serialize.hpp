#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "qcomb/identities.hpp"
#include "qcomb/mpoly.hpp"
#include "qcomb/numbers.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

using Json = nlohmann::json;

// QPoly: ascending array of decimal strings.
// MPoly: [{"exps": [a, b, r, x], "coeff": "<decimal>"}] in graded-lex order.
// BigInt: decimal string.
Json to_json(const BigInt& v);
Json to_json(const QPoly& p);
Json to_json(const MPoly& p);
/// {"kind": "integer" | "qpoly" | "mpoly", "value": ...}
Json to_json(const Value& v);
Json to_json(const Grid& g);
Json to_json(const IdentityReport& r);
Json to_json(const FamilyRow& row);

BigInt bigint_from_json(const Json& j);
QPoly qpoly_from_json(const Json& j);
MPoly mpoly_from_json(const Json& j);
Value value_from_json(const Json& j);
Grid grid_from_json(const Json& j);
IdentityReport report_from_json(const Json& j);

/// "n,k,r,coefficients" with empty k or r for families without them.
std::string csv_header();
std::string to_csv_row(const FamilyRow& row);
std::string to_text(const FamilyRow& row);

std::string value_text(const Value& v);
/// One line, e.g. "PASS  I-SPIVEY  cells=66".
std::string summary_line(const IdentityReport& r);

} // namespace qcomb
