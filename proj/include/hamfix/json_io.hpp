#pragma once

#include "hamfix/dh.hpp"
#include "hamfix/fano6.hpp"
#include "hamfix/fixed_data.hpp"
#include "hamfix/graph.hpp"
#include "hamfix/polynomial.hpp"
#include "hamfix/rational.hpp"
#include "hamfix/report.hpp"
#include "hamfix/toric.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hamfix {

using Json = nlohmann::json;

// Readers throw StructuralError on anything outside the schema: unknown keys,
// floats, wrong types.
Rational rational_from_json(const Json& j);
FixedPointData fixed_point_data_from_json(const Json& j);
LatticePolytope polytope_from_json(const Json& j);

struct SuiteRequest {
    FixedPointData data;
    std::optional<std::vector<std::string>> cycle;
};
SuiteRequest suite_request_from_json(const Json& j);

enum class PayloadKind { fixed_point_data, polytope, suite_request };

struct Document {
    PayloadKind kind;
    Json payload;
};

// Accepts {"schema_version": "1", "<kind>": payload} or a bare payload.
Document parse_document(const Json& j);
Json load_json_file(const std::string& path);

// Rationals are written as strings, "p" or "p/q".
Json to_json(const Rational& r);
Json to_json(const FixedPointData& d);
Json to_json(const LatticePolytope& p);
Json to_json(const Report& r);
Json to_json(const Polynomial& p);
Json to_json(const PiecewisePolynomial& f);
Json to_json(const LabelledGraph& g);
Json to_json(const Chain& c);
Json wrap_document(PayloadKind kind, Json payload);

}  // namespace hamfix
