#pragma once

#include <json.hpp>

#include "folres/chains.hpp"
#include "folres/triples.hpp"

namespace folres {

using Json = nlohmann::ordered_json;

// Scalars travel as "num/den" strings; extension elements carry their
// minimal polynomial alongside the power-basis coordinates.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"i,j": "num/den", ...}
Json poly_to_json(const BiPoly& p);
BiPoly poly_from_json(const Json& j);

Json point_to_json(const AlgebraicPoint& p);
AlgebraicPoint point_from_json(const Json& j);

struct InputDocument {
    std::string var_x = "x", var_y = "y";
    BiPoly a, b;
    long budget = 64;
    bool allow_extensions = true;
};
InputDocument input_from_json(const Json& j);

// A report plus the optional analysis sections appended by the chain
// commands; unknown content is never invented, absent sections stay absent.
struct ReportDocument {
    ResolutionReport report;
    Json chains;    // null until cmd chains/verdict fills it
    Json schedule;  // null until cmd schedule fills it
};

Json report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const Json& j);

Json chains_section(const ResolutionReport& report);
Json schedule_section(const ResolutionReport& report);

std::string to_dot(const ResolutionReport& report);

Json ratfunc_to_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const Json& j);
Json oneform_to_json(const OneForm& w);
OneForm oneform_from_json(const Json& j);
Json triple_to_json(const ProjectiveTriple& t);
ProjectiveTriple triple_from_json(const Json& j);

}  // namespace folres
