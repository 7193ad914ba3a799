#include "folres/io.hpp"

#include <algorithm>
#include <set>

#include "folres/errors.hpp"

namespace folres {

namespace {

void reject_floats(const Json& j) {
    if (j.is_number_float()) throw ParseError("floating-point literals are not accepted");
    if (j.is_object() || j.is_array())
        for (const auto& item : j) reject_floats(item);
}

std::string need_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
    return j.get<std::string>();
}

Rational rat_from_json(const Json& j) {
    return rational_from_string(need_string(j, "rational literal"));
}

SingClass sing_class_from_string(const std::string& s) {
    for (SingClass c : {SingClass::Regular, SingClass::Tangency,
                        SingClass::NondegenerateNonresonant,
                        SingClass::NondegenerateResonant, SingClass::Hyperbolic,
                        SingClass::RealIrrationalUnknown, SingClass::SaddleNode,
                        SingClass::NotIrreducible})
        if (to_string(c) == s) return c;
    throw ParseError("unknown singularity class: " + s);
}

ResolutionStatus status_from_string(const std::string& s) {
    for (ResolutionStatus c : {ResolutionStatus::Resolved,
                               ResolutionStatus::BudgetExceeded,
                               ResolutionStatus::UnsupportedField})
        if (to_string(c) == s) return c;
    throw ParseError("unknown status: " + s);
}

Justification justification_from_string(const std::string& s) {
    for (Justification j : {Justification::NonzeroIndexPoint,
                            Justification::CornerPropagation,
                            Justification::DicriticalEnd,
                            Justification::ResonantFundamentalDomain})
        if (to_string(j) == s) return j;
    throw ParseError("unknown justification: " + s);
}

Json unipoly_to_json(const UniPoly& p) {
    Json out = Json::array();
    for (const Scalar& c : p.coeffs()) out.push_back(scalar_to_json(c));
    return out;
}

UniPoly unipoly_from_json(const Json& j) {
    std::vector<Scalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
    return UniPoly(coeffs);
}

Json scalar_map_to_json(const std::map<std::string, Scalar>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[k] = scalar_to_json(v);
    return out;
}

std::map<std::string, Scalar> scalar_map_from_json(const Json& j) {
    std::map<std::string, Scalar> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = scalar_from_json(it.value());
    return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    if (!s.field()) return rational_to_string(s.as_rational());
    Json out;
    Json mp = Json::array();
    for (const Rational& c : s.field()->minpoly()) mp.push_back(rational_to_string(c));
    Json co = Json::array();
    for (const Rational& c : s.coeffs()) co.push_back(rational_to_string(c));
    out["minpoly"] = mp;
    out["coeffs"] = co;
    return out;
}

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar(rat_from_json(j));
    if (!j.is_object() || !j.contains("minpoly") || !j.contains("coeffs"))
        throw ParseError("malformed scalar literal");
    std::vector<Rational> mp, co;
    for (const auto& c : j["minpoly"]) mp.push_back(rat_from_json(c));
    for (const auto& c : j["coeffs"]) co.push_back(rat_from_json(c));
    return Scalar(std::make_shared<NumberField>(mp), co);
}

Json poly_to_json(const BiPoly& p) {
    Json out = Json::object();
    for (const auto& [e, c] : p.terms())
        out[std::to_string(e.first) + "," + std::to_string(e.second)] =
            scalar_to_json(c);
    return out;
}

BiPoly poly_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("polynomial literal must be an object");
    BiPoly out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        size_t comma = key.find(',');
        if (comma == std::string::npos)
            throw ParseError("polynomial exponent key must look like \"i,j\"");
        long i, k;
        try {
            i = std::stol(key.substr(0, comma));
            k = std::stol(key.substr(comma + 1));
        } catch (const std::exception&) {
            throw ParseError("bad exponent in polynomial key: " + key);
        }
        if (i < 0 || k < 0) throw ParseError("negative exponent in polynomial key");
        out = out + BiPoly::monomial(scalar_from_json(it.value()), i, k);
    }
    return out;
}

Json point_to_json(const AlgebraicPoint& p) {
    Json out;
    out["chart"] = p.chart();
    if (p.is_explicit()) {
        out["x"] = scalar_to_json(p.x());
        out["y"] = scalar_to_json(p.y());
    } else {
        out["poly"] = unipoly_to_json(p.orbit_poly());
        out["var"] = p.orbit_var();
        out["other"] = scalar_to_json(p.orbit_other());
    }
    return out;
}

AlgebraicPoint point_from_json(const Json& j) {
    std::string chart = need_string(j.at("chart"), "chart");
    if (j.contains("poly"))
        return AlgebraicPoint::orbit(chart, unipoly_from_json(j["poly"]),
                                     j.at("var").get<int>(),
                                     scalar_from_json(j.at("other")));
    return AlgebraicPoint::exact(chart, scalar_from_json(j.at("x")),
                                 scalar_from_json(j.at("y")));
}

InputDocument input_from_json(const Json& j) {
    reject_floats(j);
    InputDocument doc;
    if (j.contains("variables")) {
        const Json& v = j["variables"];
        if (!v.is_array() || v.size() != 2)
            throw ParseError("variables must list exactly two names");
        doc.var_x = need_string(v[0], "variable");
        doc.var_y = need_string(v[1], "variable");
    }
    if (!j.contains("form") || !j["form"].is_object())
        throw ParseError("missing form object");
    doc.a = poly_from_json(j["form"].at("a"));
    doc.b = poly_from_json(j["form"].at("b"));
    if (doc.a.is_zero() && doc.b.is_zero()) throw ParseError("the zero form");
    if (j.contains("options")) {
        const Json& o = j["options"];
        if (o.contains("budget")) doc.budget = o["budget"].get<long>();
        if (o.contains("allow_extensions"))
            doc.allow_extensions = o["allow_extensions"].get<bool>();
    }
    return doc;
}

Json report_to_json(const ReportDocument& doc) {
    const ResolutionReport& r = doc.report;
    Json out;
    out["status"] = to_string(r.status);
    if (!r.error.empty()) out["error"] = r.error;
    if (r.input) {
        Json in;
        in["chart"] = r.input->chart();
        in["a"] = poly_to_json(r.input->a());
        in["b"] = poly_to_json(r.input->b());
        out["input"] = in;
    }
    Json comps = Json::array();
    for (const DivisorComponent& c : r.components) {
        Json jc;
        jc["id"] = c.id;
        jc["self_intersection"] = c.self_intersection;
        jc["dicritical"] = c.dicritical;
        jc["birth_step"] = c.birth_step;
        jc["orbit_multiplicity"] = c.orbit_multiplicity;
        jc["singularities"] = c.singularities;
        Json corners = Json::array();
        for (const auto& [nbr, pt] : c.corners) {
            Json e;
            e["with"] = nbr;
            e["at"] = point_to_json(pt);
            corners.push_back(e);
        }
        jc["corners"] = corners;
        comps.push_back(jc);
    }
    out["components"] = comps;
    Json sings = Json::array();
    for (const SingularityRecord& s : r.singularities) {
        Json js;
        js["location"] = point_to_json(s.location);
        js["class"] = to_string(s.cls);
        if (s.eig1) js["eig1"] = scalar_to_json(*s.eig1);
        if (s.eig2) js["eig2"] = scalar_to_json(*s.eig2);
        if (s.ratio) js["ratio"] = scalar_to_json(*s.ratio);
        if (s.ratio_infinite) js["ratio_infinite"] = true;
        if (s.saddle_node_order >= 0) js["saddle_node_order"] = s.saddle_node_order;
        js["indices"] = scalar_map_to_json(s.indices);
        if (!s.resonant_separatrix.empty()) {
            Json rs = Json::object();
            for (const auto& [k, v] : s.resonant_separatrix) rs[k] = v;
            js["resonant_separatrix"] = rs;
        }
        sings.push_back(js);
    }
    out["singularities"] = sings;
    Json hist = Json::array();
    for (const BlowupEvent& ev : r.history) {
        Json je;
        je["step"] = ev.step;
        je["center"] = point_to_json(ev.center);
        je["new_component"] = ev.new_component;
        je["parents"] = ev.parents;
        je["nu"] = ev.nu;
        je["dicritical"] = ev.dicritical;
        je["orbit_multiplicity"] = ev.orbit_multiplicity;
        je["index_before"] = scalar_map_to_json(ev.index_before);
        je["index_after"] = scalar_map_to_json(ev.index_after);
        hist.push_back(je);
    }
    out["history"] = hist;
    Json meta;
    meta["blowups"] = (long)r.history.size();
    out["meta"] = meta;
    if (!doc.chains.is_null()) out["chains"] = doc.chains;
    if (!doc.schedule.is_null()) out["schedule"] = doc.schedule;
    return out;
}

ReportDocument report_from_json(const Json& j) {
    reject_floats(j);
    ReportDocument doc;
    ResolutionReport& r = doc.report;
    r.status = status_from_string(need_string(j.at("status"), "status"));
    if (j.contains("error")) r.error = need_string(j["error"], "error");
    if (j.contains("input")) {
        const Json& in = j["input"];
        r.input = FoliationForm(poly_from_json(in.at("a")), poly_from_json(in.at("b")),
                                need_string(in.at("chart"), "chart"));
    }
    for (const Json& jc : j.at("components")) {
        DivisorComponent c;
        c.id = need_string(jc.at("id"), "component id");
        c.self_intersection = jc.at("self_intersection").get<long>();
        c.dicritical = jc.at("dicritical").get<bool>();
        c.birth_step = jc.at("birth_step").get<long>();
        c.orbit_multiplicity = jc.at("orbit_multiplicity").get<int>();
        c.singularities = jc.at("singularities").get<std::vector<size_t>>();
        for (const Json& e : jc.at("corners"))
            c.corners.emplace_back(need_string(e.at("with"), "corner id"),
                                   point_from_json(e.at("at")));
        r.components.push_back(std::move(c));
    }
    for (const Json& js : j.at("singularities")) {
        SingularityRecord s;
        s.location = point_from_json(js.at("location"));
        s.cls = sing_class_from_string(need_string(js.at("class"), "class"));
        if (js.contains("eig1")) s.eig1 = scalar_from_json(js["eig1"]);
        if (js.contains("eig2")) s.eig2 = scalar_from_json(js["eig2"]);
        if (js.contains("ratio")) s.ratio = scalar_from_json(js["ratio"]);
        if (js.contains("ratio_infinite")) s.ratio_infinite = js["ratio_infinite"].get<bool>();
        if (js.contains("saddle_node_order"))
            s.saddle_node_order = js["saddle_node_order"].get<long>();
        s.indices = scalar_map_from_json(js.at("indices"));
        if (js.contains("resonant_separatrix"))
            for (auto it = js["resonant_separatrix"].begin();
                 it != js["resonant_separatrix"].end(); ++it)
                s.resonant_separatrix[it.key()] = it.value().get<bool>();
        r.singularities.push_back(std::move(s));
    }
    for (const Json& je : j.at("history")) {
        BlowupEvent ev;
        ev.step = je.at("step").get<long>();
        ev.center = point_from_json(je.at("center"));
        ev.new_component = need_string(je.at("new_component"), "component id");
        ev.parents = je.at("parents").get<std::vector<std::string>>();
        ev.nu = je.at("nu").get<long>();
        ev.dicritical = je.at("dicritical").get<bool>();
        ev.orbit_multiplicity = je.at("orbit_multiplicity").get<int>();
        ev.index_before = scalar_map_from_json(je.at("index_before"));
        ev.index_after = scalar_map_from_json(je.at("index_after"));
        r.history.push_back(std::move(ev));
    }
    if (j.contains("chains")) doc.chains = j["chains"];
    if (j.contains("schedule")) doc.schedule = j["schedule"];
    return doc;
}

Json chains_section(const ResolutionReport& report) {
    Json out = Json::array();
    for (const LinearChain& ch : extract_chains(report)) {
        Json jc;
        jc["parent"] = ch.parent;
        jc["parent_dicritical"] = ch.parent_dicritical;
        jc["components"] = ch.comps;
        jc["dicritical"] = ch.dicritical;
        jc["k"] = ch.k;
        Json cs = Json::array();
        for (const Rational& c : ch.c) cs.push_back(rational_to_string(c));
        jc["c"] = cs;
        jc["n_r"] = ch.n_r;
        jc["sequence"] = chain_sequence(ch);
        Json corners = Json::array();
        for (const ChainCorner& r : ch.corner) {
            Json e;
            e["class"] = to_string(r.cls);
            if (r.sing) e["singularity"] = (long)*r.sing;
            if (r.index_low) e["index_low"] = rational_to_string(*r.index_low);
            if (r.index_high) e["index_high"] = rational_to_string(*r.index_high);
            corners.push_back(e);
        }
        jc["corners"] = corners;
        ChainVerdict v = chain_verdict(ch);
        Json jv;
        jv["tag"] = to_string(v.tag);
        if (!v.witness.empty()) jv["witness"] = v.witness;
        Json trail = Json::array();
        for (const VerdictStep& s : v.trail) {
            Json step;
            step["level"] = s.level;
            step["why"] = to_string(s.why);
            step["detail"] = s.detail;
            trail.push_back(step);
        }
        jv["trail"] = trail;
        jc["verdict"] = jv;
        out.push_back(jc);
    }
    return out;
}

Json schedule_section(const ResolutionReport& report) {
    ExtensionSchedule plan = extension_schedule(report);
    Json steps = Json::array();
    for (const ScheduleStep& s : plan.steps) {
        Json js;
        js["components"] = s.components;
        js["why"] = to_string(s.why);
        js["detail"] = s.detail;
        if (s.pre_chain_index)
            js["pre_chain_index"] = rational_to_string(*s.pre_chain_index);
        if (s.pre_parent_index)
            js["pre_parent_index"] = rational_to_string(*s.pre_parent_index);
        steps.push_back(js);
    }
    Json out;
    out["steps"] = steps;
    return out;
}

std::string to_dot(const ResolutionReport& report) {
    std::string out = "graph divisor {\n";
    for (const DivisorComponent& c : report.components) {
        out += "  \"" + c.id + "\" [label=\"" + c.id + " / " +
               std::to_string(c.self_intersection) +
               (c.dicritical ? " / dicritical" : "") + "\"];\n";
    }
    std::set<std::pair<std::string, std::string>> edges;
    for (const DivisorComponent& c : report.components)
        for (const auto& [nbr, pt] : c.corners)
            edges.insert({std::min(c.id, nbr), std::max(c.id, nbr)});
    for (const auto& [a, b] : edges) out += "  \"" + a + "\" -- \"" + b + "\";\n";
    out += "}\n";
    return out;
}

Json ratfunc_to_json(const RationalFunction& f) {
    Json out;
    out["num"] = poly_to_json(f.num());
    out["den"] = poly_to_json(f.den());
    return out;
}

RationalFunction ratfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num"))
        throw ParseError("rational function literal must carry num/den");
    BiPoly num = poly_from_json(j.at("num"));
    BiPoly den = j.contains("den") ? poly_from_json(j["den"]) : BiPoly(Scalar(Rational(1)));
    if (den.is_zero()) throw DivisionByZero("zero denominator in rational function");
    return RationalFunction(num) / RationalFunction(den);
}

Json oneform_to_json(const OneForm& w) {
    Json out;
    out["dx"] = ratfunc_to_json(w.p);
    out["dy"] = ratfunc_to_json(w.q);
    return out;
}

OneForm oneform_from_json(const Json& j) {
    return {ratfunc_from_json(j.at("dx")), ratfunc_from_json(j.at("dy"))};
}

Json triple_to_json(const ProjectiveTriple& t) {
    Json out;
    out["Omega"] = oneform_to_json(t.Omega);
    out["eta"] = oneform_to_json(t.eta);
    out["xi"] = oneform_to_json(t.xi);
    return out;
}

ProjectiveTriple triple_from_json(const Json& j) {
    reject_floats(j);
    ProjectiveTriple t;
    t.Omega = oneform_from_json(j.at("Omega"));
    t.eta = oneform_from_json(j.at("eta"));
    t.xi = oneform_from_json(j.at("xi"));
    if (t.Omega.is_zero()) throw ParseError("Omega must not vanish");
    return t;
}

}  // namespace folres
