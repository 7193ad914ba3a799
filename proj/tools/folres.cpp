#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "folres/errors.hpp"
#include "folres/io.hpp"

using namespace folres;

namespace {

// exit codes: 0 ok, 1 parse/check failure, 2 budget exceeded,
// 3 unsupported field, 4 report not usable, 5 not proportional
int fail(const std::string& kind, const std::string& msg, int code) {
    Json e;
    e["kind"] = kind;
    e["error"] = msg;
    std::cerr << e.dump() << "\n";
    return code;
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + ex.what());
    }
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

void emit(const std::string& out_path, const Json& doc) {
    std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
}

bool uses_extension(const ResolutionReport& rep) {
    for (const auto& ev : rep.history)
        if (ev.orbit_multiplicity > 1) return true;
    return false;
}

int cmd_resolve(const std::string& in_path, const std::string& out_path,
                const std::string& dot_path, long max_blowups, bool force_extensions) {
    InputDocument in = input_from_json(load_json(in_path));
    long budget = max_blowups > 0 ? max_blowups : in.budget;
    ResolutionReport rep = resolve(FoliationForm(in.a, in.b), budget);
    bool allow = force_extensions || in.allow_extensions;
    if (!allow && uses_extension(rep)) {
        rep.status = ResolutionStatus::UnsupportedField;
        rep.error = "resolution needs a field extension and extensions are disabled";
    }
    emit(out_path, report_to_json({rep, Json(), Json()}));
    if (!dot_path.empty()) write_file(dot_path, to_dot(rep));
    switch (rep.status) {
        case ResolutionStatus::Resolved: return 0;
        case ResolutionStatus::BudgetExceeded: return 2;
        case ResolutionStatus::UnsupportedField: return 3;
    }
    return 0;
}

int cmd_chain_analysis(const std::string& path, bool with_schedule, bool print_verdicts) {
    ReportDocument doc = report_from_json(load_json(path));
    if (doc.report.status != ResolutionStatus::Resolved)
        return fail("NotResolved", "report status is " + to_string(doc.report.status), 4);
    doc.chains = chains_section(doc.report);
    if (with_schedule) doc.schedule = schedule_section(doc.report);
    write_file(path, report_to_json(doc).dump(2) + "\n");
    if (with_schedule) {
        std::cout << doc.schedule.dump(2) << "\n";
    } else if (print_verdicts) {
        Json verdicts = Json::array();
        for (const Json& ch : doc.chains) verdicts.push_back(ch["verdict"]);
        std::cout << verdicts.dump(2) << "\n";
    } else {
        std::cout << doc.chains.dump(2) << "\n";
    }
    return 0;
}

int cmd_triple_check(const std::string& path) {
    TripleVerdict v = verify_triple(triple_from_json(load_json(path)));
    Json out;
    out["P1"] = v.p1;
    out["P2"] = v.p2;
    out["P3"] = v.p3;
    out["affine"] = v.affine;
    if (!v.p1) out["residual_P1"] = ratfunc_to_json(v.r1.r);
    if (!v.p2) out["residual_P2"] = ratfunc_to_json(v.r2.r);
    if (!v.p3) out["residual_P3"] = ratfunc_to_json(v.r3.r);
    std::cout << out.dump(2) << "\n";
    return v.pass() ? 0 : 1;
}

int cmd_triple_modify(const std::string& path, const std::string& params_path,
                      const std::string& out_path) {
    ProjectiveTriple t = triple_from_json(load_json(path));
    Json pj = load_json(params_path);
    ModificationParams p;
    p.g = ratfunc_from_json(pj.at("g"));
    p.h = pj.contains("h") ? ratfunc_from_json(pj["h"]) : RationalFunction();
    emit(out_path, triple_to_json(modify_triple(t, p)));
    return 0;
}

int cmd_triple_compare(const std::string& path1, const std::string& path2) {
    ProjectiveTriple t1 = triple_from_json(load_json(path1));
    ProjectiveTriple t2 = triple_from_json(load_json(path2));
    ExtractedF got = extract_F(t1, t2);
    Json out;
    out["F"] = ratfunc_to_json(got.F);
    out["closedness_ok"] = got.closedness_ok;
    std::cout << out.dump(2) << "\n";
    return got.closedness_ok ? 0 : 1;
}

int cmd_triple_normal_form(const std::string& which, const std::string& lambda,
                           long ell, const std::string& c, const std::string& g_path) {
    NormalFormCase nfc;
    if (which == "i")
        nfc = NormalFormCase::LinearI;
    else if (which == "ii")
        nfc = NormalFormCase::SaddleNodeII;
    else if (which == "iii")
        nfc = NormalFormCase::ResonantIII;
    else
        throw ParseError("case must be one of i, ii, iii");
    NormalFormParams params;
    params.lambda = Scalar(rational_from_string(lambda));
    params.ell = ell;
    params.c = Scalar(rational_from_string(c));
    RationalFunction g(Rational(1));
    if (!g_path.empty()) g = ratfunc_from_json(load_json(g_path));
    bool ok = check_normal_form_identity(nfc, g, params);
    Json out;
    out["case"] = which;
    out["identity_holds"] = ok;
    std::cout << out.dump(2) << "\n";
    return ok ? 0 : 1;
}

int cmd_aseq(int depth) {
    for (const ASequence& s : generate_A(depth)) {
        Rational v = continued_fraction(s.tail());
        std::cout << s.to_string() << "  value=" << rational_to_string(v)
                  << "  identity=" << (check_lemma1(s) ? "pass" : "FAIL")
                  << "  inequalities=" << (check_lemma2(s) ? "pass" : "FAIL") << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact resolution of plane foliation singularities"};
    app.require_subcommand(1);

    std::string in_path, out_path, dot_path;
    long max_blowups = 0;
    bool allow_ext = false;
    auto* resolve_cmd = app.add_subcommand("resolve", "resolve the singularity of a 1-form");
    resolve_cmd->add_option("input", in_path)->required();
    resolve_cmd->add_option("--out", out_path);
    resolve_cmd->add_option("--dot", dot_path);
    resolve_cmd->add_option("--max-blowups", max_blowups);
    resolve_cmd->add_flag("--allow-extensions", allow_ext);

    std::string report_path;
    auto* chains_cmd = app.add_subcommand("chains", "extract the linear chains");
    chains_cmd->add_option("report", report_path)->required();
    auto* verdict_cmd = app.add_subcommand("verdict", "chain extension verdicts");
    verdict_cmd->add_option("report", report_path)->required();
    auto* schedule_cmd = app.add_subcommand("schedule", "extension schedule");
    schedule_cmd->add_option("report", report_path)->required();

    auto* triple_cmd = app.add_subcommand("triple", "projective-triple operations");
    triple_cmd->require_subcommand(1);
    std::string t1, t2, params_path, nf_case, lambda = "-1/2", cconst = "1";
    long ell = 1;
    auto* check_cmd = triple_cmd->add_subcommand("check", "verify the axioms");
    check_cmd->add_option("triple", t1)->required();
    auto* modify_cmd = triple_cmd->add_subcommand("modify", "apply a (g, h) modification");
    modify_cmd->add_option("triple", t1)->required();
    modify_cmd->add_option("--params", params_path)->required();
    modify_cmd->add_option("--out", out_path);
    auto* compare_cmd = triple_cmd->add_subcommand("compare", "extract the xi multiplier");
    compare_cmd->add_option("first", t1)->required();
    compare_cmd->add_option("second", t2)->required();
    std::string g_path;
    auto* nf_cmd = triple_cmd->add_subcommand("normal-form", "check a normal-form identity");
    nf_cmd->add_option("--case", nf_case)->required();
    nf_cmd->add_option("--lambda", lambda);
    nf_cmd->add_option("--ell", ell);
    nf_cmd->add_option("--c", cconst);
    nf_cmd->add_option("--g", g_path);

    int depth = 0;
    auto* aseq_cmd = app.add_subcommand("aseq", "list the sequence family");
    aseq_cmd->add_option("--depth", depth)->required()->check(CLI::Range(0, 8));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*resolve_cmd)
            return cmd_resolve(in_path, out_path, dot_path, max_blowups, allow_ext);
        if (*chains_cmd) return cmd_chain_analysis(report_path, false, false);
        if (*verdict_cmd) return cmd_chain_analysis(report_path, false, true);
        if (*schedule_cmd) return cmd_chain_analysis(report_path, true, false);
        if (*check_cmd) return cmd_triple_check(t1);
        if (*modify_cmd) return cmd_triple_modify(t1, params_path, out_path);
        if (*compare_cmd) return cmd_triple_compare(t1, t2);
        if (*nf_cmd) return cmd_triple_normal_form(nf_case, lambda, ell, cconst, g_path);
        if (*aseq_cmd) return cmd_aseq(depth);
    } catch (const ParseError& e) {
        return fail("ParseError", e.what(), 1);
    } catch (const UnsupportedField& e) {
        return fail("UnsupportedField", e.what(), 3);
    } catch (const NotProportional& e) {
        return fail("NotProportional", e.what(), 5);
    } catch (const ScheduleIncomplete& e) {
        return fail("ScheduleIncomplete", e.what(), 4);
    } catch (const MissingIndex& e) {
        return fail("MissingIndex", e.what(), 4);
    } catch (const std::exception& e) {
        return fail("Error", e.what(), 1);
    }
    return 0;
}
