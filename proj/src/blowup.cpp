#include "folres/blowup.hpp"
#include <algorithm>

#include <deque>

#include "folres/errors.hpp"

namespace folres {

std::string to_string(ResolutionStatus s) {
    switch (s) {
        case ResolutionStatus::Resolved: return "Resolved";
        case ResolutionStatus::BudgetExceeded: return "BudgetExceeded";
        case ResolutionStatus::UnsupportedField: return "UnsupportedField";
    }
    return "?";
}

const DivisorComponent* ResolutionReport::component(const std::string& id) const {
    for (const auto& c : components)
        if (c.id == id) return &c;
    return nullptr;
}

BlowupResult blow_up(const FoliationForm& F, const std::string& chart_prefix) {
    long m = F.multiplicity();
    OneForm w = F.form();
    auto [nu1, r1] = divide_out(pullback(w, PolyMap::blowup_chart1()), BiPoly::var_x());
    auto [nu2, r2] = divide_out(pullback(w, PolyMap::blowup_chart2()), BiPoly::var_y());
    std::string prefix = chart_prefix.empty() ? F.chart() + "/" : chart_prefix;
    BlowupResult res;
    res.nu = nu1;
    res.chart1 = FoliationForm(r1.p.num(), r1.q.num(), prefix + "t");
    res.chart2 = FoliationForm(r2.p.num(), r2.q.num(), prefix + "u");
    res.dicritical = (nu1 == m + 1);
    res.center = AlgebraicPoint::exact(F.chart(), Scalar(Rational(0)), Scalar(Rational(0)));
    if (nu1 != nu2 || (!res.dicritical && nu1 != m))
        throw std::logic_error("exceptional power inconsistent with multiplicity");
    return res;
}

namespace {

struct Site {
    FoliationForm F;           // germ, point of interest at the origin
    AlgebraicPoint location;   // in the coordinates of its chart of discovery
    std::optional<std::string> comp_x, comp_y;  // components along {x=0} / {y=0}
    bool dic_x = false, dic_y = false;
};

int field_degree(const FieldPtr& f) { return f ? f->degree() : 1; }

bool tangent_to_axis(const FoliationForm& F, int sigma) {
    const BiPoly& tangential = sigma == 0 ? F.b() : F.a();
    return tangential.coeff(0, 0).is_zero();
}

struct Driver {
    ResolutionReport report;
    std::deque<Site> queue;
    long budget;
    long steps = 0;

    DivisorComponent& comp(const std::string& id) {
        for (auto& c : report.components)
            if (c.id == id) return c;
        throw std::logic_error("unknown component " + id);
    }

    bool needs_blowup(const Site& s, const SingularityRecord& rec) const {
        if (rec.cls == SingClass::NotIrreducible) return true;
        bool singular = rec.cls != SingClass::Regular;
        if (s.comp_x && s.dic_x && (singular || tangent_to_axis(s.F, 0))) return true;
        if (s.comp_y && s.dic_y && (singular || tangent_to_axis(s.F, 1))) return true;
        return false;
    }

    void record(Site& s, SingularityRecord rec) {
        bool corner = s.comp_x && s.comp_y;
        if (rec.cls == SingClass::Regular && !corner) return;
        rec.location = s.location;
        size_t idx = report.singularities.size();
        auto attach = [&](const std::optional<std::string>& c, bool dic, int sigma) {
            if (!c || dic) return;
            rec.indices[*c] = cs_index(s.F, sigma, Scalar(Rational(0)));
            if (rec.cls == SingClass::NondegenerateResonant)
                rec.resonant_separatrix[*c] = true;
            comp(*c).singularities.push_back(idx);
        };
        attach(s.comp_x, s.dic_x, 0);
        attach(s.comp_y, s.dic_y, 1);
        report.singularities.push_back(std::move(rec));
    }

    void blow_up_site(const Site& s) {
        ++steps;
        std::string nid = "E" + std::to_string(report.components.size() + 1);
        BlowupResult br = blow_up(s.F, nid + ".");
        int omult = field_degree(s.F.field());

        BlowupEvent ev;
        ev.step = steps;
        ev.center = s.location;
        ev.new_component = nid;
        ev.nu = br.nu;
        ev.dicritical = br.dicritical;
        ev.orbit_multiplicity = omult;
        long decrement = s.location.orbit_size();
        auto parent_side = [&](const std::optional<std::string>& c, bool dic, int sigma) {
            if (!c) return;
            ev.parents.push_back(*c);
            comp(*c).self_intersection -= decrement;
            if (!dic) ev.index_before[*c] = cs_index(s.F, sigma, Scalar(Rational(0)));
        };
        parent_side(s.comp_x, s.dic_x, 0);
        parent_side(s.comp_y, s.dic_y, 1);

        // blowing up a corner separates the two parents
        if (s.comp_x && s.comp_y) {
            auto drop = [&](const std::string& a, const std::string& b) {
                auto& cs = comp(a).corners;
                cs.erase(std::remove_if(
                             cs.begin(), cs.end(),
                             [&](const auto& pr) { return pr.first == b; }),
                         cs.end());
            };
            drop(*s.comp_x, *s.comp_y);
            drop(*s.comp_y, *s.comp_x);
        }

        DivisorComponent nc;
        nc.id = nid;
        nc.dicritical = br.dicritical;
        nc.birth_step = steps;
        nc.orbit_multiplicity = omult;
        report.components.push_back(nc);

        const FoliationForm& c1 = *br.chart1;
        const FoliationForm& c2 = *br.chart2;

        // corners of the new component with the strict transforms
        if (s.comp_y) {
            auto corner1 = AlgebraicPoint::exact(c1.chart(), Scalar(Rational(0)),
                                                 Scalar(Rational(0)));
            comp(nid).corners.emplace_back(*s.comp_y, corner1);
            comp(*s.comp_y).corners.emplace_back(nid, corner1);
            if (!s.dic_y)
                ev.index_after[*s.comp_y] = cs_index(c1, 1, Scalar(Rational(0)));
        }
        if (s.comp_x) {
            auto corner2 = AlgebraicPoint::exact(c2.chart(), Scalar(Rational(0)),
                                                 Scalar(Rational(0)));
            comp(nid).corners.emplace_back(*s.comp_x, corner2);
            comp(*s.comp_x).corners.emplace_back(nid, corner2);
            if (!s.dic_x)
                ev.index_after[*s.comp_x] = cs_index(c2, 0, Scalar(Rational(0)));
        }
        report.history.push_back(std::move(ev));

        // sites on the new component, chart 1: {x=0} is the new component,
        // {t=0} the strict transform of the old y-axis
        UniPoly locus = (br.dicritical ? c1.b() : c1.a()).restrict_to_axis(0);
        bool zero_is_root = false;
        if (locus.degree() >= 1) {
            for (const auto& fac : factor_univariate(locus)) {
                bool at_zero = fac.factor.degree() == 1 && fac.factor.coeffs()[0].is_zero();
                zero_is_root = zero_is_root || at_zero;
                Site ns{c1, {}, {}, {}};
                AlgebraicPoint loc =
                    AlgebraicPoint::orbit(c1.chart(), fac.factor, 1, Scalar(Rational(0)));
                PointEmbedding e = embed_point(loc, c1.field());
                ns.F = c1.lift_to(e.field).translated(e.x, e.y);
                ns.location = loc;
                ns.comp_x = nid;
                ns.dic_x = br.dicritical;
                if (at_zero && s.comp_y) {
                    ns.comp_y = s.comp_y;
                    ns.dic_y = s.dic_y;
                }
                queue.push_back(std::move(ns));
            }
        }
        if (s.comp_y && !zero_is_root) {
            // regular corner with the strict transform of the old y-axis
            Site ns{c1, AlgebraicPoint::exact(c1.chart(), Scalar(Rational(0)),
                                              Scalar(Rational(0))),
                    nid, s.comp_y, br.dicritical, s.dic_y};
            queue.push_back(std::move(ns));
        }
        // chart 2 origin: the point t = infinity of the new component
        bool c2_interesting = s.comp_x.has_value() || c2.singular_at_origin() ||
                              (br.dicritical && tangent_to_axis(c2, 1));
        if (c2_interesting) {
            Site ns{c2, AlgebraicPoint::exact(c2.chart(), Scalar(Rational(0)),
                                              Scalar(Rational(0))),
                    s.comp_x, nid, s.dic_x, br.dicritical};
            queue.push_back(std::move(ns));
        }
    }

    void run(const FoliationForm& F0, long budget_) {
        budget = budget_;
        report.input = F0;
        queue.push_back(Site{F0,
                             AlgebraicPoint::exact(F0.chart(), Scalar(Rational(0)),
                                                   Scalar(Rational(0))),
                             {}, {}});
        try {
            while (!queue.empty()) {
                Site s = std::move(queue.front());
                queue.pop_front();
                SingularityRecord rec = classify(s.F);
                // the resolution always opens with the blow-up of the germ
                bool force_first = report.components.empty();
                if (!force_first && !needs_blowup(s, rec)) {
                    record(s, std::move(rec));
                    continue;
                }
                if (steps >= budget) {
                    report.status = ResolutionStatus::BudgetExceeded;
                    return;
                }
                blow_up_site(s);
            }
            report.status = ResolutionStatus::Resolved;
        } catch (const UnsupportedField& e) {
            report.status = ResolutionStatus::UnsupportedField;
            report.error = e.what();
        }
    }
};

}  // namespace

ResolutionReport resolve(const FoliationForm& F, long budget) {
    if (!F.singular_at_origin())
        throw ParseError("resolve requires a singular germ at the origin");
    Driver d;
    d.run(F, budget);
    return d.report;
}

std::vector<ComponentVerdict> verify_index_theorem(const ResolutionReport& report) {
    std::vector<ComponentVerdict> out;
    for (const auto& c : report.components) {
        if (c.dicritical) continue;
        ComponentVerdict v;
        v.id = c.id;
        v.self_intersection = c.self_intersection;
        Scalar sum(Rational(0));
        for (size_t idx : c.singularities) {
            const SingularityRecord& r = report.singularities[idx];
            const Scalar& i = r.indices.at(c.id);
            // On a component defined over Q an index living in an extension
            // stands for a conjugate orbit of points; the trace sums them.
            if (c.orbit_multiplicity == 1)
                sum += Scalar(i.trace());
            else
                sum = sum.lift_to(i.field()) + i;
        }
        v.index_sum = sum;
        v.ok = (sum == Scalar(Rational(c.self_intersection)).lift_to(sum.field()));
        out.push_back(std::move(v));
    }
    return out;
}

bool index_theorem_holds(const ResolutionReport& report) {
    for (const auto& v : verify_index_theorem(report))
        if (!v.ok) return false;
    return true;
}

bool corner_index_drop_check(const ResolutionReport& report) {
    for (const auto& ev : report.history) {
        for (const auto& [comp, before] : ev.index_before) {
            auto it = ev.index_after.find(comp);
            if (it == ev.index_after.end()) continue;
            Scalar one = Scalar(Rational(1)).lift_to(before.field());
            if (!(it->second == before - one)) return false;
        }
    }
    return true;
}

}  // namespace folres
