#include "folres/triples.hpp"

#include "folres/errors.hpp"

namespace folres {

OneForm differential(const RationalFunction& f) {
    return {f.derivative(0), f.derivative(1)};
}

TripleVerdict verify_triple(const ProjectiveTriple& t) {
    TripleVerdict v;
    v.r1 = exterior_derivative(t.Omega) - wedge(t.eta, t.Omega);
    v.r2 = exterior_derivative(t.eta) - wedge(t.Omega, t.xi);
    v.r3 = exterior_derivative(t.xi) - wedge(t.xi, t.eta);
    v.p1 = v.r1.is_zero();
    v.p2 = v.r2.is_zero();
    v.p3 = v.r3.is_zero();
    v.affine = exterior_derivative(t.eta).is_zero() && t.xi.is_zero();
    return v;
}

ProjectiveTriple modify_triple(const ProjectiveTriple& t, const ModificationParams& p) {
    if (p.g.is_zero()) throw DivisionByZero("modification with g = 0");
    RationalFunction half(Rational(1, 2));
    ProjectiveTriple out;
    out.Omega = t.Omega * p.g;
    out.eta = t.eta + dlog(p.g) + t.Omega * p.h;
    out.xi = (t.xi - differential(p.h) - t.eta * p.h - t.Omega * (p.h * p.h * half)) *
             p.g.pow(-1);
    return out;
}

ExtractedF extract_F(const ProjectiveTriple& t1, const ProjectiveTriple& t2) {
    if (t1.Omega != t2.Omega || t1.eta != t2.eta)
        throw NotProportional("triples do not share Omega and eta");
    OneForm d = t2.xi - t1.xi;
    ExtractedF out;
    if (d.is_zero()) return out;  // F = 0
    if (t1.Omega.is_zero()) throw NotProportional("Omega vanishes");
    RationalFunction F = t1.Omega.p.is_zero() ? d.q / t1.Omega.q : d.p / t1.Omega.p;
    if (t1.Omega * F != d) throw NotProportional("xi difference is not a multiple of Omega");
    out.F = F;
    if (!F.is_zero()) {
        TwoForm lhs = exterior_derivative(t1.Omega);
        TwoForm rhs = wedge(dlog(F) * RationalFunction(Rational(-1, 2)), t1.Omega);
        out.closedness_ok = lhs == rhs;
    }
    return out;
}

namespace {

RationalFunction compose_univariate(const UniPoly& p, const RationalFunction& u) {
    RationalFunction out;
    for (size_t i = 0; i < p.coeffs().size(); ++i)
        out = out + RationalFunction(BiPoly(p.coeffs()[i])) * u.pow((long)i);
    return out;
}

}  // namespace

bool check_normal_form_identity(NormalFormCase which, const RationalFunction& g,
                                const NormalFormParams& params) {
    RationalFunction x(BiPoly::var_x()), y(BiPoly::var_y());
    OneForm dx{RationalFunction(Rational(1)), RationalFunction()};
    OneForm dy{RationalFunction(), RationalFunction(Rational(1))};
    OneForm Omega;
    RationalFunction F;
    switch (which) {
        case NormalFormCase::LinearI: {
            Omega = (dy * x - dx * (y * RationalFunction(BiPoly(params.lambda)))) * g;
            F = (g * x * y).pow(-2);
            if (params.phi) {
                RationalFunction u = x.pow(params.phi_k) * y.pow(params.phi_l);
                F = F * compose_univariate(params.phi->first, u) /
                    compose_univariate(params.phi->second, u);
            }
            break;
        }
        case NormalFormCase::SaddleNodeII: {
            RationalFunction inner =
                RationalFunction(Rational(1)) +
                x * y.pow(params.ell) * RationalFunction(BiPoly(params.c));
            Omega = (dx * y + dy * (x * inner * RationalFunction(Rational(params.ell)))) * g;
            F = (g * x.pow(2) * y.pow(params.ell + 1)).pow(-2);
            break;
        }
        case NormalFormCase::ResonantIII: {
            Omega = (dy * x - dx * (y * y)) * g;
            F = (g * x * y.pow(2)).pow(-2);
            break;
        }
    }
    TwoForm lhs = exterior_derivative(Omega);
    TwoForm rhs = wedge(dlog(F) * RationalFunction(Rational(-1, 2)), Omega);
    return lhs == rhs;
}

bool roundtrip_check(const ProjectiveTriple& t, const ModificationParams& p) {
    ProjectiveTriple fwd = modify_triple(t, p);
    ModificationParams inv{p.g.pow(-1), -(p.h / p.g)};
    ProjectiveTriple back = modify_triple(fwd, inv);
    return back.Omega == t.Omega && back.eta == t.eta && back.xi == t.xi;
}

}  // namespace folres
