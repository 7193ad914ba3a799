#include "folres/foliation.hpp"

#include "folres/errors.hpp"

namespace folres {

std::string to_string(SingClass c) {
    switch (c) {
        case SingClass::Regular: return "Regular";
        case SingClass::Tangency: return "Tangency";
        case SingClass::NondegenerateNonresonant: return "NondegenerateNonresonant";
        case SingClass::NondegenerateResonant: return "NondegenerateResonant";
        case SingClass::Hyperbolic: return "Hyperbolic";
        case SingClass::RealIrrationalUnknown: return "RealIrrationalUnknown";
        case SingClass::SaddleNode: return "SaddleNode";
        case SingClass::NotIrreducible: return "NotIrreducible";
    }
    return "?";
}

FoliationForm::FoliationForm(BiPoly a, BiPoly b, std::string chart)
    : a_(std::move(a)), b_(std::move(b)), divided_(Scalar(Rational(1))), chart_(std::move(chart)) {
    if (a_.is_zero() && b_.is_zero())
        throw ParseError("foliation form with both coefficients zero");
    FieldPtr f = merge_fields(a_.field(), b_.field());
    a_ = a_.lift_to(f);
    b_ = b_.lift_to(f);
    BiPoly g = a_.is_zero() ? b_.canonical() : b_.is_zero() ? a_.canonical() : gcd(a_, b_);
    if (!g.is_constant()) {
        a_ = a_.divide_exact(g).first;
        b_ = b_.divide_exact(g).first;
        divided_ = g;
    }
}

long FoliationForm::multiplicity() const {
    long ma = a_.multiplicity(), mb = b_.multiplicity();
    if (ma < 0) return mb;
    if (mb < 0) return ma;
    return std::min(ma, mb);
}

bool FoliationForm::singular_at_origin() const {
    return a_.coeff(0, 0).is_zero() && b_.coeff(0, 0).is_zero();
}

FoliationForm FoliationForm::translated(const Scalar& x0, const Scalar& y0) const {
    return FoliationForm(a_.translated(x0, y0), b_.translated(x0, y0), chart_);
}

FoliationForm FoliationForm::lift_to(const FieldPtr& f) const {
    return FoliationForm(a_.lift_to(f), b_.lift_to(f), chart_);
}

std::string FoliationForm::to_string() const {
    return form().to_string();
}

bool is_invariant(const FoliationForm& F, const BiPoly& curve) {
    if (curve.is_zero()) throw ParseError("invariance test against the zero curve");
    // dx^dy coefficient of w ^ d(curve)
    BiPoly c = F.a() * curve.derivative(1) - F.b() * curve.derivative(0);
    if (c.is_zero()) return true;
    return c.divide_exact(curve.lift_to(c.field())).second;
}

namespace {

// Product of the conjugates of s over Q; rational for degree <= 2 fields.
std::optional<Rational> field_norm(const Scalar& s) {
    if (s.is_rational()) return s.as_rational();
    const FieldPtr& f = s.field();
    if (f->degree() != 2) return std::nullopt;
    Rational c0 = f->minpoly()[0], c1 = f->minpoly()[1];
    Rational p = s.coeffs()[0], q = s.coeffs().size() > 1 ? s.coeffs()[1] : Rational(0);
    // conjugate of z is -c1 - z; (p + qz)(p - q c1 - qz) = p^2 - pqc1 + q^2 c0
    return p * p - p * q * c1 + q * q * c0;
}

// t = (vanishing order along the strong axis of the dx-coefficient) - 1 after
// a linear change putting the nonzero eigendirection on the x-axis and the
// zero eigendirection on the y-axis.
long saddle_node_order(const FoliationForm& F, const Scalar& j11, const Scalar& j12,
                       const Scalar& j21, const Scalar& j22, const Scalar& tr) {
    auto kernel_vec = [](const Scalar& r11, const Scalar& r12, const Scalar& r21,
                         const Scalar& r22) -> std::pair<Scalar, Scalar> {
        if (!r11.is_zero() || !r12.is_zero()) return {r12, -r11};
        return {r22, -r21};
    };
    auto v1 = kernel_vec(j11 - tr, j12, j21, j22 - tr);  // eigenvalue tr
    auto v0 = kernel_vec(j11, j12, j21, j22);            // eigenvalue 0
    BiPoly X = BiPoly::var_x(), Y = BiPoly::var_y();
    PolyMap lin{X * v1.first + Y * v0.first, X * v1.second + Y * v0.second};
    OneForm w = pullback(F.form(), lin);
    UniPoly ax = w.p.num().restrict_to_axis(0);  // dx-coefficient at x = 0
    if (ax.is_zero()) return -1;
    for (int i = 0; i <= ax.degree(); ++i)
        if (!ax.coeff(i).is_zero()) return i - 1;
    return -1;
}

}  // namespace

SingularityRecord classify(const FoliationForm& F) {
    SingularityRecord rec;
    rec.location = AlgebraicPoint::exact(F.chart(), Scalar(Rational(0)), Scalar(Rational(0)));
    if (!F.singular_at_origin()) {
        rec.cls = SingClass::Regular;
        return rec;
    }
    // linear part of X = (-b, a)
    Scalar j11 = -F.b().coeff(1, 0), j12 = -F.b().coeff(0, 1);
    Scalar j21 = F.a().coeff(1, 0), j22 = F.a().coeff(0, 1);
    Scalar tr = j11 + j22;
    Scalar det = j11 * j22 - j12 * j21;
    Scalar two(Rational(2)), four(Rational(4));
    if (det.is_zero()) {
        if (tr.is_zero()) {
            rec.cls = SingClass::NotIrreducible;
            return rec;
        }
        rec.cls = SingClass::SaddleNode;
        rec.eig1 = tr;
        rec.eig2 = Scalar(Rational(0)).lift_to(tr.field());
        rec.ratio_infinite = true;
        rec.saddle_node_order = saddle_node_order(F, j11, j12, j21, j22, tr);
        return rec;
    }
    Scalar delta = tr * tr - det * four;
    auto sq = sqrt_in_field(delta);
    if (sq) {
        rec.eig1 = (tr + *sq) / two;
        rec.eig2 = (tr - *sq) / two;
        rec.ratio = *rec.eig1 / *rec.eig2;
    } else if (tr.is_zero()) {
        rec.ratio = Scalar(Rational(-1)).lift_to(tr.field());
    }
    if (rec.ratio && rec.ratio->is_rational()) {
        rec.cls = sign(rec.ratio->as_rational()) > 0 ? SingClass::NotIrreducible
                                                     : SingClass::NondegenerateResonant;
        return rec;
    }
    // ratio is irrational (possibly outside the active field): irreducible;
    // Hyperbolic only under a certificate of non-real eigenvalue ratio
    if (rec.ratio) {
        Rational t_r = rec.ratio->trace();
        auto n_r = field_norm(*rec.ratio);
        if (n_r && t_r * t_r - 4 * *n_r < 0) {
            rec.cls = SingClass::Hyperbolic;
            return rec;
        }
        rec.cls = SingClass::RealIrrationalUnknown;
        return rec;
    }
    if (tr.is_rational() && det.is_rational() && delta.is_rational() &&
        delta.as_rational() < 0) {
        rec.cls = SingClass::Hyperbolic;
        return rec;
    }
    rec.cls = SingClass::RealIrrationalUnknown;
    return rec;
}

Scalar cs_index(const FoliationForm& F, int sigma, const Scalar& q) {
    BiPoly axis = sigma == 0 ? BiPoly::var_x() : BiPoly::var_y();
    const BiPoly& tangential = sigma == 0 ? F.b() : F.a();  // must vanish on the axis
    const BiPoly& normal = sigma == 0 ? F.a() : F.b();
    auto [hat, ok] = tangential.divide_exact(axis.lift_to(tangential.field()));
    if (!ok) throw NotInvariant("axis is not invariant");
    UniPoly num = hat.restrict_to_axis(sigma == 0 ? 0 : 1);
    UniPoly den = normal.restrict_to_axis(sigma == 0 ? 0 : 1);
    FieldPtr f = merge_fields(F.field(), q.field());
    return -residue_at(num, den, q.lift_to(f));
}

std::vector<std::pair<AlgebraicPoint, int>> tangency_points(const FoliationForm& F,
                                                            int sigma) {
    const BiPoly& tangential = sigma == 0 ? F.b() : F.a();
    UniPoly restricted = tangential.restrict_to_axis(sigma == 0 ? 0 : 1);
    std::vector<std::pair<AlgebraicPoint, int>> out;
    if (restricted.is_zero()) throw NotInvariant("axis is invariant; no tangency locus");
    if (restricted.degree() < 1) return out;
    for (const auto& fac : factor_univariate(restricted)) {
        int var = sigma == 0 ? 1 : 0;  // the coordinate running along the axis
        out.emplace_back(
            AlgebraicPoint::orbit(F.chart(), fac.factor, var, Scalar(Rational(0))),
            fac.multiplicity);
    }
    return out;
}

}  // namespace folres
