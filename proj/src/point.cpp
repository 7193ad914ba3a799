#include "folres/point.hpp"

#include "folres/errors.hpp"

namespace folres {

AlgebraicPoint AlgebraicPoint::exact(std::string chart, Scalar x, Scalar y) {
    AlgebraicPoint p;
    p.chart_ = std::move(chart);
    p.explicit_ = {std::move(x), std::move(y)};
    return p;
}

AlgebraicPoint AlgebraicPoint::orbit(std::string chart, UniPoly f, int var, Scalar other) {
    if (f.degree() < 1) throw ParseError("orbit polynomial must be nonconstant");
    if (f.degree() == 1) {
        // a rational (in-field) root: store explicitly
        Scalar root = -(f.coeffs()[0] / f.coeffs()[1]);
        if (var == 0) return exact(std::move(chart), root, std::move(other));
        return exact(std::move(chart), std::move(other), root);
    }
    AlgebraicPoint p;
    p.chart_ = std::move(chart);
    p.orbit_poly_ = f.monic();
    p.orbit_var_ = var;
    p.other_ = std::move(other);
    return p;
}

int AlgebraicPoint::orbit_size() const {
    return is_explicit() ? 1 : orbit_poly_.degree();
}

std::string AlgebraicPoint::to_string() const {
    if (is_explicit())
        return chart_ + ":(" + x().to_string() + ", " + y().to_string() + ")";
    std::string v = orbit_var_ == 0 ? "x" : "y";
    std::string o = orbit_var_ == 0 ? "y" : "x";
    return chart_ + ":(" + v + " root of " + orbit_poly_.to_string(v) + ", " + o + " = " +
           other_.to_string() + ")";
}

PointEmbedding embed_point(const AlgebraicPoint& pt, const FieldPtr& base) {
    if (pt.is_explicit()) {
        FieldPtr f = merge_fields(base, merge_fields(pt.x().field(), pt.y().field()));
        return {f, pt.x().lift_to(f), pt.y().lift_to(f)};
    }
    const UniPoly& m = pt.orbit_poly();
    if (base || m.field())
        throw UnsupportedField("nested field extension required for orbit point");
    std::vector<Rational> mp;
    for (const auto& c : m.coeffs()) mp.push_back(c.as_rational());
    auto field = std::make_shared<const NumberField>(std::move(mp), "z");
    Scalar root = Scalar::generator(field);
    Scalar other = pt.orbit_other().lift_to(field);
    if (pt.orbit_var() == 0) return {field, root, other};
    return {field, other, root};
}

BiPoly translate_to_origin(const BiPoly& p, const AlgebraicPoint& pt) {
    PointEmbedding e = embed_point(pt, p.field());
    return p.lift_to(e.field).translated(e.x, e.y);
}

namespace {

std::optional<Rational> sqrt_rational(const Rational& r) {
    if (r < 0) return std::nullopt;
    Integer n = boost::multiprecision::numerator(r);
    Integer d = boost::multiprecision::denominator(r);
    Integer sn = boost::multiprecision::sqrt(n);
    Integer sd = boost::multiprecision::sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace

std::optional<Scalar> sqrt_in_field(const Scalar& s) {
    if (!s.field()) {
        auto r = sqrt_rational(s.as_rational());
        if (!r) return std::nullopt;
        return Scalar(*r);
    }
    const FieldPtr& f = s.field();
    if (f->degree() != 2) return std::nullopt;
    // minpoly z^2 + c1 z + c0; seek (p + q z)^2 = D0 + D1 z
    Rational c0 = f->minpoly()[0], c1 = f->minpoly()[1];
    Rational D0 = s.coeffs()[0], D1 = s.coeffs().size() > 1 ? s.coeffs()[1] : Rational(0);
    // (p + qz)^2 = p^2 - c0 q^2 + q(2p - c1 q) z
    if (D1 == 0) {
        if (auto p = sqrt_rational(D0)) return Scalar(f, {*p, Rational(0)});
        // p = c1 q / 2, then D0 = (c1^2/4 - c0) q^2
        Rational k = c1 * c1 / 4 - c0;
        if (k != 0) {
            if (auto q2 = sqrt_rational(D0 / k)) {
                Rational q = *q2;
                return Scalar(f, {c1 * q / 2, q});
            }
        }
        return std::nullopt;
    }
    // q != 0; p = (D1/q + c1 q)/2; substituting into D0 and clearing 4 q^2:
    // (c1^2 - 4 c0) u^2 + (2 c1 D1 - 4 D0) u + D1^2 = 0 with u = q^2.
    Rational A = c1 * c1 - 4 * c0;
    Rational B = 2 * c1 * D1 - 4 * D0;
    Rational C = D1 * D1;
    // A != 0 since the minimal polynomial is irreducible over Q
    Rational disc = B * B - 4 * A * C;
    auto sd = sqrt_rational(disc);
    if (!sd) return std::nullopt;
    for (int sign : {1, -1}) {
        Rational u = (-B + sign * *sd) / (2 * A);
        auto q = sqrt_rational(u);
        if (!q || *q == 0) continue;
        Rational p = (D1 / *q + c1 * *q) / 2;
        Scalar cand(f, {p, *q});
        if (cand * cand == s) return cand;
    }
    return std::nullopt;
}

}  // namespace folres
