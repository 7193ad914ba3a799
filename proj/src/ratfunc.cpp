#include "folres/ratfunc.hpp"

#include "folres/errors.hpp"

namespace folres {

RationalFunction::RationalFunction(const BiPoly& num, const BiPoly& den)
    : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    FieldPtr f = merge_fields(num_.field(), den_.field());
    num_ = num_.lift_to(f);
    den_ = den_.lift_to(f);
    if (num_.is_zero()) {
        den_ = BiPoly(Scalar(Rational(1))).lift_to(f);
        return;
    }
    BiPoly g = gcd(num_, den_);
    if (!g.is_constant()) {
        auto qn = num_.divide_exact(g);
        auto qd = den_.divide_exact(g);
        if (!qn.second || !qd.second)
            throw DivisionByZero("gcd failed to divide its arguments");
        num_ = qn.first;
        den_ = qd.first;
    }
    Scalar lc = den_.leading_coeff();
    Scalar inv = lc.inverse();
    num_ = num_ * BiPoly(inv);
    den_ = den_ * BiPoly(inv);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    BiPoly g = gcd(den_, o.den_);
    if (g.is_constant())
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    BiPoly da = den_.divide_exact(g).first;
    BiPoly db = o.den_.divide_exact(g).first;
    return RationalFunction(num_ * db + o.num_ * da, den_ * db);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    BiPoly g1 = gcd(num_, o.den_);
    BiPoly g2 = gcd(o.num_, den_);
    BiPoly na = g1.is_constant() ? num_ : num_.divide_exact(g1).first;
    BiPoly db = g1.is_constant() ? o.den_ : o.den_.divide_exact(g1).first;
    BiPoly nb = g2.is_constant() ? o.num_ : o.num_.divide_exact(g2).first;
    BiPoly da = g2.is_constant() ? den_ : den_.divide_exact(g2).first;
    return RationalFunction(na * nb, da * db);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DivisionByZero("division by zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

RationalFunction RationalFunction::derivative(int var) const {
    if (is_polynomial()) {
        RationalFunction r;
        r.num_ = num_.derivative(var);
        r.den_ = den_;
        if (r.num_.is_zero()) r.den_ = BiPoly(Scalar(Rational(1))).lift_to(den_.field());
        return r;
    }
    // With den = g*d1 and den' = g*w for g = gcd(den, den'), the quotient rule
    // gives (num'*d1 - num*w) / (den*d1), keeping the reduction small.
    BiPoly dd = den_.derivative(var);
    BiPoly g = gcd(den_, dd);
    BiPoly d1 = den_.divide_exact(g).first;
    BiPoly w = dd.divide_exact(g).first;
    return RationalFunction(num_.derivative(var) * d1 - num_ * w, den_ * d1);
}

RationalFunction RationalFunction::compose(const BiPoly& fx, const BiPoly& fy) const {
    BiPoly d = den_.compose(fx, fy);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
    return RationalFunction(num_.compose(fx, fy), d);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return RationalFunction(Rational(1));
    if (e < 0) {
        if (is_zero()) throw DivisionByZero("zero to a negative power");
        return RationalFunction(den_, num_).pow(-e);
    }
    RationalFunction r;
    r.num_ = num_.pow(e);
    r.den_ = den_.pow(e);
    return r;
}

RationalFunction RationalFunction::lift_to(const FieldPtr& f) const {
    RationalFunction r;
    r.num_ = num_.lift_to(f);
    r.den_ = den_.lift_to(f);
    return r;
}

std::string RationalFunction::to_string(const std::string& xv, const std::string& yv) const {
    if (is_polynomial()) return num_.to_string(xv, yv);
    return "(" + num_.to_string(xv, yv) + ")/(" + den_.to_string(xv, yv) + ")";
}

}  // namespace folres
