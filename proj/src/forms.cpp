#include "folres/forms.hpp"

#include "folres/errors.hpp"

namespace folres {

std::string OneForm::to_string(const std::string& xv, const std::string& yv) const {
    if (is_zero()) return "0";
    std::string s;
    if (!p.is_zero()) s += "(" + p.to_string(xv, yv) + ") d" + xv;
    if (!q.is_zero()) {
        if (!s.empty()) s += " + ";
        s += "(" + q.to_string(xv, yv) + ") d" + yv;
    }
    return s;
}

PolyMap PolyMap::identity() {
    return {BiPoly::var_x(), BiPoly::var_y()};
}

PolyMap PolyMap::blowup_chart1() {
    return {BiPoly::var_x(), BiPoly::var_y() * BiPoly::var_x()};
}

PolyMap PolyMap::blowup_chart2() {
    return {BiPoly::var_x() * BiPoly::var_y(), BiPoly::var_y()};
}

PolyMap PolyMap::then(const PolyMap& outer) const {
    return {outer.fx.compose(fx, fy), outer.fy.compose(fx, fy)};
}

TwoForm exterior_derivative(const OneForm& w) {
    return TwoForm(w.q.derivative(0) - w.p.derivative(1));
}

TwoForm wedge(const OneForm& a, const OneForm& b) {
    return TwoForm(a.p * b.q - a.q * b.p);
}

OneForm pullback(const OneForm& w, const PolyMap& m) {
    RationalFunction pm = w.p.compose(m.fx, m.fy);
    RationalFunction qm = w.q.compose(m.fx, m.fy);
    RationalFunction dxs(m.fx.derivative(0)), dxt(m.fx.derivative(1));
    RationalFunction dys(m.fy.derivative(0)), dyt(m.fy.derivative(1));
    return {pm * dxs + qm * dys, pm * dxt + qm * dyt};
}

OneForm dlog(const RationalFunction& f) {
    if (f.is_zero()) throw DivisionByZero("dlog of zero");
    return {f.derivative(0) / f, f.derivative(1) / f};
}

std::pair<long, OneForm> divide_out(const OneForm& w, const BiPoly& f) {
    if (!w.is_polynomial())
        throw DivisionByZero("divide_out needs polynomial coefficients");
    if (w.is_zero() || f.is_constant()) return {0, w};
    BiPoly p = w.p.num(), q = w.q.num();
    Scalar dp = w.p.den().leading_coeff(), dq = w.q.den().leading_coeff();
    p = p * BiPoly(dp.inverse());
    q = q * BiPoly(dq.inverse());
    long k = 0;
    while (true) {
        auto qp = p.is_zero() ? std::make_pair(p, true) : p.divide_exact(f);
        auto qq = q.is_zero() ? std::make_pair(q, true) : q.divide_exact(f);
        if (!qp.second || !qq.second) break;
        p = qp.first;
        q = qq.first;
        ++k;
    }
    return {k, OneForm(RationalFunction(p), RationalFunction(q))};
}

}  // namespace folres
