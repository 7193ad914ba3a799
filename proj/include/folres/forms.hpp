#pragma once

#include "folres/ratfunc.hpp"

namespace folres {

// p dx + q dy with rational-function coefficients.
struct OneForm {
    RationalFunction p, q;

    OneForm() = default;
    OneForm(RationalFunction p_, RationalFunction q_) : p(std::move(p_)), q(std::move(q_)) {}

    bool is_zero() const { return p.is_zero() && q.is_zero(); }
    bool is_polynomial() const { return p.is_polynomial() && q.is_polynomial(); }

    OneForm operator-() const { return {-p, -q}; }
    OneForm operator+(const OneForm& o) const { return {p + o.p, q + o.q}; }
    OneForm operator-(const OneForm& o) const { return {p - o.p, q - o.q}; }
    OneForm operator*(const RationalFunction& f) const { return {p * f, q * f}; }
    bool operator==(const OneForm& o) const { return p == o.p && q == o.q; }
    bool operator!=(const OneForm& o) const { return !(*this == o); }

    std::string to_string(const std::string& xv = "x", const std::string& yv = "y") const;
};

// Only the dx^dy coefficient is stored; dx^dy = -dy^dx by convention.
struct TwoForm {
    RationalFunction r;

    TwoForm() = default;
    explicit TwoForm(RationalFunction r_) : r(std::move(r_)) {}

    bool is_zero() const { return r.is_zero(); }
    TwoForm operator-() const { return TwoForm(-r); }
    TwoForm operator+(const TwoForm& o) const { return TwoForm(r + o.r); }
    TwoForm operator-(const TwoForm& o) const { return TwoForm(r - o.r); }
    bool operator==(const TwoForm& o) const { return r == o.r; }
    bool operator!=(const TwoForm& o) const { return !(*this == o); }
};

// Polynomial substitution (x, y) <- (fx(s,t), fy(s,t)).
struct PolyMap {
    BiPoly fx, fy;

    static PolyMap identity();
    static PolyMap blowup_chart1();  // (x,t) -> (x, t x)
    static PolyMap blowup_chart2();  // (u,y) -> (u y, y)
    PolyMap then(const PolyMap& outer) const;  // outer after this
};

TwoForm exterior_derivative(const OneForm& w);
TwoForm wedge(const OneForm& a, const OneForm& b);
OneForm pullback(const OneForm& w, const PolyMap& m);
OneForm dlog(const RationalFunction& f);

// Largest k with f^k dividing both polynomial coefficients, and w / f^k.
std::pair<long, OneForm> divide_out(const OneForm& w, const BiPoly& f);

}  // namespace folres
