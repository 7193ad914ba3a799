#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "folres/forms.hpp"

using namespace folres;

namespace {

Scalar S(long n, long d = 1) { return Scalar(Rational(n, d)); }
const BiPoly X = BiPoly::var_x();
const BiPoly Y = BiPoly::var_y();

OneForm linear_model(const Scalar& lambda) {
    // x dy - lambda y dx
    return OneForm(RationalFunction(-(Y * lambda)), RationalFunction(X));
}

BiPoly rand_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    BiPoly p;
    for (long i = 0; i <= 2; ++i)
        for (long j = 0; j <= 2; ++j)
            p = p + BiPoly::monomial(S(c(rng)), i, j);
    return p;
}

}  // namespace

TEST_CASE("exterior derivative examples") {
    Scalar lam(Rational(5, 3));
    CHECK(exterior_derivative(linear_model(lam)) ==
          TwoForm(RationalFunction(S(1) + lam)));
    // closed logarithmic form dx/x + dy/y
    OneForm w(RationalFunction(BiPoly(S(1)), X), RationalFunction(BiPoly(S(1)), Y));
    CHECK(exterior_derivative(w).is_zero());
    // d(x dy - y^2 dx) = (1 + 2y) dx^dy
    OneForm sn(RationalFunction(-(Y * Y)), RationalFunction(X));
    CHECK(exterior_derivative(sn) == TwoForm(RationalFunction(BiPoly(S(1)) + Y * S(2))));
}

TEST_CASE("wedge examples") {
    OneForm logf(RationalFunction(BiPoly(S(1)), X), RationalFunction(BiPoly(S(1)), Y));
    Scalar lam(Rational(-7, 2));
    CHECK(wedge(logf, logf).is_zero());
    CHECK(wedge(logf, linear_model(lam)) == TwoForm(RationalFunction(S(1) + lam)));
    OneForm dx(RationalFunction(BiPoly(S(1))), RationalFunction());
    OneForm dy(RationalFunction(), RationalFunction(BiPoly(S(1))));
    CHECK(wedge(dx, dy) == TwoForm(RationalFunction(BiPoly(S(1)))));
}

TEST_CASE("pullback under blow-up charts") {
    // radial: x dy - y dx -> x^2 dt
    OneForm radial = linear_model(S(1));
    OneForm p1 = pullback(radial, PolyMap::blowup_chart1());
    CHECK(p1.p.is_zero());
    CHECK(p1.q == RationalFunction(X * X));
    // resonant: x dy + y dx -> 2tx dx + x^2 dt
    OneForm res{RationalFunction(Y), RationalFunction(X)};
    OneForm p2 = pullback(res, PolyMap::blowup_chart1());
    CHECK(p2.p == RationalFunction(X * Y * S(2)));
    CHECK(p2.q == RationalFunction(X * X));
    // identity
    OneForm dy(RationalFunction(), RationalFunction(BiPoly(S(1))));
    CHECK(pullback(dy, PolyMap::identity()) == dy);
}

TEST_CASE("dlog") {
    RationalFunction xy(X * Y);
    OneForm expect(RationalFunction(BiPoly(S(1)), X), RationalFunction(BiPoly(S(1)), Y));
    CHECK(dlog(xy) == expect);
    CHECK(dlog(xy.pow(-2)) == -(expect + expect));
    CHECK(dlog(RationalFunction(S(42))).is_zero());
    CHECK(dlog(xy * RationalFunction(X + Y)) ==
          dlog(xy) + dlog(RationalFunction(X + Y)));
}

TEST_CASE("divide_out") {
    OneForm radial_up(RationalFunction(), RationalFunction(X * X));
    auto [k1, r1] = divide_out(radial_up, X);
    CHECK(k1 == 2);
    CHECK(r1 == OneForm(RationalFunction(), RationalFunction(BiPoly(S(1)))));
    OneForm res_up(RationalFunction(X * Y * S(2)), RationalFunction(X * X));
    auto [k2, r2] = divide_out(res_up, X);
    CHECK(k2 == 1);
    CHECK(r2 == OneForm(RationalFunction(Y * S(2)), RationalFunction(X)));
    OneForm dy(RationalFunction(), RationalFunction(BiPoly(S(1))));
    auto [k3, r3] = divide_out(dy, X);
    CHECK(k3 == 0);
    CHECK(r3 == dy);
}

TEST_CASE("d after d vanishes on exact forms") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> c(-4, 4);
    auto small_poly = [&] {
        BiPoly p;
        for (long i = 0; i <= 2; ++i)
            for (long j = 0; j <= 1; ++j)
                p = p + BiPoly::monomial(Scalar(Rational(c(rng))), i, j);
        return p;
    };
    for (int trial = 0; trial < 20; ++trial) {
        BiPoly num = small_poly();
        BiPoly den = small_poly();
        if (den.is_zero()) continue;
        RationalFunction f(num, den);
        OneForm df(f.derivative(0), f.derivative(1));
        CHECK(exterior_derivative(df).is_zero());
    }
}

TEST_CASE("naturality of pullback") {
    std::mt19937 rng(99);
    for (auto chart : {PolyMap::blowup_chart1(), PolyMap::blowup_chart2()}) {
        for (int trial = 0; trial < 10; ++trial) {
            OneForm w(RationalFunction(rand_poly(rng)), RationalFunction(rand_poly(rng)));
            TwoForm lhs = exterior_derivative(pullback(w, chart));
            // pullback of r dx^dy under m is r(m) det(Jm) ds^dt
            TwoForm dw = exterior_derivative(w);
            RationalFunction det(chart.fx.derivative(0) * chart.fy.derivative(1) -
                                 chart.fx.derivative(1) * chart.fy.derivative(0));
            TwoForm rhs(dw.r.compose(chart.fx, chart.fy) * det);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("wedge bilinear and alternating") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        OneForm a(RationalFunction(rand_poly(rng)), RationalFunction(rand_poly(rng)));
        OneForm b(RationalFunction(rand_poly(rng)), RationalFunction(rand_poly(rng)));
        OneForm c(RationalFunction(rand_poly(rng)), RationalFunction(rand_poly(rng)));
        CHECK(wedge(a, b) == -wedge(b, a));
        CHECK(wedge(a + b, c) == wedge(a, c) + wedge(b, c));
        CHECK(wedge(a, a).is_zero());
    }
}
