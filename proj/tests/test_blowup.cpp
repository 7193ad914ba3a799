#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "folres/blowup.hpp"
#include "folres/errors.hpp"

using namespace folres;

namespace {

Scalar S(long n, long d = 1) { return Scalar(Rational(n, d)); }
const BiPoly X = BiPoly::var_x();
const BiPoly Y = BiPoly::var_y();

FoliationForm linear_model(const Scalar& lam) {
    return FoliationForm(-(Y * lam), X);
}

FoliationForm cusp() {
    // 2y dy - 3x^2 dx, the level form of y^2 - x^3
    return FoliationForm(X * X * S(-3), Y * S(2));
}

// Substitute rational functions into a polynomial (used only as a test oracle).
RationalFunction eval_rf(const BiPoly& p, const RationalFunction& fx,
                         const RationalFunction& fy) {
    RationalFunction out;
    for (const auto& [e, c] : p.terms())
        out = out + RationalFunction(BiPoly(c)) * fx.pow(e.first) * fy.pow(e.second);
    return out;
}

// On the overlap t = 1/u, y = tx the two charts must describe one foliation:
// transporting chart1's form to (u, y) coordinates must give a form
// proportional to chart2's.
bool charts_coherent(const BlowupResult& br) {
    RationalFunction u(X), y(Y);
    RationalFunction xc = u * y;       // x = u y
    RationalFunction tc = u.pow(-1);   // t = 1/u
    RationalFunction a1 = eval_rf(br.chart1->a(), xc, tc);
    RationalFunction b1 = eval_rf(br.chart1->b(), xc, tc);
    // dx = y du + u dy, dt = -du/u^2
    RationalFunction du = a1 * y - b1 * u.pow(-2);
    RationalFunction dy = a1 * u;
    return du * RationalFunction(br.chart2->b()) == dy * RationalFunction(br.chart2->a());
}

}  // namespace

TEST_CASE("single blow-up examples") {
    {
        BlowupResult br = blow_up(linear_model(S(1)));  // radial
        CHECK(br.nu == 2);
        CHECK(br.dicritical);
        CHECK(br.chart1->a().is_zero());
        CHECK(br.chart1->b() == BiPoly(S(1)));  // dt
    }
    {
        BlowupResult br = blow_up(FoliationForm(Y, X));  // x dy + y dx
        CHECK(br.nu == 1);
        CHECK(!br.dicritical);
        CHECK(br.chart1->a() == Y * S(2));  // 2t dx + x dt
        CHECK(br.chart1->b() == X);
        SingularityRecord r = classify(*br.chart1);
        CHECK(r.cls == SingClass::NondegenerateResonant);
    }
    {
        BlowupResult br = blow_up(cusp());
        CHECK(br.nu == 1);
        CHECK(!br.dicritical);
        // unique divisor singularity at (x,t) = (0,0), still reducible
        CHECK(br.chart1->a() == Y * Y * S(2) - X * S(3));
        CHECK(br.chart1->b() == X * Y * S(2));
        CHECK(classify(*br.chart1).cls == SingClass::NotIrreducible);
    }
}

TEST_CASE("chart coherence") {
    std::vector<FoliationForm> germs = {
        linear_model(S(1)),  linear_model(S(-1)),      linear_model(S(2, 3)),
        cusp(),              FoliationForm(-(Y * Y), X), FoliationForm(X, Y - X),
    };
    for (const auto& g : germs) CHECK(charts_coherent(blow_up(g)));
}

TEST_CASE("resolution of the resonant linear model") {
    ResolutionReport rep = resolve(FoliationForm(Y, X));
    REQUIRE(rep.status == ResolutionStatus::Resolved);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].self_intersection == -1);
    CHECK(!rep.components[0].dicritical);
    REQUIRE(rep.singularities.size() == 2);
    for (const auto& s : rep.singularities) {
        CHECK(s.cls == SingClass::NondegenerateResonant);
        CHECK(s.indices.at("E1") == S(-1, 2));
    }
    CHECK(index_theorem_holds(rep));
}

TEST_CASE("resolution of the radial form") {
    ResolutionReport rep = resolve(linear_model(S(1)));
    REQUIRE(rep.status == ResolutionStatus::Resolved);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].dicritical);
    CHECK(rep.components[0].singularities.empty());
    CHECK(rep.singularities.empty());
    CHECK(rep.history.size() == 1);
}

TEST_CASE("linear model index sweep") {
    std::mt19937 rng(6021);
    std::uniform_int_distribution<int> num(-12, -1);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 12; ++trial) {
        Rational l(num(rng), den(rng));  // negative rationals are irreducible
        Scalar lam(l);
        ResolutionReport rep = resolve(linear_model(lam));
        REQUIRE(rep.status == ResolutionStatus::Resolved);
        REQUIRE(rep.singularities.size() == 2);
        Scalar i1 = (lam - S(1)).inverse();
        Scalar i2 = lam / (S(1) - lam);
        std::vector<Scalar> got;
        for (const auto& s : rep.singularities) got.push_back(s.indices.at("E1"));
        CHECK(((got[0] == i1 && got[1] == i2) || (got[0] == i2 && got[1] == i1)));
        CHECK(got[0] + got[1] == S(-1));
        CHECK(index_theorem_holds(rep));
    }
}

TEST_CASE("saddle-node resolution") {
    ResolutionReport rep = resolve(FoliationForm(-(Y * Y), X));
    REQUIRE(rep.status == ResolutionStatus::Resolved);
    REQUIRE(rep.components.size() == 1);
    CHECK(rep.components[0].self_intersection == -1);
    REQUIRE(rep.singularities.size() == 2);
    bool saw_resonant = false, saw_saddle = false;
    for (const auto& s : rep.singularities) {
        if (s.cls == SingClass::NondegenerateResonant) {
            saw_resonant = true;
            CHECK(s.indices.at("E1") == S(-1));
        }
        if (s.cls == SingClass::SaddleNode) {
            saw_saddle = true;
            CHECK(s.indices.at("E1") == S(0));
            CHECK(s.saddle_node_order == 1);
        }
    }
    CHECK(saw_resonant);
    CHECK(saw_saddle);
    CHECK(index_theorem_holds(rep));
}

TEST_CASE("cusp resolution") {
    ResolutionReport rep = resolve(cusp());
    REQUIRE(rep.status == ResolutionStatus::Resolved);
    REQUIRE(rep.components.size() == 3);
    CHECK(rep.component("E1")->self_intersection == -3);
    CHECK(rep.component("E2")->self_intersection == -2);
    CHECK(rep.component("E3")->self_intersection == -1);
    // E3 carries three singularities with the classical indices
    std::vector<Rational> e3;
    for (size_t idx : rep.component("E3")->singularities)
        e3.push_back(rep.singularities[idx].indices.at("E3").as_rational());
    std::sort(e3.begin(), e3.end());
    REQUIRE(e3.size() == 3);
    CHECK(e3[0] == Rational(-1, 2));
    CHECK(e3[1] == Rational(-1, 3));
    CHECK(e3[2] == Rational(-1, 6));
    CHECK(index_theorem_holds(rep));
    CHECK(corner_index_drop_check(rep));
    // the recorded history: pre-blow-up indices -1 on E1, then {-2, -1}
    REQUIRE(rep.history.size() == 3);
    CHECK(rep.history[0].parents.empty());
    CHECK(rep.history[1].parents == std::vector<std::string>{"E1"});
    CHECK(rep.history[1].index_before.at("E1") == S(-1));
    CHECK(rep.history[2].index_before.at("E1") == S(-2));
    CHECK(rep.history[2].index_before.at("E2") == S(-1));
}

TEST_CASE("second cusp resolution") {
    // level form of y^3 - x^5
    ResolutionReport rep = resolve(FoliationForm(X.pow(4) * S(-5), Y * Y * S(3)));
    REQUIRE(rep.status == ResolutionStatus::Resolved);
    REQUIRE(rep.components.size() == 4);
    CHECK(rep.component("E1")->self_intersection == -3);
    CHECK(rep.component("E2")->self_intersection == -3);
    CHECK(rep.component("E3")->self_intersection == -2);
    CHECK(rep.component("E4")->self_intersection == -1);
    std::vector<Rational> e4;
    for (size_t idx : rep.component("E4")->singularities)
        e4.push_back(rep.singularities[idx].indices.at("E4").as_rational());
    std::sort(e4.begin(), e4.end());
    REQUIRE(e4.size() == 3);
    CHECK(e4[0] == Rational(-3, 5));
    CHECK(e4[1] == Rational(-1, 3));
    CHECK(e4[2] == Rational(-1, 15));
    CHECK(index_theorem_holds(rep));
    CHECK(corner_index_drop_check(rep));
}

TEST_CASE("conjugate orbit of singularities") {
    // (y^2 - 2x^2) dx + y^3 dy: the divisor singularities sit at t = +-sqrt(2)
    ResolutionReport rep = resolve(FoliationForm(Y * Y - X * X * S(2), Y.pow(3)));
    REQUIRE(rep.status == ResolutionStatus::Resolved);
    REQUIRE(rep.components.size() == 1);
    bool saw_orbit = false;
    for (const auto& s : rep.singularities)
        if (s.location.orbit_size() == 2) {
            saw_orbit = true;
            CHECK(s.cls == SingClass::SaddleNode);
        }
    CHECK(saw_orbit);
    CHECK(index_theorem_holds(rep));
}

TEST_CASE("budget exhaustion and unsupported fields") {
    ResolutionReport rep = resolve(cusp(), 2);
    CHECK(rep.status == ResolutionStatus::BudgetExceeded);
    // divisor locus (t-1)(t^4+2t^3+2t^2+2t+2): no certified factorization
    ResolutionReport rep2 = resolve(FoliationForm(Y.pow(4) - X.pow(4) * S(2), Y.pow(4)));
    CHECK(rep2.status == ResolutionStatus::UnsupportedField);
    CHECK(!rep2.error.empty());
}
