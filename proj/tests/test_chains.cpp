#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "folres/chains.hpp"
#include "folres/errors.hpp"

using namespace folres;

namespace {

const BiPoly X = BiPoly::var_x();
const BiPoly Y = BiPoly::var_y();
Scalar S(long n, long d = 1) { return Scalar(Rational(n, d)); }

bool contains(const std::vector<ASequence>& set, std::vector<long> entries) {
    for (const auto& s : set)
        if (s.entries == entries) return true;
    return false;
}

// single-corner chain fixture
LinearChain fixture(ChainCorner r1, long k1, Rational c1 = Rational(0)) {
    LinearChain ch;
    ch.parent = "P2";
    ch.comps = {"P1"};
    ch.dicritical = {false};
    ch.k = {k1};
    ch.c = {c1};
    ch.corner = {r1};
    ch.n_r = 1;
    return ch;
}

}  // namespace

TEST_CASE("continued fractions") {
    CHECK(continued_fraction({1, 2}) == Rational(2));
    CHECK(continued_fraction({2, 1, 3}) == Rational(2));
    CHECK(continued_fraction({1, 2, 2}) == Rational(3));
    CHECK(continued_fraction({3}) == Rational(1, 3));
    CHECK_THROWS_AS(continued_fraction({1, 1}), DivisionByZero);
}

TEST_CASE("generation of the sequence family") {
    auto d0 = generate_A(0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].entries == std::vector<long>{1, 1});
    auto d1 = generate_A(1);
    REQUIRE(d1.size() == 2);
    CHECK(contains(d1, {2, 1, 2}));
    auto d2 = generate_A(2);
    CHECK(contains(d2, {3, 1, 2, 2}));
    CHECK(contains(d2, {2, 2, 1, 3}));
}

TEST_CASE("family-wide identities") {
    size_t prev = 0;
    for (int depth = 0; depth <= 6; ++depth) {
        auto fam = generate_A(depth);
        CHECK(fam.size() > prev);  // new members at every depth
        prev = fam.size();
    }
    for (const ASequence& s : generate_A(6)) {
        CHECK(check_lemma1(s));
        CHECK(check_lemma2(s));
    }
}

TEST_CASE("minimality clauses on fixtures") {
    ChainCorner regular;  // clause (i)
    CHECK(is_minimal(fixture(regular, 2)));

    ChainCorner sn;  // clause (ii)
    sn.cls = SingClass::SaddleNode;
    sn.index_high = Rational(0);
    CHECK(is_minimal(fixture(sn, 2)));
    sn.index_high = Rational(1, 2);
    CHECK(!is_minimal(fixture(sn, 2)));

    ChainCorner res;  // clause (iii), l = 1
    res.cls = SingClass::NondegenerateResonant;
    res.index_low = Rational(-2);
    res.index_high = Rational(-1, 2);
    CHECK(is_minimal(fixture(res, 2)));
    CHECK(!is_minimal(fixture(res, 3)));
    res.index_low = Rational(-3);
    CHECK(!is_minimal(fixture(res, 2)));
    // weight correction by the positive non-corner indices
    res.index_low = Rational(-5, 2);
    CHECK(is_minimal(fixture(res, 2, Rational(1, 2))));

    ChainCorner nr;
    nr.cls = SingClass::Hyperbolic;
    CHECK(!is_minimal(fixture(nr, 2)));

    ChainCorner gap;
    gap.cls = SingClass::NondegenerateResonant;
    CHECK_THROWS_AS(is_minimal(fixture(gap, 2)), MissingIndex);
}

TEST_CASE("verdicts on fixtures") {
    ChainCorner res;
    res.cls = SingClass::NondegenerateResonant;
    res.index_low = Rational(-2);
    res.index_high = Rational(-1, 2);
    CHECK(chain_verdict(fixture(res, 2)).tag == VerdictTag::Minimal);

    res.index_low = Rational(-3);
    ChainVerdict v = chain_verdict(fixture(res, 2));
    CHECK(v.tag == VerdictTag::Extends);
    REQUIRE(!v.trail.empty());
    CHECK(v.trail[0].why == Justification::NonzeroIndexPoint);
    CHECK(v.trail[0].level == 1);

    LinearChain dic_parent = fixture(res, 2);
    dic_parent.parent_dicritical = true;
    ChainVerdict vd = chain_verdict(dic_parent);
    CHECK(vd.tag == VerdictTag::Extends);
    CHECK(vd.trail[0].why == Justification::DicriticalEnd);

    LinearChain mixed = fixture(res, 2);
    mixed.parent_dicritical = true;
    mixed.dicritical[0] = true;
    CHECK(chain_verdict(mixed).tag == VerdictTag::Uncovered);

    // dicritical free end: the verdict depends on the corner index along P_2
    LinearChain dic_end;
    dic_end.parent = "P3";
    dic_end.comps = {"P1", "P2"};
    dic_end.dicritical = {true, false};
    dic_end.k = {1, 2};
    dic_end.c = {Rational(0), Rational(0)};
    ChainCorner r1, r2;
    r1.cls = SingClass::Regular;
    r1.index_high = Rational(0);
    r2.cls = SingClass::NondegenerateResonant;
    r2.index_low = Rational(-2);
    r2.index_high = Rational(-1, 2);
    dic_end.corner = {r1, r2};
    dic_end.n_r = 1;
    CHECK(chain_verdict(dic_end).tag == VerdictTag::Minimal);
    dic_end.corner[0].index_high = Rational(1);
    ChainVerdict ve = chain_verdict(dic_end);
    CHECK(ve.tag == VerdictTag::Extends);
    CHECK(ve.trail[0].why == Justification::DicriticalEnd);
}

TEST_CASE("chains of the cusp resolution") {
    ResolutionReport rep = resolve(FoliationForm(X * X * S(-3), Y * S(2)));
    auto chains = extract_chains(rep);
    REQUIRE(chains.size() == 1);
    const LinearChain& ch = chains[0];
    CHECK(ch.parent == "E1");
    CHECK(ch.comps == std::vector<std::string>{"E2", "E3"});
    CHECK(ch.n_r == 2);
    CHECK(chain_sequence(ch) == std::vector<long>{2, 1, 2});
    CHECK(contains(generate_A(2), chain_sequence(ch)));
    CHECK(ch.c == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(!is_minimal(ch));
    ChainVerdict v = chain_verdict(ch);
    CHECK(v.tag == VerdictTag::Extends);
    CHECK(v.trail[0].level == 2);  // -1/3 - 1/2 != -1
    CHECK(v.trail[0].why == Justification::NonzeroIndexPoint);
}

TEST_CASE("chains of the second cusp") {
    ResolutionReport rep = resolve(FoliationForm(X.pow(4) * S(-5), Y * Y * S(3)));
    auto chains = extract_chains(rep);
    REQUIRE(chains.size() == 1);
    const LinearChain& ch = chains[0];
    CHECK(ch.parent == "E1");
    CHECK(ch.comps == std::vector<std::string>{"E2", "E4", "E3"});
    CHECK(chain_sequence(ch) == std::vector<long>{2, 2, 1, 3});
    CHECK(contains(generate_A(2), chain_sequence(ch)));
    CHECK(!is_minimal(ch));
    ChainVerdict v = chain_verdict(ch);
    CHECK(v.tag == VerdictTag::Extends);
    CHECK(v.trail[0].level == 2);  // -3/5 - 1/3 != -1
}

TEST_CASE("no chains without reducible corners") {
    CHECK(extract_chains(resolve(FoliationForm(Y, X))).empty());
    CHECK(extract_chains(resolve(FoliationForm(-Y, X))).empty());
}

TEST_CASE("extension schedules") {
    {
        ExtensionSchedule plan = extension_schedule(resolve(FoliationForm(Y, X)));
        REQUIRE(plan.steps.size() == 1);
        CHECK(plan.steps[0].why == Justification::NonzeroIndexPoint);
    }
    {
        ExtensionSchedule plan = extension_schedule(resolve(FoliationForm(-Y, X)));
        REQUIRE(plan.steps.size() == 1);
        CHECK(plan.steps[0].why == Justification::DicriticalEnd);
    }
    {
        ResolutionReport rep = resolve(FoliationForm(X * X * S(-3), Y * S(2)));
        ExtensionSchedule plan = extension_schedule(rep);
        REQUIRE(plan.steps.size() == 2);
        CHECK(plan.steps[0].components == std::vector<std::string>{"E2", "E3"});
        REQUIRE(plan.steps[0].pre_chain_index.has_value());
        CHECK(*plan.steps[0].pre_chain_index == Rational(5, 3));
        CHECK(*plan.steps[0].pre_chain_index >= 0);
        REQUIRE(plan.steps[0].pre_parent_index.has_value());
        CHECK(*plan.steps[0].pre_parent_index == Rational(-1));
        CHECK(plan.steps[1].components == std::vector<std::string>{"E1"});
        CHECK(plan.steps[1].why == Justification::CornerPropagation);
        // coverage of every nondicritical component
        std::set<std::string> covered;
        for (const auto& s : plan.steps)
            covered.insert(s.components.begin(), s.components.end());
        for (const auto& c : rep.components)
            if (!c.dicritical) CHECK(covered.count(c.id));
    }
}

TEST_CASE("schedule rejects a minimal chain") {
    // hand-built two-component report whose single chain is minimal
    ResolutionReport rep;
    AlgebraicPoint pt = AlgebraicPoint::exact("c", S(0), S(0));
    DivisorComponent e1{"E1", -1, false, 1, 1, {0}, {{"E2", pt}}};
    DivisorComponent e2{"E2", -2, false, 2, 1, {0}, {{"E1", pt}}};
    rep.components = {e1, e2};
    SingularityRecord rec;
    rec.location = pt;
    rec.cls = SingClass::NondegenerateResonant;
    rec.indices = {{"E1", S(-1, 2)}, {"E2", S(-2)}};
    rep.singularities = {rec};
    BlowupEvent b1, b2;
    b1.step = 1;
    b1.new_component = "E1";
    b2.step = 2;
    b2.new_component = "E2";
    b2.parents = {"E1"};
    rep.history = {b1, b2};
    auto chains = extract_chains(rep);
    REQUIRE(chains.size() == 1);
    CHECK(is_minimal(chains[0]));
    CHECK(chain_verdict(chains[0]).tag == VerdictTag::Minimal);
    CHECK_THROWS_AS(extension_schedule(rep), ScheduleIncomplete);
}
