#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "weights/fincat.hpp"

#include <doctest.h>

#include <map>

using namespace weights;

namespace {

const std::vector<std::string> kFixtures{"chain-max", "chain-min", "z2", "chain4-z2", "z2-anomaly"};

std::vector<BinWord> wordsOver(Nat n, Nat d) {
    std::vector<BinWord> base{BinWord::unit()};
    for (Nat i = 1; i <= n; ++i) base.push_back(BinWord::leaf(i));
    std::vector<BinWord> ws = base;
    for (Nat level = 1; level <= d; ++level) {
        std::vector<BinWord> next = base;
        for (auto &a : ws)
            for (auto &b : ws) next.push_back(BinWord::pair(a, b));
        ws = std::move(next);
    }
    return ws;
}

MOneCell randomCell(gen::Rng &rng, Nat dom, Nat cod, Nat depth) {
    MOneCell c{dom, {}};
    for (Nat j = 0; j < cod; ++j) c.words.push_back(gen::word(rng, dom, depth));
    return c;
}

Nat arrow(const FinMonoidalCategory &c, const std::string &id) { return c.base.arrowIndex(id); }
Nat object(const FinMonoidalCategory &c, const std::string &id) { return c.base.objectIndex(id); }

} // namespace

TEST_CASE("fixtures load and validate") {
    std::map<std::string, std::pair<Nat, Nat>> sizes{
        {"chain-max", {3, 6}}, {"chain-min", {3, 6}}, {"z2", {2, 2}}, {"chain4-z2", {4, 20}}, {"z2-anomaly", {2, 4}}};
    for (auto &name : kFixtures) {
        CAPTURE(name);
        auto f = fixtures::load(name);
        CHECK(f.monoidal.base.objectCount() == sizes[name].first);
        CHECK(f.monoidal.base.arrowCount() == sizes[name].second);
        CHECK(validateMonoidal(f.monoidal).ok());
        CHECK(validateMonoidal(oppositeMonoidal(f.monoidal)).ok());
        // render then parse is the identity
        auto again = parseCategoryFile(renderCategoryFile(f));
        CHECK(renderCategoryFile(again) == renderCategoryFile(f));
    }
    CHECK(fixtures::monoidal("chain-max").symmetric());
    CHECK(fixtures::monoidal("chain-min").symmetric());
    CHECK_FALSE(fixtures::monoidal("z2-anomaly").strict);
    CHECK_FALSE(fixtures::monoidal("z2-anomaly").symmetric());
    CHECK(fixtures::load("chain-max").action.has_value());
    CHECK_THROWS_AS(parseCategoryFile("{"), Error);
    CHECK_THROWS_AS(parseCategoryFile(R"({"objects": ["a"]})"), Error);
}

TEST_CASE("category laws are enforced") {
    auto c = fixtures::chain(3);
    CHECK(c.compose(c.arrowIndex("1<=2"), c.arrowIndex("0<=1")) == c.arrowIndex("0<=2"));
    CHECK(c.hom(0, 2).size() == 1);
    CHECK(c.hom(2, 0).empty());
    CHECK_THROWS_AS(c.compose(c.arrowIndex("0<=1"), c.arrowIndex("0<=1")), Error);
    // A composite with the wrong ends is rejected.
    CHECK_THROWS_AS(makeCategory({"a", "b"}, {{"ia", 0, 0}, {"ib", 1, 1}, {"f", 0, 1}, {"g", 0, 0}}, {0, 1},
                                 {{{3, 3, 2}}}),
                    Error);
    // A missing composite is rejected.
    CHECK_THROWS_AS(makeCategory({"a"}, {{"ia", 0, 0}, {"g", 0, 0}}, {0}, {}), Error);
    auto op = opposite(c);
    validateCategory(op);
    CHECK(op.src(op.arrowIndex("0<=1")) == 1);
}

TEST_CASE("powers and projections") {
    auto c = fixtures::monoidal("chain4-z2").base;
    auto p2 = powerCategory(c, 2);
    CHECK(p2.objectCount() == 16);
    CHECK(p2.arrowCount() == 400);
    validateCategory(p2);
    auto p0 = powerCategory(c, 0);
    CHECK(p0.objectCount() == 1);
    CHECK(p0.arrowCount() == 1);
    for (Nat i = 0; i < 2; ++i) validateFunctor(projectionFunctor(c, 2, i), p2, c);
    // Every pair of arrows is the image of exactly one arrow under the projections.
    auto q1 = projectionFunctor(c, 2, 0), q2 = projectionFunctor(c, 2, 1);
    std::map<std::pair<Nat, Nat>, Nat> seen;
    for (Nat h = 0; h < p2.arrowCount(); ++h) ++seen[{q1.onArrows[h], q2.onArrows[h]}];
    CHECK(seen.size() == c.arrowCount() * c.arrowCount());
    for (auto &[k, v] : seen) CHECK(v == 1);
}

TEST_CASE("functors and natural transformations") {
    auto c3 = fixtures::chain(3), c2 = fixtures::chain(2);
    CHECK(allFunctors(terminalCategory(), c3).size() == 3);
    CHECK(allFunctors(discreteCategory(2), c3).size() == 9);
    // Functors between chains are monotone maps: 0 <= a <= b <= 2 gives 6.
    CHECK(allFunctors(c2, c3).size() == 6);
    CHECK(allFunctors(discreteCategory(0), c3).size() == 1);
    auto z = fixtures::monoidal("chain4-z2").base;
    // From the terminal category: one functor per object.
    CHECK(allFunctors(terminalCategory(), z).size() == 4);
    for (auto &f : allFunctors(c2, c3)) validateFunctor(f, c2, c3);

    auto id = identityFunctor(c3);
    validateFunctor(id, c3, c3);
    CHECK(composeFunctors(id, id) == id);
    FinNatTrans t{{c3.id(0), c3.id(1), c3.id(2)}};
    validateNatTrans(t, id, id, c3, c3);
    FinNatTrans bad{{c3.arrowIndex("0<=1"), c3.id(1), c3.id(2)}};
    CHECK_THROWS_AS(validateNatTrans(bad, id, id, c3, c3), Error);
}

TEST_CASE("Phi on 1-cells") {
    auto c = fixtures::monoidal("chain4-z2");
    auto &C = c.base;
    auto p1 = powerCategory(C, 1), p2 = powerCategory(C, 2);

    auto one = phiEvalOneCell(c, parseM("1"));
    CHECK(one == identityFunctor(p1));
    auto t = phiEvalOneCell(c, parseM("(1*2)"));
    validateFunctor(t, p2, p1);
    for (Nat a = 0; a < C.objectCount(); ++a)
        for (Nat b = 0; b < C.objectCount(); ++b) CHECK(t.onObjects[tupleIndex(4, {a, b})] == c.tensor(a, b));
    for (Nat f = 0; f < C.arrowCount(); ++f)
        for (Nat g = 0; g < C.arrowCount(); ++g) CHECK(t.onArrows[tupleIndex(20, {f, g})] == c.tensorArrow(f, g));
    auto e = phiEvalOneCell(c, MOneCell{0, {BinWord::unit()}});
    CHECK(e.onObjects == std::vector<Nat>{c.unit});
    CHECK(e.onArrows == std::vector<Nat>{C.id(c.unit)});

    // Product projections go to projection functors.
    auto pr = productM(1, 1);
    CHECK(phiEvalOneCell(c, pr.p1) == projectionFunctor(C, 2, 0));
    CHECK(phiEvalOneCell(c, pr.p2) == projectionFunctor(C, 2, 1));
    CHECK(phiEvalOneCell(c, terminalM(2)).onObjects == std::vector<Nat>(16, 0));
}

TEST_CASE("Phi is functorial on 1-cells") {
    gen::Rng rng(31);
    int cases = 0;
    for (auto &name : kFixtures) {
        auto c = fixtures::monoidal(name);
        std::vector<FinCategory> powers;
        for (Nat n = 0; n <= 2; ++n) powers.push_back(powerCategory(c.base, n));
        for (int trial = 0; trial < 50; ++trial) {
            Nat a = gen::uniform(rng, 0, 2), b = gen::uniform(rng, 0, 2), d = gen::uniform(rng, 0, 2);
            auto f = randomCell(rng, a, b, 2), g = randomCell(rng, b, d, 2);
            auto pf = phiEvalOneCell(c, f), pg = phiEvalOneCell(c, g);
            validateFunctor(pf, powers[a], powers[b]);
            CHECK(phiEvalOneCell(c, composeM(f, g)) == composeFunctors(pf, pg));
            // Pairing goes to the pairing of functors into a power.
            auto h = randomCell(rng, a, d, 1);
            auto pair = phiEvalOneCell(c, pairingM(f, h)), ph = phiEvalOneCell(c, h);
            Nat k = c.base.objectCount();
            for (Nat x = 0; x < powers[a].objectCount(); ++x) {
                auto lhs = tupleOf(k, b, pf.onObjects[x]), rhs = tupleOf(k, d, ph.onObjects[x]);
                lhs.insert(lhs.end(), rhs.begin(), rhs.end());
                CHECK(pair.onObjects[x] == tupleIndex(k, lhs));
            }
            ++cases;
        }
    }
    CHECK(cases >= 200);
}

TEST_CASE("Phi on 2-cells") {
    auto gens = generatorsM(3);
    for (auto &name : {"chain-max", "chain4-z2"}) {
        auto c = fixtures::monoidal(name);
        for (auto &alpha : gens.twoCells) {
            auto t = phiEvalTwoCell(c, alpha);
            Nat n = alpha.dom.dom;
            for (Nat i = 0; i < t.components.size(); ++i) {
                auto comps = tupleOf(c.base.arrowCount(), 1, t.components[i]);
                CHECK(comps[0] == c.base.id(c.base.src(comps[0])));
            }
            CHECK(t.components.size() == powerCategory(c.base, n).objectCount());
        }
    }

    auto z = fixtures::monoidal("z2-anomaly");
    auto assoc = *twoCellM(parseM("(1*(2*3))"), parseM("((1*2)*3)"));
    auto t = phiEvalTwoCell(z, assoc);
    // At (1,1,1) the component is the inverse of the associator, which is its own inverse.
    CHECK(t.components[tupleIndex(2, {1, 1, 1})] == arrow(z, "1:1"));
    CHECK(t.components[tupleIndex(2, {1, 1, 0})] == arrow(z, "0:0"));
    auto lunit = *twoCellM(parseM("(e*1)"), parseM("1"));
    auto lt = phiEvalTwoCell(z, lunit);
    for (Nat x = 0; x < 2; ++x) CHECK(lt.components[x] == z.left(x));

    // Components are natural for every generator 2-cell and for random 2-cells.
    gen::Rng rng(37);
    auto check = [&](const MTwoCell &a) {
        Nat n = a.dom.dom;
        auto pc = powerCategory(z.base, n), pd = powerCategory(z.base, a.dom.cod());
        validateNatTrans(phiEvalTwoCell(z, a), phiEvalOneCell(z, a.dom), phiEvalOneCell(z, a.cod), pc, pd);
    };
    for (auto &a : gens.twoCells) check(a);
    int found = 0;
    for (int trial = 0; trial < 2000 && found < 200; ++trial) {
        auto f = randomCell(rng, 3, 1, 3), g = randomCell(rng, 3, 1, 3);
        if (auto a = twoCellM(f, g)) {
            check(*a);
            ++found;
        }
    }
    CHECK(found >= 200);

    FinMonoidalCategory missing = z;
    missing.alpha.clear();
    CHECK_THROWS_AS(phiEvalTwoCell(missing, assoc), Error);
}

TEST_CASE("coherence does not depend on the normal form") {
    // Mac Lane coherence on the non-strict fixture: exhaustive over words of depth <= 3
    // in one letter and depth <= 2 in three letters, for every assignment of objects.
    auto z = fixtures::monoidal("z2-anomaly");
    auto run = [&](Nat letters, Nat depth) {
        std::map<TypeWord, std::vector<BinWord>> byType;
        for (auto &w : wordsOver(letters, depth)) byType[typeOf(w)].push_back(w);
        Nat pairs = 0;
        for (Nat i = 0; i < (Nat(1) << letters); ++i) {
            auto objs = tupleOf(2, letters, i);
            for (auto &[type, ws] : byType)
                for (auto &a : ws)
                    for (auto &b : ws) {
                        Nat r = coherence(z, a, b, objs, NormalForm::RightNested);
                        Nat l = coherence(z, a, b, objs, NormalForm::LeftNested);
                        if (r != l) FAIL_CHECK(a.str() << " -> " << b.str());
                        ++pairs;
                    }
        }
        return pairs;
    };
    CHECK(run(1, 3) > 0);
    CHECK(run(3, 2) > 0);

    // The two paths around the non-trivial cocycle differ, so the test has teeth:
    // the associator at (1,1,1) is not an identity.
    auto w = BinWord::parse("(1*(1*1))"), u = BinWord::parse("((1*1)*1)");
    CHECK(coherence(z, u, w, {1}) == arrow(z, "1:1"));
    CHECK(coherence(z, u, w, {0}) == arrow(z, "0:0"));
    CHECK_THROWS_AS(coherence(z, u, BinWord::parse("(1*1)"), {1}), Error);
}

TEST_CASE("monoidal validation reports seeded defects") {
    auto cmax = fixtures::monoidal("chain-max");
    auto cmin = fixtures::monoidal("chain-min");
    CHECK(validateMonoidal(cmax).ok());
    CHECK(validateMonoidal(cmin).ok());
    CHECK(cmin.unit == object(cmin, "2"));

    // Non-functorial tensor in a non-thin category.
    auto z = fixtures::monoidal("chain4-z2");
    auto broken = z;
    broken.tensorArrows[arrow(z, "0<=1+1") * 20 + arrow(z, "0<=0+0")] = arrow(z, "0<=1+0");
    CHECK_FALSE(validateMonoidal(broken).ok());

    // Triangle fails when the associator is flipped at (1,0,0) with identity unitors.
    auto a = fixtures::monoidal("z2-anomaly");
    auto bad = a;
    bad.alpha[(1 * 2 + 0) * 2 + 0] = arrow(a, "1:1");
    auto rep = validateMonoidal(bad);
    CHECK_FALSE(rep.ok());
    bool triangle = false;
    for (auto &v : rep.violations) triangle |= v.find("triangle") != std::string::npos;
    CHECK(triangle);

    // The identity braiding violates the hexagon at (1,1,1).
    auto braided = a;
    braided.sym = {arrow(a, "0:0"), arrow(a, "1:0"), arrow(a, "1:0"), arrow(a, "0:0")};
    CHECK_FALSE(validateMonoidal(braided).ok());

    FinMonoidalCategory undeclared = a;
    undeclared.lunit.clear();
    CHECK_FALSE(validateMonoidal(undeclared).ok());
}

TEST_CASE("actions") {
    auto f = fixtures::load("chain-max");
    auto reg = regularAction(f.monoidal);
    CHECK(f.action->actObjects == reg.actObjects);
    CHECK(f.action->actArrows == reg.actArrows);
    auto z = fixtures::monoidal("chain4-z2");
    validateAction(regularAction(z));
    CHECK_THROWS_AS(regularAction(fixtures::monoidal("z2-anomaly")), Error);
}

TEST_CASE("lax monoidal functors") {
    auto c = fixtures::monoidal("chain-max");
    auto &C = c.base;
    auto id = identityLax(c);
    validateLax(id, c, c);

    // Collapse to the top object.
    LaxMonoidalFunctor top;
    Nat two = object(c, "2");
    top.functor.onObjects.assign(3, two);
    top.functor.onArrows.assign(C.arrowCount(), C.id(two));
    top.phi.assign(9, C.id(two));
    top.phiUnit = arrow(c, "0<=2");
    validateLax(top, c, c);
    auto both = composeLax(top, top, c, c);
    validateLax(both, c, c);
    CHECK(both.functor == top.functor);
    auto withId = composeLax(id, top, c, c);
    CHECK(withId.functor == top.functor);
    CHECK(withId.phi == top.phi);

    // On the non-thin fixture, the identity functor with phi the non-trivial element
    // everywhere is lax exactly when the unit comparison is non-trivial too.
    auto z = fixtures::monoidal("chain4-z2");
    LaxMonoidalFunctor twisted = identityLax(z);
    for (Nat x = 0; x < 4; ++x)
        for (Nat y = 0; y < 4; ++y) {
            Nat m = z.tensor(x, y);
            twisted.phi[x * 4 + y] = z.base.arrowIndex(std::to_string(m) + "<=" + std::to_string(m) + "+1");
        }
    CHECK_THROWS_AS(validateLax(twisted, z, z), Error);
    twisted.phiUnit = arrow(z, "0<=0+1");
    validateLax(twisted, z, z);
}
