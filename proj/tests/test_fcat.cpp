#include "support/gen.hpp"
#include "weights/fcat.hpp"

#include <doctest.h>

#include <set>

using namespace weights;

TEST_CASE("identities") {
    auto lo = identityFA(OperadId::Lo, 2);
    CHECK(lo.labels.at(0).order == std::vector<Nat>{1});
    CHECK(lo.labels.at(1).order == std::vector<Nat>{2});
    auto empty = identityFA(OperadId::Top, 0);
    CHECK(empty.f.dom() == 0);
    CHECK(identityFA(OperadId::BTr, 1).labels.at(0).tree == BinWord::leaf(1));
}

TEST_CASE("composition in F_Lo multiplies labels") {
    auto f = makeFA(OperadId::Lo, FinFunction(2, 1, {1, 1}), {loOp({2, 1})});
    auto g = makeFA(OperadId::Lo, FinFunction(1, 1, {1}), {loOp({1})});
    CHECK(composeFA(f, g).labels.at(0).order == std::vector<Nat>{2, 1});
    // two blocks merged by a swapping order
    auto h = makeFA(OperadId::Lo, FinFunction(3, 2, {1, 2, 1}), {loOp({3, 1}), loOp({2})});
    auto k = makeFA(OperadId::Lo, FinFunction(2, 1, {1, 1}), {loOp({2, 1})});
    CHECK(composeFA(h, k).labels.at(0).order == std::vector<Nat>{2, 3, 1});
    CHECK_THROWS_AS(composeFA(h, h), Error);
}

TEST_CASE("labels must sit on fibers") {
    CHECK_THROWS_AS(makeFA(OperadId::Lo, FinFunction(2, 1, {1, 1}), {loOp({1})}), Error);
    CHECK_THROWS_AS(makeFA(OperadId::Lo, FinFunction(1, 1, {1}), {unitOp(OperadId::Top, 1)}), Error);
}

TEST_CASE("tensor is the block sum") {
    auto id1 = identityFA(OperadId::Lo, 1);
    CHECK(tensorFA(id1, id1) == identityFA(OperadId::Lo, 2));
    auto f = makeFA(OperadId::Lo, FinFunction(2, 1, {1, 1}), {loOp({2, 1})});
    CHECK(tensorFA(f, identityFA(OperadId::Lo, 0)) == f);
    CHECK(tensorFA(identityFA(OperadId::Lo, 0), f) == f);
    auto t = tensorFA(id1, id1);
    CHECK(t.labels.at(0).order == std::vector<Nat>{1});
    CHECK(t.labels.at(1).order == std::vector<Nat>{2});
}

TEST_CASE("colored tensor keeps the color-0 block first") {
    auto x = identityFA(OperadId::Top2, ColoredObject{1, 1});
    auto t = tensorFA(x, x);
    CHECK(t.dom == ColoredObject{2, 2});
    CHECK(t.f == FinFunction::identity(4));
    CHECK(tensorIndex({1, 1}, {1, 1}, true, 1) == 2);
    CHECK(tensorIndex({1, 1}, {1, 1}, false, 2) == 3);
    CHECK(tensorIndex({1, 1}, {1, 1}, true, 2) == 4);
}

TEST_CASE("F_top is F") {
    for (Nat n = 0; n <= 3; ++n)
        for (Nat m = 0; m <= 3; ++m) {
            auto homs = enumerateFA(OperadId::Top, {n}, {m});
            Nat expect = 1;
            for (Nat i = 0; i < n; ++i) expect *= m;
            CHECK(homs.size() == expect);
            std::set<std::vector<Nat>> images;
            for (auto &h : homs) images.insert(piA(h).images());
            CHECK(images.size() == homs.size());
        }
    gen::Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        auto f = *gen::fa(rng, OperadId::Top, {3}, {2});
        auto g = *gen::fa(rng, OperadId::Top, {2}, {2});
        CHECK(piA(composeFA(f, g)) == compose(f.f, g.f));
    }
}

TEST_CASE("colored composition") {
    // in F^2_top2 composition is composition of the underlying functions
    for (auto &f : enumerateFA(OperadId::Top2, {1, 1}, {1, 1}))
        for (auto &g : enumerateFA(OperadId::Top2, {1, 1}, {0, 1}))
            CHECK(piA(composeColoredFA(f, g)) == compose(f.f, g.f));

    // (m on the color-0 pair, leaf on the color-1 element) then a
    auto first = makeFA(OperadId::Act, {2, 1}, {1, 1}, FinFunction(3, 2, {1, 1, 2}),
                        {actOp(ActTerm::parse("(1*2)"), {{1, 0}, {2, 0}}), unitOp(OperadId::Act, 3, 1)});
    auto second = makeFA(OperadId::Act, {1, 1}, {0, 1}, FinFunction(2, 1, {1, 1}),
                         {actOp(ActTerm::parse("(1>2)"), {{1, 0}, {2, 1}})});
    auto c = composeColoredFA(first, second);
    CHECK(c.labels.at(0).term.str() == "((1*2)>3)");
    CHECK(c.labels.at(0).out == 1);
    auto id = identityFA(OperadId::Act, ColoredObject{2, 1});
    CHECK(composeColoredFA(id, first) == first);
    CHECK(composeColoredFA(first, identityFA(OperadId::Act, ColoredObject{1, 1})) == first);
    CHECK_THROWS_AS(composeColoredFA(identityFA(OperadId::Lo, 1), identityFA(OperadId::Lo, 1)), Error);
}

namespace {
const OperadId kOps[] = {OperadId::Lo, OperadId::BTr, OperadId::Top, OperadId::Bot,
                         OperadId::Act, OperadId::Lo2, OperadId::Top2};

ColoredObject randomObject(gen::Rng &rng, OperadId id, Nat maxTotal) {
    if (!isColored(id)) return {gen::uniform(rng, 0, maxTotal)};
    Nat t = gen::uniform(rng, 0, maxTotal);
    Nat a = gen::uniform(rng, 0, t);
    return {a, t - a};
}
} // namespace

TEST_CASE("F_A is a category and pi_A a strict monoidal functor") {
    gen::Rng rng(42);
    int cases = 0;
    for (OperadId id : kOps)
        for (int i = 0; i < 60; ++i) {
            auto a = randomObject(rng, id, 4), b = randomObject(rng, id, 4), c = randomObject(rng, id, 4),
                 d = randomObject(rng, id, 4);
            if (id == OperadId::Bot) b = c = d = a;
            auto f = gen::fa(rng, id, a, b), g = gen::fa(rng, id, b, c), h = gen::fa(rng, id, c, d);
            if (!f || !g || !h) continue;
            CHECK(composeFA(composeFA(*f, *g), *h) == composeFA(*f, composeFA(*g, *h)));
            CHECK(composeFA(identityFA(id, a), *f) == *f);
            CHECK(composeFA(*f, identityFA(id, b)) == *f);
            CHECK(piA(composeFA(*f, *g)) == compose(piA(*f), piA(*g)));
            CHECK(piA(identityFA(id, a)) == FinFunction::identity(total(a)));
            if (!isColored(id)) CHECK(piA(tensorFA(*f, *g)) == sumMap(piA(*f), piA(*g)));
            // interchange for the tensor
            auto f2 = gen::fa(rng, id, c, d);
            if (f2) CHECK(tensorFA(composeFA(*f, *g), composeFA(*h, identityFA(id, d))) ==
                          composeFA(tensorFA(*f, *h), tensorFA(*g, identityFA(id, d))));
            ++cases;
        }
    CHECK(cases >= 200);
}
