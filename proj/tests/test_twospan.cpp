#include "support/gen.hpp"
#include "weights/twospan.hpp"

#include <doctest.h>

#include <set>

using namespace weights;

namespace {

const OperadArray kMonoid{OperadId::Bot, OperadId::Lo, OperadId::Top, OperadId::Lo};
const OperadArray kComonoid{OperadId::Lo, OperadId::Bot, OperadId::Top, OperadId::Lo};
const OperadArray kCMonoid{OperadId::Bot, OperadId::Top, OperadId::Top, OperadId::Top};
const OperadArray kBimonoid{OperadId::Lo, OperadId::Lo, OperadId::Top, OperadId::Top};
const OperadArray kAction{OperadId::Bot2, OperadId::Lo2, OperadId::Top2, OperadId::Lo2};

Nat binom(Nat n, Nat k) {
    if (k > n) return 0;
    Nat r = 1;
    for (Nat i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

FAMorphism topLeg(OperadId id, const ColoredObject &dom, const ColoredObject &cod, const FinFunction &f) {
    std::vector<OperadOp> labels;
    for (Nat i = 1; i <= f.cod(); ++i) {
        auto fib = fiber(f, i);
        std::vector<Color> cs;
        for (Nat e : fib) cs.push_back(colorAt(dom, e));
        labels.push_back(topOp(id, fib, cs, colorAt(cod, i)));
    }
    return makeFA(id, dom, cod, f, labels);
}

/// x^k as a 1-cell (1] -> (1] of [top Lo]: the right leg orders the occurrences.
SpanMorphism power(Nat k) {
    auto c = FinFunction::constant(k, 1, 1);
    std::vector<Nat> order(k);
    for (Nat i = 0; i < k; ++i) order[i] = i + 1;
    return makeSpan(topLeg(OperadId::Top, {k}, {1}, c), makeFA(OperadId::Lo, c, {loOp(order)}));
}

/// x^k y as a 1-cell (1,1) -> (0,1) of [top2 Lo2].
SpanMorphism actionPower(Nat k) {
    ColoredObject apex{k, 1};
    std::vector<Nat> left(k, 1);
    left.push_back(2);
    auto l = topLeg(OperadId::Top2, apex, {1, 1}, FinFunction(k + 1, 2, left));
    std::vector<Nat> order;
    std::vector<Color> cs;
    for (Nat i = 1; i <= k + 1; ++i) {
        order.push_back(i);
        cs.push_back(i == k + 1 ? 1 : 0);
    }
    auto r = makeFA(OperadId::Lo2, apex, {0, 1}, FinFunction::constant(k + 1, 1, 1), {lo2Op(order, cs, 1)});
    return makeSpan(l, r);
}

SpanMorphism asArrayOneCell(const OperadArray &a, const SpanMorphism &s) { return mapSpan(a.a0, a.b0, s); }

} // namespace

TEST_CASE("arrays") {
    CHECK(parseArray("bot lo top lo") == kMonoid);
    CHECK(kAction.str() == "[bot2 lo2 / top2 lo2]");
    CHECK_THROWS_AS(parseArray("top lo bot lo"), Error);
    CHECK_THROWS_AS(parseArray("bot lo"), Error);
}

TEST_CASE("monoid array: cells are monotone maps") {
    CHECK(localHom(kMonoid, power(1), power(1)).size() == 1);
    CHECK(localHom(kMonoid, power(2), power(1)).size() == 1);
    CHECK(localHom(kMonoid, power(1), power(2)).size() == 2);
    CHECK(localHom(kMonoid, power(0), power(0)).size() == 1);
    for (Nat k = 0; k <= 3; ++k)
        for (Nat l = 0; l <= 3; ++l) {
            auto cells = localHom(kMonoid, power(k), power(l));
            CHECK(cells.size() == (l == 0 ? (k == 0 ? 1 : 0) : binom(k + l - 1, k)));
            for (auto &c : cells) {
                CHECK(c.d2().f == FinFunction::identity(k));
                auto &t = c.c2().f.images();
                CHECK(std::is_sorted(t.begin(), t.end()));
            }
        }
    // composites of cells are composites of monotone maps
    for (Nat a = 0; a <= 2; ++a)
        for (Nat b = 1; b <= 2; ++b)
            for (Nat c = 1; c <= 3; ++c)
                for (auto &u : localHom(kMonoid, power(a), power(b)))
                    for (auto &v : localHom(kMonoid, power(b), power(c))) {
                        auto w = verticalCompose(u, v);
                        CHECK(w.c2().f == compose(u.c2().f, v.c2().f));
                        CHECK(w.d2().f == FinFunction::identity(a));
                    }
}

TEST_CASE("variant arrays") {
    for (Nat k = 0; k <= 3; ++k)
        for (Nat l = 0; l <= 3; ++l) {
            Nat monotoneLK = k == 0 ? 1 : (l == 0 ? 0 : binom(k + l - 1, k));
            Nat monotoneKL = l == 0 ? 1 : (k == 0 ? 0 : binom(k + l - 1, l));
            Nat functions = 1;
            for (Nat i = 0; i < k; ++i) functions *= l;
            CHECK(localHom(kComonoid, power(k), power(l)).size() == monotoneKL);
            CHECK(localHom(kCMonoid, asArrayOneCell(kCMonoid, power(k)), asArrayOneCell(kCMonoid, power(l))).size() ==
                  functions);
            // x^k y => x^l y: monotone maps of chains keeping the top element
            CHECK(localHom(kAction, actionPower(k), actionPower(l)).size() == binom(k + l, k));
        }
}

TEST_CASE("bottom top row is locally discrete") {
    const OperadArray discrete{OperadId::Bot, OperadId::Bot, OperadId::Top, OperadId::Lo};
    auto ones = enumerateSpans(OperadId::Top, OperadId::Lo, {1}, {1}, 2);
    for (auto &s : ones)
        for (auto &t : ones) {
            auto cells = localHom(discrete, s, t);
            CHECK(cells.size() == (s == t ? 1u : 0u));
            if (s == t) CHECK(cells.front() == identityCell(discrete, s));
        }
}

namespace {

struct Fixture {
    OperadArray array;
    std::vector<ColoredObject> objects;
    Nat apex;
};

std::vector<Fixture> fixtures() {
    return {{kMonoid, {{0}, {1}, {2}}, 2},
            {kComonoid, {{0}, {1}, {2}}, 2},
            {kCMonoid, {{0}, {1}, {2}}, 2},
            {kBimonoid, {{1}, {2}}, 2},
            {kAction, {{0, 1}, {1, 1}, {1, 0}}, 2}};
}

struct Pick {
    SpanMorphism target;
    TwoSpanCell cell;
};

/// A random cell out of s, drawn among all 1-cells parallel to s.
std::optional<Pick> randomCell(gen::Rng &rng, const Fixture &fx, const SpanMorphism &s) {
    auto parallels = enumerateSpans(fx.array.a0, fx.array.b0, s.src, s.tgt, fx.apex);
    std::vector<Pick> all;
    for (auto &t : parallels)
        for (auto &c : localHom(fx.array, s, t, 0, 2)) all.push_back({t, c});
    if (all.empty()) return std::nullopt;
    return gen::pick(rng, all);
}

} // namespace

TEST_CASE("2-category axioms where horizontal composites exist") {
    gen::Rng rng(21);
    int grids = 0, undefined = 0;
    for (auto &fx : fixtures())
        for (int i = 0; i < 14; ++i) {
            INFO(fx.array.str());
            auto x = gen::pick(rng, fx.objects), y = gen::pick(rng, fx.objects), z = gen::pick(rng, fx.objects);
            auto xy = enumerateSpans(fx.array.a0, fx.array.b0, x, y, fx.apex);
            auto yz = enumerateSpans(fx.array.a0, fx.array.b0, y, z, fx.apex);
            if (xy.empty() || yz.empty()) continue;
            auto s0 = gen::pick(rng, xy), t0 = gen::pick(rng, yz);
            auto u = randomCell(rng, fx, s0);
            auto v = randomCell(rng, fx, t0);
            if (!u || !v) continue;
            auto u2 = randomCell(rng, fx, u->target);
            auto v2 = randomCell(rng, fx, v->target);
            if (!u2 || !v2) continue;

            CHECK(verticalCompose(identityCell(fx.array, s0), u->cell) == u->cell);
            CHECK(verticalCompose(u->cell, identityCell(fx.array, u->target)) == u->cell);
            auto u3 = randomCell(rng, fx, u2->target);
            if (u3)
                CHECK(verticalCompose(verticalCompose(u->cell, u2->cell), u3->cell) ==
                      verticalCompose(u->cell, verticalCompose(u2->cell, u3->cell)));

            CHECK(whiskerRight(u->cell, identitySpan(fx.array.a0, fx.array.b0, y)).cell == u->cell.cell);
            CHECK(whiskerLeft(identitySpan(fx.array.a0, fx.array.b0, x), u->cell).cell == u->cell.cell);
            CHECK(horizontalCompose(identityCell(fx.array, s0), identityCell(fx.array, t0)) ==
                  identityCell(fx.array, composeSpan(s0, t0)));

            // right whiskering is a functor in the cell and in the 1-cell
            CHECK(whiskerRight(verticalCompose(u->cell, u2->cell), t0) ==
                  verticalCompose(whiskerRight(u->cell, t0), whiskerRight(u2->cell, t0)));
            auto zs = enumerateSpans(fx.array.a0, fx.array.b0, z, gen::pick(rng, fx.objects), fx.apex);
            if (!zs.empty()) {
                auto r = gen::pick(rng, zs);
                CHECK(whiskerRight(u->cell, composeSpan(t0, r)) == whiskerRight(whiskerRight(u->cell, t0), r));
            }

            if (fx.array == kBimonoid) continue; // see the counterexample below
            try {
                auto lhs = horizontalCompose(verticalCompose(u->cell, u2->cell), verticalCompose(v->cell, v2->cell));
                auto rhs = verticalCompose(horizontalCompose(u->cell, v->cell), horizontalCompose(u2->cell, v2->cell));
                CHECK(lhs == rhs);
                ++grids;
            } catch (const Error &) {
                ++undefined;
            }
        }
    CHECK(grids >= 20);
    MESSAGE("interchange grids checked: " << grids << ", without horizontal composite: " << undefined);
}

TEST_CASE("horizontal composition is associative where defined") {
    gen::Rng rng(22);
    int checked = 0;
    for (auto &fx : fixtures())
        for (int i = 0; i < 10; ++i) {
            INFO(fx.array.str());
            ColoredObject o[4];
            for (auto &x : o) x = gen::pick(rng, fx.objects);
            std::optional<Pick> c[3];
            bool ok = true;
            for (int j = 0; j < 3 && ok; ++j) {
                auto ones = enumerateSpans(fx.array.a0, fx.array.b0, o[j], o[j + 1], fx.apex);
                if (ones.empty()) ok = false;
                else c[j] = randomCell(rng, fx, gen::pick(rng, ones));
                ok = ok && c[j];
            }
            if (!ok) continue;
            try {
                auto lhs = horizontalCompose(horizontalCompose(c[0]->cell, c[1]->cell), c[2]->cell);
                auto rhs = horizontalCompose(c[0]->cell, horizontalCompose(c[1]->cell, c[2]->cell));
                CHECK(lhs == rhs);
                ++checked;
            } catch (const Error &) {
            }
        }
    CHECK(checked >= 10);
}

TEST_CASE("left whiskering can fail without a symmetry") {
    // multiplication x*x => x pasted under x*x needs the middle-four interchange
    auto mu = localHom(kMonoid, power(2), power(1)).front();
    CHECK_THROWS_AS(whiskerLeft(power(2), mu), Error);
    // while post-composition always exists and is the monotone map 1122
    auto r = whiskerRight(mu, power(2));
    CHECK(r.c2().f == FinFunction(4, 2, {1, 1, 2, 2}));
}

TEST_CASE("two Lo rows: pasting order is visible") {
    // u = v = the span (2] -> (1] with both legs ordered, except v's right order is reversed
    auto one = asArrayOneCell(kBimonoid, power(1));
    auto c = FinFunction::constant(2, 1, 1);
    auto u = makeCell(kBimonoid, one, one, makeFA(OperadId::Lo, c, {loOp({1, 2})}), makeFA(OperadId::Lo, c, {loOp({1, 2})}));
    auto v = makeCell(kBimonoid, one, one, makeFA(OperadId::Lo, c, {loOp({1, 2})}), makeFA(OperadId::Lo, c, {loOp({2, 1})}));
    auto a = verticalCompose(whiskerRight(u, one), whiskerLeft(one, v));
    auto b = verticalCompose(whiskerLeft(one, v), whiskerRight(u, one));
    CHECK(a.d2().labels.at(0).order == std::vector<Nat>{1, 2, 3, 4});
    CHECK(a.c2().labels.at(0).order == std::vector<Nat>{2, 4, 1, 3});
    CHECK(b.c2().labels.at(0).order == std::vector<Nat>{3, 1, 4, 2});
    CHECK_FALSE(a == b);
}

TEST_CASE("(0, +) are 2-categorical products when the bottom-left operad is top") {
    // projections (n+m] -> (n], (n+m] -> (m] in [top Lo]
    auto projection = [](Nat n, Nat m, bool second) {
        Nat k = second ? m : n;
        std::vector<Nat> incl(k);
        for (Nat i = 0; i < k; ++i) incl[i] = i + 1 + (second ? n : 0);
        return makeSpan(topLeg(OperadId::Top, {k}, {n + m}, FinFunction(k, n + m, incl)), identityFA(OperadId::Lo, k));
    };
    for (Nat k = 0; k <= 1; ++k)
        for (Nat n = 0; n <= 1; ++n)
            for (Nat m = 0; m <= 1; ++m) {
                auto p1 = projection(n, m, false), p2 = projection(n, m, true);
                auto ones = enumerateSpans(OperadId::Top, OperadId::Lo, {k}, {n + m}, 2);
                for (auto &s : ones)
                    for (auto &t : ones) {
                        auto cells = localHom(kMonoid, s, t);
                        auto first = localHom(kMonoid, composeSpan(s, p1), composeSpan(t, p1));
                        auto second = localHom(kMonoid, composeSpan(s, p2), composeSpan(t, p2));
                        CHECK(cells.size() == first.size() * second.size());
                        std::set<std::pair<std::string, std::string>> images;
                        for (auto &c : cells) {
                            auto a = whiskerRight(c, p1), b = whiskerRight(c, p2);
                            images.insert({a.key(), b.key()});
                        }
                        CHECK(images.size() == cells.size());
                    }
            }
}

TEST_CASE("cells must commute") {
    auto one = power(1), two = power(2);
    // a cell two => one whose c2 would reverse the order is rejected
    auto c2 = makeFA(OperadId::Lo, FinFunction::constant(2, 1, 1), {loOp({2, 1})});
    CHECK_THROWS_AS(makeCell(kMonoid, two, one, identityFA(OperadId::Bot, 2), c2), Error);
    auto ok = makeFA(OperadId::Lo, FinFunction::constant(2, 1, 1), {loOp({1, 2})});
    CHECK(makeCell(kMonoid, two, one, identityFA(OperadId::Bot, 2), ok) == localHom(kMonoid, two, one).front());
    CHECK_THROWS_AS(verticalCompose(identityCell(kMonoid, one), identityCell(kMonoid, two)), Error);
}
