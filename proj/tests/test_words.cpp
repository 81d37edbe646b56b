#include "support/gen.hpp"
#include "weights/words.hpp"

#include <doctest.h>

using namespace weights;

static BinWord W(const char *s) { return BinWord::parse(s); }

TEST_CASE("type map") {
    CHECK(typeOf(W("e")).empty());
    CHECK(typeOf(W("(1*2)")) == TypeWord{1, 2});
    CHECK(typeOf(W("((1*e)*1)")) == TypeWord{1, 1});
}

TEST_CASE("substitution") {
    CHECK(substitute(W("(1*2)"), {W("1"), W("e")}) == W("(1*e)"));
    CHECK(substitute(W("1"), {W("(1*1)")}) == W("(1*1)"));
    CHECK(substitute(W("(1*1)"), {W("(1*2)")}) == W("((1*2)*(1*2))"));
    CHECK_THROWS_AS(substitute(W("(1*3)"), {W("1"), W("2")}), Error);
    CHECK_THROWS_AS(substitute(W("2"), {W("1")}), Error);
}

TEST_CASE("linearity") {
    CHECK(isLinear(W("(2*1)"), {1, 2}));
    CHECK_FALSE(isLinear(W("(1*1)"), {1}));
    CHECK(isLinear(W("(e*1)"), {1}));
    CHECK_FALSE(isLinear(W("(1*e)"), {1, 2}));
}

TEST_CASE("occurrences") {
    CHECK(occurrences(W("e")) == 0);
    CHECK(occurrences(W("(1*(1*e))")) == 2);
    CHECK(occurrences(W("((1*1)*1)")) == 3);
}

TEST_CASE("parser round-trips the renderer") {
    for (const char *s : {"e", "1", "17", "(1*e)", "((1*2)*(e*(3*1)))"}) CHECK(W(s).str() == s);
    for (const char *bad : {"", "(1*2", "(1 2)", "0", "x", "(1*2))", "((1*2)"}) CHECK_THROWS_AS(W(bad), Error);
    gen::Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        auto w = gen::word(rng, 3, 5);
        CHECK(BinWord::parse(w.str()) == w);
        CHECK(BinWord::parse(w.str()).str() == w.str());
    }
}

TEST_CASE("type of a substitution is the substituted type") {
    gen::Rng rng(22);
    for (int i = 0; i < 300; ++i) {
        Nat m = gen::uniform(rng, 1, 3), n = gen::uniform(rng, 1, 3);
        auto u = gen::word(rng, m, 4);
        std::vector<BinWord> args;
        for (Nat k = 0; k < m; ++k) args.push_back(gen::word(rng, n, 3));
        TypeWord expect;
        for (Nat x : typeOf(u)) {
            auto t = typeOf(args[x - 1]);
            expect.insert(expect.end(), t.begin(), t.end());
        }
        CHECK(typeOf(substitute(u, args)) == expect);
    }
}

TEST_CASE("substitution is associative") {
    gen::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        Nat m = gen::uniform(rng, 1, 3), n = gen::uniform(rng, 1, 3), k = gen::uniform(rng, 1, 3);
        auto u = gen::word(rng, m, 4);
        std::vector<BinWord> vs, ws;
        for (Nat j = 0; j < m; ++j) vs.push_back(gen::word(rng, n, 3));
        for (Nat j = 0; j < n; ++j) ws.push_back(gen::word(rng, k, 2));
        std::vector<BinWord> combined;
        for (auto &v : vs) combined.push_back(substitute(v, ws));
        CHECK(substitute(substitute(u, vs), ws) == substitute(u, combined));
    }
}

TEST_CASE("linear words have permutation types") {
    gen::Rng rng(24);
    int linear = 0;
    for (int i = 0; i < 2000; ++i) {
        auto w = gen::word(rng, 3, 4);
        if (!isLinear(w, {1, 2, 3})) continue;
        ++linear;
        auto t = typeOf(w);
        std::sort(t.begin(), t.end());
        CHECK(t == TypeWord{1, 2, 3});
    }
    CHECK(linear > 0);
}
