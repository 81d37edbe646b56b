#include "support/gen.hpp"
#include "weights/theory.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace weights;

namespace {

Nat binom(Nat n, Nat k) {
    if (k > n) return 0;
    Nat r = 1;
    for (Nat i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Nat factorial(Nat n) { return n <= 1 ? 1 : n * factorial(n - 1); }

Nat power(Nat b, Nat e) {
    Nat r = 1;
    for (Nat i = 0; i < e; ++i) r *= b;
    return r;
}

/// Weakly monotone maps (n] -> (m], counted as multisets of size n from m values.
Nat monotoneCount(Nat n, Nat m) {
    if (m == 0) return n == 0 ? 1 : 0;
    return binom(n + m - 1, n);
}

/// Words over (n] of depth at most d.
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

WObject obj(const std::string &s) { return parseWObject(s); }

/// x^k as the word 1 or ((..(1*1)..)*1); e for k = 0.
WObject powerWord(Nat k) {
    if (k == 0) return obj("e");
    std::string s = "1";
    for (Nat i = 1; i < k; ++i) s = "(" + s + "*1)";
    return obj(s);
}

/// x^k y as the term 2 or (1>(1>..2)).
WObject actionWord(Nat k) {
    std::string s = "2";
    for (Nat i = 0; i < k; ++i) s = "(1>" + s + ")";
    return obj(s);
}

MOneCell randomCell(gen::Rng &rng, Nat dom, Nat cod, Nat depth) {
    MOneCell c{dom, {}};
    for (Nat j = 0; j < cod; ++j) c.words.push_back(gen::word(rng, dom, depth));
    return c;
}

const WeightId kMonoid = weightFor(WeightTag::Monoid);

} // namespace

TEST_CASE("composition in M is substitution") {
    auto f = parseM("1,e"), g = parseM("(1*2)");
    CHECK(composeM(f, g).str() == "(1*e)");
    CHECK(composeM(f, g).dom == 1);
    CHECK(composeM(parseM("(1*2)"), parseM("(1*1)")).str() == "((1*2)*(1*2))");
    CHECK(composeM(identityM(2), g) == g);
    CHECK_THROWS_AS(composeM(parseM("1"), parseM("(1*2)")), Error);
    CHECK_THROWS_AS(makeM(1, {BinWord::leaf(2)}), Error);
    CHECK(parseM("1;e").str() == "1,e");
}

TEST_CASE("composition in M is associative and unital") {
    gen::Rng rng(71);
    for (int trial = 0; trial < 300; ++trial) {
        Nat a = gen::uniform(rng, 0, 3), b = gen::uniform(rng, 0, 3), c = gen::uniform(rng, 0, 3),
            d = gen::uniform(rng, 0, 3);
        auto f = randomCell(rng, a, b, 2), g = randomCell(rng, b, c, 2), h = randomCell(rng, c, d, 2);
        CHECK(composeM(composeM(f, g), h) == composeM(f, composeM(g, h)));
        CHECK(composeM(identityM(a), f) == f);
        CHECK(composeM(f, identityM(b)) == f);
    }
}

TEST_CASE("finite products in M") {
    auto p = productM(1, 1);
    CHECK(p.obj == 2);
    CHECK(p.p1.str() == "1");
    CHECK(p.p2.str() == "2");
    CHECK(pairingM(identityM(1), identityM(1)).str() == "1,1");
    CHECK(terminalM(3).cod() == 0);

    // Universal property: exhaustive over 1-cells (k] -> (n] and (k] -> (m] with n, m <= 2
    // and words of depth <= 1 in at most 2 letters.
    for (Nat k = 0; k <= 2; ++k) {
        auto ws = wordsOver(k, 1);
        for (Nat n = 0; n <= 2; ++n)
            for (Nat m = 0; m <= 2; ++m) {
                auto pr = productM(n, m);
                gen::Rng rng(k * 9 + n * 3 + m);
                for (int trial = 0; trial < 40; ++trial) {
                    MOneCell f{k, {}}, g{k, {}};
                    for (Nat j = 0; j < n; ++j) f.words.push_back(gen::pick(rng, ws));
                    for (Nat j = 0; j < m; ++j) g.words.push_back(gen::pick(rng, ws));
                    MOneCell h = pairingM(f, g);
                    CHECK(composeM(h, pr.p1) == f);
                    CHECK(composeM(h, pr.p2) == g);
                    // uniqueness: any h' with the same projections is h
                    CHECK(pairingM(composeM(h, pr.p1), composeM(h, pr.p2)) == h);
                }
            }
    }
    // (0] is terminal: the only 1-cell into it is the empty tuple.
    CHECK(composeM(parseM("(1*1)"), terminalM(1)) == terminalM(1));
}

TEST_CASE("2-cells of M") {
    CHECK(twoCellM(parseM("(1*(1*1))"), parseM("((1*1)*1)")).has_value());
    CHECK(twoCellM(parseM("(e*1)"), parseM("1")).has_value());
    CHECK_FALSE(twoCellM(parseM("1"), parseM("(1*1)")).has_value());
    CHECK_FALSE(twoCellM(parseM("(1*2)"), parseM("(2*1)")).has_value());
    CHECK_THROWS_AS(twoCellM(parseM("1"), parseM("1,1")), Error);

    auto g = generatorsM(2);
    CHECK(g.oneCells.size() == 5);
    CHECK(g.oneCells[3].dom == 0);
    CHECK(g.oneCells[3].str() == "e");
    CHECK(g.oneCells[4].str() == "(1*2)");
    CHECK(g.twoCells.size() == 3);
    CHECK(g.twoCells[2].dom.str() == "(1*e)");
}

TEST_CASE("M is the factorization of [top BTr] -> [top Lo]") {
    // 1-cells are those of [top BTr]: the image is injective.
    auto ws = wordsOver(2, 2);
    CHECK(ws.size() == 147);
    std::set<std::string> keys;
    for (auto &w : ws) keys.insert(imageM(makeM(2, {w})).key());
    CHECK(keys.size() == ws.size());

    // A 2-cell exists iff the images in [top Lo] agree (exhaustive, depth <= 2 in two
    // letters and depth <= 3 in one letter).
    auto check = [](const std::vector<BinWord> &words, Nat n) {
        std::vector<std::string> lo;
        for (auto &w : words) lo.push_back(imageM(makeM(n, {w}), OperadId::Lo).key());
        Nat agree = 0, cells = 0;
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = 0; j < words.size(); ++j) {
                bool cell = twoCellM(makeM(n, {words[i]}), makeM(n, {words[j]})).has_value();
                agree += cell == (lo[i] == lo[j]);
                cells += cell;
            }
        CHECK(agree == words.size() * words.size());
        return cells;
    };
    check(ws, 2);
    auto one = wordsOver(1, 3);
    CHECK(one.size() == 1446);
    check(one, 1);
}

TEST_CASE("images respect composition") {
    gen::Rng rng(5);
    for (OperadId b : {OperadId::BTr, OperadId::Lo, OperadId::Top})
        for (int trial = 0; trial < 200; ++trial) {
            Nat a = gen::uniform(rng, 0, 2), m = gen::uniform(rng, 0, 2), c = gen::uniform(rng, 0, 2);
            auto f = randomCell(rng, a, m, 2), g = randomCell(rng, m, c, 2);
            CHECK(imageM(composeM(f, g), b) == composeSpan(imageM(f, b), imageM(g, b)));
        }
}

TEST_CASE("weights") {
    CHECK(weightFor(WeightTag::Monoid).array.str() == "[bot lo / top lo]");
    CHECK(weightFor(WeightTag::Comonoid).array.str() == "[lo bot / top lo]");
    CHECK(weightFor(WeightTag::CMonoid).array.str() == "[bot top / top top]");
    CHECK(weightFor(WeightTag::Bimonoid).array.str() == "[lo lo / top top]");
    CHECK(weightFor(WeightTag::Action).array.str() == "[bot2 lo2 / top2 lo2]");
    CHECK(weightFor(WeightTag::Action).generators == OperadId::Act);
    CHECK(parseWeight("bimonoid") == WeightTag::Bimonoid);
    CHECK_THROWS_AS(parseWeight("group"), Error);

    auto a = obj("1,(1>2)");
    CHECK(a.n1 == 1);
    CHECK(a.leafIds() == std::vector<std::vector<Nat>>{{1}, {2, 3}});
    validateWObject(weightFor(WeightTag::Action), a);
    CHECK_THROWS_AS(validateWObject(kMonoid, a), Error);
    CHECK_THROWS_AS(obj("(1>2),1"), Error);
    CHECK_THROWS_AS(validateWObject(weightFor(WeightTag::Action), obj("(2>2)")), Error);
}

TEST_CASE("monoid weight: small hom-sets") {
    CHECK(homW(kMonoid, obj("(1*1)"), obj("1")).size() == 1);
    CHECK(homW(kMonoid, obj("1"), obj("(1*1)")).size() == 2);
    CHECK(homW(kMonoid, obj("e"), obj("e")).size() == 1);
    CHECK(homW(kMonoid, obj("1"), obj("e")).empty());
    CHECK_THROWS_AS(homW(kMonoid, obj("1"), obj("1,1")), Error);
}

TEST_CASE("monoid weight: closed form agrees with the array") {
    // Every pair of words of depth <= 2 with at most 3 occurrences.
    std::vector<WObject> objs;
    for (auto &o : objectsUpToDepth(1, 2))
        if (o.occurrences() <= 3) objs.push_back(o);
    Nat pairs = 0;
    for (auto &w : objs)
        for (auto &u : objs) {
            auto direct = homMonoid(w, u);
            CHECK(direct.size() == monotoneCount(w.occurrences(), u.occurrences()));
            std::vector<WMonTwoCell> viaArray;
            for (auto &c : homW(kMonoid, w, u)) viaArray.push_back(asMonotone(c));
            std::sort(viaArray.begin(), viaArray.end());
            CHECK(viaArray == direct);
            ++pairs;
        }
    CHECK(pairs == objs.size() * objs.size());
}

TEST_CASE("monoid weight: composition is composition of monotone maps") {
    std::vector<WObject> objs{obj("e"), obj("1"), obj("(1*1)"), obj("(1*(e*1))"), obj("((1*1)*1)")};
    for (auto &a : objs)
        for (auto &b : objs)
            for (auto &c : objs)
                for (auto &x : homW(kMonoid, a, b))
                    for (auto &y : homW(kMonoid, b, c)) {
                        auto fx = asMonotone(x).maps[0], fy = asMonotone(y).maps[0];
                        CHECK(asMonotone(composeW(kMonoid, x, y)).maps[0] == compose(fx, fy));
                    }
}

TEST_CASE("variant weights: hom counts") {
    auto comonoid = weightFor(WeightTag::Comonoid), cmonoid = weightFor(WeightTag::CMonoid),
         action = weightFor(WeightTag::Action), bimonoid = weightFor(WeightTag::Bimonoid);
    for (Nat k = 0; k <= 3; ++k)
        for (Nat l = 0; l <= 3; ++l) {
            CAPTURE(k);
            CAPTURE(l);
            CHECK(homW(comonoid, powerWord(k), powerWord(l)).size() == monotoneCount(l, k));
            CHECK(homW(cmonoid, powerWord(k), powerWord(l)).size() == power(l, k));
            CHECK(homW(action, actionWord(k), actionWord(l)).size() == binom(k + l, k));
        }
    // Bimonoid cells x => x are pairs of orders on an m-element middle set, up to
    // relabelling: m! of them for each m.
    for (Nat b = 0; b <= 3; ++b) {
        Nat expect = 0;
        for (Nat m = 0; m <= b; ++m) expect += factorial(m);
        CHECK(homW(bimonoid, obj("1"), obj("1"), b).size() == expect);
    }
    Nat expect = 0;
    for (Nat m = 0; m <= 2; ++m) expect += factorial(m + 1);
    CHECK(homW(bimonoid, obj("(1*1)"), obj("1"), 2).size() == expect);
}

TEST_CASE("W preserves finite products") {
    // W(2] -> W(1]^2 on objects of depth <= 1 (exhaustive) and a random sample of depth <= 3.
    auto pairs = objectsUpToDepth(2, 1);
    CHECK(pairs.size() == 36);
    auto check = [](const WObject &a, const WObject &b) {
        auto hom = homW(kMonoid, a, b);
        auto h0 = homW(kMonoid, wordObject({BinWord::parse(a.parts[0].str())}),
                       wordObject({BinWord::parse(b.parts[0].str())}));
        auto h1 = homW(kMonoid, wordObject({BinWord::parse(a.parts[1].str())}),
                       wordObject({BinWord::parse(b.parts[1].str())}));
        CHECK(hom.size() == h0.size() * h1.size());
        std::set<std::vector<FinFunction>> seen;
        for (auto &c : hom) seen.insert(asMonotone(c).maps);
        std::set<std::vector<FinFunction>> product;
        for (auto &x : h0)
            for (auto &y : h1) product.insert({asMonotone(x).maps[0], asMonotone(y).maps[0]});
        CHECK(seen == product);
    };
    for (auto &a : pairs)
        for (auto &b : pairs) check(a, b);
    auto deep = wordsUpToDepth(3);
    gen::Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        WObject a = wordObject({gen::pick(rng, deep), gen::pick(rng, deep)});
        WObject b = wordObject({gen::pick(rng, deep), gen::pick(rng, deep)});
        if (a.occurrences() + b.occurrences() > 8) continue;
        check(a, b);
    }
    // The projections W(p_i) pick out the components.
    auto pr = productM(1, 1);
    CHECK(weightOnOneCell(pr.p1, obj("(1*1),e")).str() == "(1*1)");
    CHECK(weightOnOneCell(pr.p2, obj("(1*1),e")).str() == "e");
}

TEST_CASE("W on 1-cells is substitution and is functorial") {
    CHECK(weightOnOneCell(parseM("(1*2)"), obj("1,(1*1)")).str() == "(1*(1*1))");
    CHECK(weightOnOneCell(MOneCell{0, {BinWord::unit()}}, WObject{}).str() == "e");
    CHECK(weightOnOneCell(identityM(2), obj("1,e")).str() == "1,e");

    gen::Rng rng(23);
    auto small = wordsUpToDepth(1);
    for (int trial = 0; trial < 200; ++trial) {
        auto f = randomCell(rng, 2, 2, 1), g = randomCell(rng, 2, 1, 1);
        WObject o = wordObject({gen::pick(rng, small), gen::pick(rng, small)});
        CHECK(weightOnOneCell(composeM(f, g), o) == weightOnOneCell(g, weightOnOneCell(f, o)));
    }
    // On morphisms: functorial in the 1-cell and in vertical composition.
    std::vector<WObject> objs{obj("1,1"), obj("(1*1),e"), obj("1,(1*1)")};
    std::vector<MOneCell> cells{parseM("(1*2)", 2), parseM("(2*1)", 2), parseM("1,(2*e)", 2)};
    for (auto &a : objs)
        for (auto &b : objs)
            for (auto &x : homW(kMonoid, a, b))
                for (auto &f : cells) {
                    auto fx = weightOnOneCell(kMonoid, f, x);
                    CHECK(fx.dom == weightOnOneCell(f, a));
                    for (auto &g : {parseM("(1*1)"), parseM("1,1")})
                        if (g.dom == f.cod())
                            CHECK(weightOnOneCell(kMonoid, composeM(f, g), x) ==
                                  weightOnOneCell(kMonoid, g, fx));
                    for (auto &c : objs)
                        for (auto &y : homW(kMonoid, b, c))
                            CHECK(weightOnOneCell(kMonoid, f, composeW(kMonoid, x, y)) ==
                                  composeW(kMonoid, fx, weightOnOneCell(kMonoid, f, y)));
                }
}

TEST_CASE("W on 2-cells traces occurrences") {
    auto lunit = *twoCellM(parseM("(e*1)"), parseM("1"));
    auto c = weightOnTwoCell(kMonoid, lunit, obj("(1*1)"));
    CHECK(c.dom.str() == "(e*(1*1))");
    CHECK(c.cod.str() == "(1*1)");
    CHECK(asMonotone(c).maps[0] == FinFunction::identity(2));

    auto assoc = *twoCellM(parseM("(1*(2*3))"), parseM("((1*2)*3)"));
    auto a = weightOnTwoCell(kMonoid, assoc, obj("1,1,1"));
    CHECK(a.dom.str() == "(1*(1*1))");
    CHECK(a.cod.str() == "((1*1)*1)");
    CHECK(asMonotone(a).maps[0] == FinFunction::identity(3));

    auto same = *twoCellM(parseM("(1*2)"), parseM("(1*2)"));
    CHECK(weightOnTwoCell(kMonoid, same, obj("1,e")) == identityW(kMonoid, obj("(1*e)")));

    // 2-naturality in the object: W(alpha)_b o W(dom)(x) = W(cod)(x) o W(alpha)_a.
    auto runit = *twoCellM(parseM("(1*e)"), parseM("1"));
    for (auto &alpha : {lunit, runit})
        for (auto &p : {obj("1"), obj("(1*1)"), obj("e")})
            for (auto &q : {obj("1"), obj("(1*1)"), obj("e")})
                for (auto &x : homW(kMonoid, p, q)) {
                    auto lhs = composeW(kMonoid, weightOnOneCell(kMonoid, alpha.dom, x), weightOnTwoCell(kMonoid, alpha, q));
                    auto rhs = composeW(kMonoid, weightOnTwoCell(kMonoid, alpha, p), weightOnOneCell(kMonoid, alpha.cod, x));
                    CHECK(lhs == rhs);
                }
    for (auto tag : {WeightTag::Comonoid, WeightTag::CMonoid, WeightTag::Bimonoid}) {
        auto w = weightFor(tag);
        auto x = weightOnTwoCell(w, assoc, obj("1,(1*1),e"));
        CHECK(x.occ.m == 3);
        for (Nat i = 1; i <= 3; ++i) CHECK(x.occ.split[i - 1] == x.occ.merge[i - 1]);
    }
}

namespace {

/// Middle elements renamed by their position in the split order; unordered merge
/// lists sorted.
OccurrenceCell relabel(const OccurrenceCell &c, bool mergeOrdered) {
    std::vector<Nat> rename(c.m + 1, 0);
    Nat next = 0;
    OccurrenceCell out{c.m, c.split, c.merge};
    for (auto &l : out.split)
        for (auto &k : l) k = rename[k] = ++next;
    for (auto &l : out.merge) {
        for (auto &k : l) k = rename[k];
        if (!mergeOrdered) std::sort(l.begin(), l.end());
    }
    return out;
}

} // namespace

TEST_CASE("occurrence-level composition agrees with vertical composition") {
    std::vector<WObject> objs{obj("e"), obj("1"), obj("(1*1)"), obj("(e*1)"), obj("((1*1)*1)")};
    for (auto tag : {WeightTag::Monoid, WeightTag::Comonoid, WeightTag::CMonoid, WeightTag::Bimonoid}) {
        auto w = weightFor(tag);
        bool ordered = tag != WeightTag::CMonoid;
        Nat apex = tag == WeightTag::Bimonoid ? 2 : 4;
        Nat pairs = 0;
        for (auto &a : objs)
            for (auto &b : objs)
                for (auto &c : objs) {
                    if (tag == WeightTag::Bimonoid && a.occurrences() + b.occurrences() + c.occurrences() > 5) continue;
                    for (auto &x : homW(w, a, b, apex))
                        for (auto &y : homW(w, b, c, apex)) {
                            CHECK(relabel(composeOccurrences(x.occ, y.occ), ordered) ==
                                  relabel(composeW(w, x, y).occ, ordered));
                            ++pairs;
                        }
                }
        CHECK(pairs > 0);
    }
    auto action = weightFor(WeightTag::Action);
    std::vector<WObject> terms{obj("2"), obj("(1>2)"), obj("(e>2)"), obj("(1>(1>2))")};
    for (auto &a : terms)
        for (auto &b : terms)
            for (auto &c : terms)
                for (auto &x : homW(action, a, b))
                    for (auto &y : homW(action, b, c))
                        CHECK(relabel(composeOccurrences(x.occ, y.occ), true) ==
                              relabel(composeW(action, x, y).occ, true));

    for (auto &a : objs)
        for (auto &b : objs)
            for (auto &x : homW(kMonoid, a, b)) CHECK(occurrencesOf(asMonotone(x)) == relabel(x.occ, true));
}
