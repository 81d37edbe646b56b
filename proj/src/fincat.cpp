#include "weights/fincat.hpp"

#include <algorithm>
#include <functional>

namespace weights {

// --- categories --------------------------------------------------------------

Nat FinCategory::compose(Nat g, Nat f) const {
    Nat r = table.at(g * arrowCount() + f);
    if (r == npos)
        throw Error("compose: " + arrows.at(g).id + " after " + arrows.at(f).id + " is not composable");
    return r;
}

Nat FinCategory::path(std::initializer_list<Nat> fs) const {
    if (fs.size() == 0) throw Error("path: empty");
    auto it = fs.begin();
    Nat acc = *it++;
    for (; it != fs.end(); ++it) acc = compose(*it, acc);
    return acc;
}

std::vector<Nat> FinCategory::hom(Nat a, Nat b) const {
    std::vector<Nat> out;
    for (Nat f = 0; f < arrowCount(); ++f)
        if (arrows[f].src == a && arrows[f].dst == b) out.push_back(f);
    return out;
}

std::optional<Nat> FinCategory::inverse(Nat f) const {
    for (Nat g : hom(dst(f), src(f)))
        if (compose(g, f) == id(src(f)) && compose(f, g) == id(dst(f))) return g;
    return std::nullopt;
}

Nat FinCategory::objectIndex(const std::string &name) const {
    auto it = std::find(objects.begin(), objects.end(), name);
    if (it == objects.end()) throw Error("unknown object '" + name + "'");
    return static_cast<Nat>(it - objects.begin());
}

Nat FinCategory::arrowIndex(const std::string &name) const {
    for (Nat f = 0; f < arrowCount(); ++f)
        if (arrows[f].id == name) return f;
    throw Error("unknown morphism '" + name + "'");
}

FinCategory makeCategory(std::vector<std::string> objects, std::vector<FinCategory::Arrow> arrows,
                         std::vector<Nat> identity, const std::vector<std::array<Nat, 3>> &composites) {
    FinCategory c{std::move(objects), std::move(arrows), std::move(identity), {}};
    Nat n = c.arrowCount();
    if (c.identity.size() != c.objectCount()) throw Error("category: one identity per object is required");
    for (auto &a : c.arrows)
        if (a.src >= c.objectCount() || a.dst >= c.objectCount()) throw Error("category: arrow " + a.id + " has a bad end");
    c.table.assign(n * n, npos);
    for (Nat a = 0; a < c.objectCount(); ++a) {
        Nat i = c.identity[a];
        if (i >= n || c.arrows[i].src != a || c.arrows[i].dst != a)
            throw Error("category: identity of " + c.objects[a] + " is not an endomorphism");
        for (Nat f = 0; f < n; ++f) {
            if (c.arrows[f].dst == a) c.table[i * n + f] = f;
            if (c.arrows[f].src == a) c.table[f * n + i] = f;
        }
    }
    for (auto &[g, f, gf] : composites) {
        if (g >= n || f >= n || gf >= n) throw Error("category: composite refers to an unknown arrow");
        Nat &slot = c.table[g * n + f];
        if (slot != npos && slot != gf)
            throw Error("category: two composites for " + c.arrows[g].id + " after " + c.arrows[f].id);
        slot = gf;
    }
    validateCategory(c);
    return c;
}

void validateCategory(const FinCategory &c) {
    Nat n = c.arrowCount();
    if (c.table.size() != n * n) throw Error("category: composition table has the wrong size");
    for (Nat g = 0; g < n; ++g)
        for (Nat f = 0; f < n; ++f) {
            Nat gf = c.table[g * n + f];
            bool composable = c.dst(f) == c.src(g);
            if (composable && gf == npos)
                throw Error("category: missing composite " + c.arrows[g].id + " after " + c.arrows[f].id);
            if (!composable && gf != npos)
                throw Error("category: composite of non-composable " + c.arrows[g].id + ", " + c.arrows[f].id);
            if (composable && (c.src(gf) != c.src(f) || c.dst(gf) != c.dst(g)))
                throw Error("category: composite " + c.arrows[g].id + " after " + c.arrows[f].id + " has wrong ends");
        }
    for (Nat a = 0; a < c.objectCount(); ++a)
        for (Nat f = 0; f < n; ++f) {
            if (c.dst(f) == a && c.compose(c.id(a), f) != f) throw Error("category: left unit law fails");
            if (c.src(f) == a && c.compose(f, c.id(a)) != f) throw Error("category: right unit law fails");
        }
    for (Nat f = 0; f < n; ++f)
        for (Nat g = 0; g < n; ++g) {
            if (c.dst(f) != c.src(g)) continue;
            Nat gf = c.table[g * n + f];
            for (Nat h = 0; h < n; ++h)
                if (c.dst(g) == c.src(h) && c.compose(h, gf) != c.compose(c.compose(h, g), f))
                    throw Error("category: associativity fails at " + c.arrows[h].id + ", " + c.arrows[g].id + ", " +
                                c.arrows[f].id);
        }
}

FinCategory opposite(const FinCategory &c) {
    FinCategory o = c;
    Nat n = c.arrowCount();
    for (auto &a : o.arrows) std::swap(a.src, a.dst);
    for (Nat g = 0; g < n; ++g)
        for (Nat f = 0; f < n; ++f) o.table[g * n + f] = c.table[f * n + g];
    return o;
}

FinCategory terminalCategory() { return makeCategory({"*"}, {{"id", 0, 0}}, {0}, {}); }

FinCategory discreteCategory(Nat n) {
    std::vector<std::string> objs;
    std::vector<FinCategory::Arrow> arrows;
    std::vector<Nat> ids;
    for (Nat i = 0; i < n; ++i) {
        objs.push_back(std::to_string(i));
        arrows.push_back({"id" + std::to_string(i), i, i});
        ids.push_back(i);
    }
    return makeCategory(objs, arrows, ids, {});
}

Nat tupleIndex(Nat base, const std::vector<Nat> &tuple) {
    Nat r = 0;
    for (Nat x : tuple) r = r * base + x;
    return r;
}

std::vector<Nat> tupleOf(Nat base, Nat n, Nat index) {
    std::vector<Nat> t(n);
    for (Nat i = n; i-- > 0;) {
        t[i] = index % base;
        index /= base;
    }
    return t;
}

namespace {

Nat ipow(Nat b, Nat e) {
    Nat r = 1;
    for (Nat i = 0; i < e; ++i) r *= b;
    return r;
}

std::string tupleName(const std::vector<std::string> &names) {
    std::string s = "(";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
    return s + ")";
}

} // namespace

FinCategory powerCategory(const FinCategory &c, Nat n) {
    Nat k = c.objectCount(), m = c.arrowCount();
    Nat objs = ipow(k, n), arrs = ipow(m, n);
    FinCategory p;
    for (Nat i = 0; i < objs; ++i) {
        std::vector<std::string> names;
        for (Nat x : tupleOf(k, n, i)) names.push_back(c.objects[x]);
        p.objects.push_back(tupleName(names));
    }
    for (Nat i = 0; i < arrs; ++i) {
        auto t = tupleOf(m, n, i);
        std::vector<std::string> names;
        std::vector<Nat> s, d;
        for (Nat f : t) {
            names.push_back(c.arrows[f].id);
            s.push_back(c.src(f));
            d.push_back(c.dst(f));
        }
        p.arrows.push_back({tupleName(names), tupleIndex(k, s), tupleIndex(k, d)});
    }
    for (Nat i = 0; i < objs; ++i) {
        std::vector<Nat> ids;
        for (Nat x : tupleOf(k, n, i)) ids.push_back(c.id(x));
        p.identity.push_back(tupleIndex(m, ids));
    }
    p.table.assign(arrs * arrs, npos);
    for (Nat g = 0; g < arrs; ++g)
        for (Nat f = 0; f < arrs; ++f) {
            if (p.arrows[f].dst != p.arrows[g].src) continue;
            auto tg = tupleOf(m, n, g), tf = tupleOf(m, n, f);
            std::vector<Nat> r(n);
            for (Nat i = 0; i < n; ++i) r[i] = c.compose(tg[i], tf[i]);
            p.table[g * arrs + f] = tupleIndex(m, r);
        }
    return p;
}

// --- functors ----------------------------------------------------------------

void validateFunctor(const FinFunctor &f, const FinCategory &c, const FinCategory &d) {
    if (f.onObjects.size() != c.objectCount() || f.onArrows.size() != c.arrowCount())
        throw Error("functor: table sizes do not match the source");
    for (Nat x : f.onObjects)
        if (x >= d.objectCount()) throw Error("functor: object out of range");
    for (Nat a = 0; a < c.arrowCount(); ++a) {
        Nat fa = f.onArrows[a];
        if (fa >= d.arrowCount() || d.src(fa) != f.onObjects[c.src(a)] || d.dst(fa) != f.onObjects[c.dst(a)])
            throw Error("functor: arrow " + c.arrows[a].id + " is sent to an arrow with the wrong ends");
    }
    for (Nat x = 0; x < c.objectCount(); ++x)
        if (f.onArrows[c.id(x)] != d.id(f.onObjects[x])) throw Error("functor: identity not preserved");
    for (Nat g = 0; g < c.arrowCount(); ++g)
        for (Nat a = 0; a < c.arrowCount(); ++a)
            if (c.dst(a) == c.src(g) && f.onArrows[c.compose(g, a)] != d.compose(f.onArrows[g], f.onArrows[a]))
                throw Error("functor: composition not preserved");
}

void validateNatTrans(const FinNatTrans &t, const FinFunctor &f, const FinFunctor &g, const FinCategory &c,
                      const FinCategory &d) {
    if (t.components.size() != c.objectCount()) throw Error("natural transformation: one component per object");
    for (Nat x = 0; x < c.objectCount(); ++x) {
        Nat tx = t.components[x];
        if (d.src(tx) != f.onObjects[x] || d.dst(tx) != g.onObjects[x])
            throw Error("natural transformation: component at " + c.objects[x] + " has the wrong ends");
    }
    for (Nat a = 0; a < c.arrowCount(); ++a)
        if (d.compose(g.onArrows[a], t.components[c.src(a)]) != d.compose(t.components[c.dst(a)], f.onArrows[a]))
            throw Error("natural transformation: square at " + c.arrows[a].id + " does not commute");
}

FinFunctor identityFunctor(const FinCategory &c) {
    FinFunctor f;
    for (Nat x = 0; x < c.objectCount(); ++x) f.onObjects.push_back(x);
    for (Nat a = 0; a < c.arrowCount(); ++a) f.onArrows.push_back(a);
    return f;
}

FinFunctor composeFunctors(const FinFunctor &f, const FinFunctor &g) {
    FinFunctor h;
    for (Nat x : f.onObjects) h.onObjects.push_back(g.onObjects.at(x));
    for (Nat a : f.onArrows) h.onArrows.push_back(g.onArrows.at(a));
    return h;
}

FinFunctor projectionFunctor(const FinCategory &c, Nat n, Nat i) {
    if (i >= n) throw Error("projection: index out of range");
    FinFunctor f;
    for (Nat x = 0; x < ipow(c.objectCount(), n); ++x) f.onObjects.push_back(tupleOf(c.objectCount(), n, x)[i]);
    for (Nat a = 0; a < ipow(c.arrowCount(), n); ++a) f.onArrows.push_back(tupleOf(c.arrowCount(), n, a)[i]);
    return f;
}

std::vector<FinFunctor> allFunctors(const FinCategory &c, const FinCategory &d) {
    std::vector<FinFunctor> out;
    Nat k = c.objectCount();
    FinFunctor f;
    f.onObjects.assign(k, 0);
    f.onArrows.assign(c.arrowCount(), npos);
    std::vector<Nat> free;
    for (Nat a = 0; a < c.arrowCount(); ++a)
        if (std::find(c.identity.begin(), c.identity.end(), a) == c.identity.end()) free.push_back(a);

    std::function<void(std::size_t)> arrowsFrom = [&](std::size_t i) {
        if (i == free.size()) {
            for (Nat g = 0; g < c.arrowCount(); ++g)
                for (Nat a = 0; a < c.arrowCount(); ++a)
                    if (c.dst(a) == c.src(g) && f.onArrows[c.compose(g, a)] != d.compose(f.onArrows[g], f.onArrows[a]))
                        return;
            out.push_back(f);
            return;
        }
        Nat a = free[i];
        for (Nat b : d.hom(f.onObjects[c.src(a)], f.onObjects[c.dst(a)])) {
            f.onArrows[a] = b;
            arrowsFrom(i + 1);
        }
    };
    std::function<void(Nat)> objectsFrom = [&](Nat x) {
        if (x == k) {
            for (Nat y = 0; y < k; ++y) f.onArrows[c.id(y)] = d.id(f.onObjects[y]);
            arrowsFrom(0);
            return;
        }
        for (Nat y = 0; y < d.objectCount(); ++y) {
            f.onObjects[x] = y;
            objectsFrom(x + 1);
        }
    };
    if (k == 0 || d.objectCount() > 0) objectsFrom(0);
    return out;
}

std::vector<FinNatTrans> allNatTrans(const FinFunctor &f, const FinFunctor &g, const FinCategory &c,
                                     const FinCategory &d) {
    std::vector<FinNatTrans> out;
    FinNatTrans t;
    t.components.assign(c.objectCount(), npos);
    std::function<void(Nat)> go = [&](Nat x) {
        if (x == c.objectCount()) {
            for (Nat a = 0; a < c.arrowCount(); ++a)
                if (d.compose(g.onArrows[a], t.components[c.src(a)]) != d.compose(t.components[c.dst(a)], f.onArrows[a]))
                    return;
            out.push_back(t);
            return;
        }
        for (Nat h : d.hom(f.onObjects[x], g.onObjects[x])) {
            t.components[x] = h;
            go(x + 1);
        }
    };
    go(0);
    return out;
}

// --- monoidal structure ------------------------------------------------------

Nat FinMonoidalCategory::assoc(Nat a, Nat b, Nat c) const {
    Nat n = base.objectCount();
    if (strict) return base.id(tensor(tensor(a, b), c));
    if (alpha.size() != n * n * n) throw Error("monoidal category: missing associator data");
    return alpha[(a * n + b) * n + c];
}

Nat FinMonoidalCategory::left(Nat a) const {
    if (strict) return base.id(a);
    if (lunit.size() != base.objectCount()) throw Error("monoidal category: missing left unitor data");
    return lunit[a];
}

Nat FinMonoidalCategory::right(Nat a) const {
    if (strict) return base.id(a);
    if (runit.size() != base.objectCount()) throw Error("monoidal category: missing right unitor data");
    return runit[a];
}

Nat FinMonoidalCategory::swap(Nat a, Nat b) const {
    if (!symmetric()) throw Error("monoidal category: no symmetry");
    return sym.at(a * base.objectCount() + b);
}

MonoidalReport validateMonoidal(const FinMonoidalCategory &c) {
    MonoidalReport rep;
    const FinCategory &C = c.base;
    Nat n = C.objectCount(), m = C.arrowCount();
    auto fail = [&](std::string s) { rep.violations.push_back(std::move(s)); };
    auto ends = [&](Nat f, Nat s, Nat d) { return f < m && C.src(f) == s && C.dst(f) == d; };
    if (c.tensorObjects.size() != n * n || c.tensorArrows.size() != m * m || c.unit >= n) {
        fail("tensor tables have the wrong size");
        return rep;
    }
    for (Nat f = 0; f < m; ++f)
        for (Nat g = 0; g < m; ++g) {
            Nat fg = c.tensorArrow(f, g);
            if (!ends(fg, c.tensor(C.src(f), C.src(g)), c.tensor(C.dst(f), C.dst(g))))
                fail("tensor of " + C.arrows[f].id + ", " + C.arrows[g].id + " has the wrong ends");
        }
    if (!rep.ok()) return rep;
    for (Nat a = 0; a < n; ++a)
        for (Nat b = 0; b < n; ++b)
            if (c.tensorArrow(C.id(a), C.id(b)) != C.id(c.tensor(a, b)))
                fail("tensor does not preserve identities at " + C.objects[a] + ", " + C.objects[b]);
    for (Nat f = 0; f < m; ++f)
        for (Nat g = 0; g < m; ++g) {
            if (C.dst(f) != C.src(g)) continue;
            for (Nat f2 = 0; f2 < m; ++f2)
                for (Nat g2 = 0; g2 < m; ++g2) {
                    if (C.dst(f2) != C.src(g2)) continue;
                    if (C.compose(c.tensorArrow(g, g2), c.tensorArrow(f, f2)) !=
                        c.tensorArrow(C.compose(g, f), C.compose(g2, f2))) {
                        fail("tensor is not functorial at " + C.arrows[g].id + " o " + C.arrows[f].id + ", " +
                             C.arrows[g2].id + " o " + C.arrows[f2].id);
                        goto functorialityDone;
                    }
                }
        }
functorialityDone:
    if (!rep.ok()) return rep;

    if (c.strict) {
        for (Nat a = 0; a < n; ++a) {
            if (c.tensor(a, c.unit) != a || c.tensor(c.unit, a) != a) fail("strict unit fails at " + C.objects[a]);
            for (Nat b = 0; b < n; ++b)
                for (Nat d = 0; d < n; ++d)
                    if (c.tensor(c.tensor(a, b), d) != c.tensor(a, c.tensor(b, d)))
                        fail("strict associativity fails on objects");
        }
        for (Nat f = 0; f < m; ++f) {
            Nat iu = C.id(c.unit);
            if (c.tensorArrow(f, iu) != f || c.tensorArrow(iu, f) != f) fail("strict unit fails at " + C.arrows[f].id);
            for (Nat g = 0; g < m; ++g)
                for (Nat h = 0; h < m; ++h)
                    if (c.tensorArrow(c.tensorArrow(f, g), h) != c.tensorArrow(f, c.tensorArrow(g, h))) {
                        fail("strict associativity fails on arrows");
                        goto strictDone;
                    }
        }
    strictDone:;
    } else {
        if (c.alpha.size() != n * n * n || c.lunit.size() != n || c.runit.size() != n) {
            fail("non-strict category without coherence data");
            return rep;
        }
        for (Nat a = 0; a < n; ++a) {
            if (!ends(c.left(a), c.tensor(c.unit, a), a) || !C.inverse(c.left(a))) fail("left unitor at " + C.objects[a]);
            if (!ends(c.right(a), c.tensor(a, c.unit), a) || !C.inverse(c.right(a)))
                fail("right unitor at " + C.objects[a]);
            for (Nat b = 0; b < n; ++b)
                for (Nat d = 0; d < n; ++d) {
                    Nat x = c.assoc(a, b, d);
                    if (!ends(x, c.tensor(c.tensor(a, b), d), c.tensor(a, c.tensor(b, d))) || !C.inverse(x))
                        fail("associator at " + C.objects[a] + "," + C.objects[b] + "," + C.objects[d]);
                }
        }
        if (!rep.ok()) return rep;
        for (Nat f = 0; f < m; ++f) {
            Nat s = C.src(f), d = C.dst(f);
            Nat iu = C.id(c.unit);
            if (C.compose(f, c.left(s)) != C.compose(c.left(d), c.tensorArrow(iu, f)))
                fail("left unitor is not natural at " + C.arrows[f].id);
            if (C.compose(f, c.right(s)) != C.compose(c.right(d), c.tensorArrow(f, iu)))
                fail("right unitor is not natural at " + C.arrows[f].id);
            for (Nat g = 0; g < m; ++g)
                for (Nat h = 0; h < m; ++h) {
                    Nat lhs = C.compose(c.tensorArrow(f, c.tensorArrow(g, h)), c.assoc(s, C.src(g), C.src(h)));
                    Nat rhs = C.compose(c.assoc(d, C.dst(g), C.dst(h)), c.tensorArrow(c.tensorArrow(f, g), h));
                    if (lhs != rhs) fail("associator is not natural");
                }
        }
        for (Nat a = 0; a < n; ++a)
            for (Nat b = 0; b < n; ++b) {
                // triangle: (1 * l) o alpha = r * 1
                Nat lhs = C.compose(c.tensorArrow(C.id(a), c.left(b)), c.assoc(a, c.unit, b));
                if (lhs != c.tensorArrow(c.right(a), C.id(b)))
                    fail("triangle fails at " + C.objects[a] + "," + C.objects[b]);
                for (Nat d = 0; d < n; ++d)
                    for (Nat e = 0; e < n; ++e) {
                        Nat p1 = C.compose(c.assoc(a, b, c.tensor(d, e)), c.assoc(c.tensor(a, b), d, e));
                        Nat p2 = C.path({c.tensorArrow(c.assoc(a, b, d), C.id(e)), c.assoc(a, c.tensor(b, d), e),
                                         c.tensorArrow(C.id(a), c.assoc(b, d, e))});
                        if (p1 != p2)
                            fail("pentagon fails at " + C.objects[a] + "," + C.objects[b] + "," + C.objects[d] + "," +
                                 C.objects[e]);
                    }
            }
    }
    if (!rep.ok() || !c.symmetric()) return rep;
    if (c.sym.size() != n * n) {
        fail("symmetry table has the wrong size");
        return rep;
    }
    for (Nat a = 0; a < n; ++a)
        for (Nat b = 0; b < n; ++b) {
            Nat s = c.swap(a, b);
            if (!ends(s, c.tensor(a, b), c.tensor(b, a))) {
                fail("symmetry at " + C.objects[a] + "," + C.objects[b] + " has the wrong ends");
                return rep;
            }
        }
    for (Nat a = 0; a < n; ++a)
        for (Nat b = 0; b < n; ++b) {
            if (C.compose(c.swap(b, a), c.swap(a, b)) != C.id(c.tensor(a, b)))
                fail("symmetry is not involutive at " + C.objects[a] + "," + C.objects[b]);
            for (Nat d = 0; d < n; ++d) {
                Nat lhs = C.path({c.assoc(a, b, d), c.swap(a, c.tensor(b, d)), c.assoc(b, d, a)});
                Nat rhs = C.path({c.tensorArrow(c.swap(a, b), C.id(d)), c.assoc(b, a, d),
                                  c.tensorArrow(C.id(b), c.swap(a, d))});
                if (lhs != rhs) fail("hexagon fails at " + C.objects[a] + "," + C.objects[b] + "," + C.objects[d]);
            }
        }
    for (Nat f = 0; f < m; ++f)
        for (Nat g = 0; g < m; ++g)
            if (C.compose(c.swap(C.dst(f), C.dst(g)), c.tensorArrow(f, g)) !=
                C.compose(c.tensorArrow(g, f), c.swap(C.src(f), C.src(g))))
                fail("symmetry is not natural at " + C.arrows[f].id + ", " + C.arrows[g].id);
    return rep;
}

FinMonoidalCategory oppositeMonoidal(const FinMonoidalCategory &c) {
    FinMonoidalCategory o = c;
    o.base = opposite(c.base);
    auto inv = [&](Nat f) {
        auto g = c.base.inverse(f);
        if (!g) throw Error("oppositeMonoidal: coherence component is not invertible");
        return *g;
    };
    for (auto &x : o.alpha) x = inv(x);
    for (auto &x : o.lunit) x = inv(x);
    for (auto &x : o.runit) x = inv(x);
    Nat n = c.base.objectCount();
    if (c.symmetric())
        for (Nat a = 0; a < n; ++a)
            for (Nat b = 0; b < n; ++b) o.sym[a * n + b] = c.swap(b, a);
    return o;
}

Nat evalObject(const FinMonoidalCategory &c, const BinWord &w, const std::vector<Nat> &objs) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return c.unit;
    case BinWord::Kind::Leaf: return objs.at(w.letter() - 1);
    case BinWord::Kind::Pair: return c.tensor(evalObject(c, w.left(), objs), evalObject(c, w.right(), objs));
    }
    return c.unit;
}

Nat evalArrow(const FinMonoidalCategory &c, const BinWord &w, const std::vector<Nat> &arrows) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return c.base.id(c.unit);
    case BinWord::Kind::Leaf: return arrows.at(w.letter() - 1);
    case BinWord::Kind::Pair: return c.tensorArrow(evalArrow(c, w.left(), arrows), evalArrow(c, w.right(), arrows));
    }
    return c.base.id(c.unit);
}

namespace {

using Objs = std::vector<Nat>;

Nat rightNested(const FinMonoidalCategory &c, const Objs &xs, std::size_t from = 0) {
    if (from == xs.size()) return c.unit;
    if (from + 1 == xs.size()) return xs[from];
    return c.tensor(xs[from], rightNested(c, xs, from + 1));
}

Nat leftNested(const FinMonoidalCategory &c, const Objs &xs, std::size_t upto) {
    if (upto == 0) return c.unit;
    if (upto == 1) return xs[0];
    return c.tensor(leftNested(c, xs, upto - 1), xs[upto - 1]);
}

/// rightNested(L) * rightNested(R) -> rightNested(L ++ R).
Nat mergeRight(const FinMonoidalCategory &c, const Objs &l, const Objs &r) {
    const FinCategory &C = c.base;
    if (l.empty()) return c.left(rightNested(c, r));
    if (r.empty()) return c.right(rightNested(c, l));
    if (l.size() == 1) return C.id(c.tensor(l[0], rightNested(c, r)));
    Objs rest(l.begin() + 1, l.end());
    Nat a = c.assoc(l[0], rightNested(c, rest), rightNested(c, r));
    return C.compose(c.tensorArrow(C.id(l[0]), mergeRight(c, rest, r)), a);
}

/// leftNested(L) * leftNested(R) -> leftNested(L ++ R).
Nat mergeLeft(const FinMonoidalCategory &c, const Objs &l, const Objs &r) {
    const FinCategory &C = c.base;
    if (l.empty()) return c.left(leftNested(c, r, r.size()));
    if (r.empty()) return c.right(leftNested(c, l, l.size()));
    if (r.size() == 1) return C.id(c.tensor(leftNested(c, l, l.size()), r[0]));
    Objs init(r.begin(), r.end() - 1);
    Nat z = r.back();
    Nat a = c.assoc(leftNested(c, l, l.size()), leftNested(c, init, init.size()), z);
    Nat ainv = *C.inverse(a);
    return C.compose(c.tensorArrow(mergeLeft(c, l, init), C.id(z)), ainv);
}

Objs leavesOf(const BinWord &w, const Objs &objs) {
    Objs out;
    for (Nat x : typeOf(w)) out.push_back(objs.at(x - 1));
    return out;
}

Nat normalize(const FinMonoidalCategory &c, const BinWord &w, const Objs &objs, NormalForm nf) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return c.base.id(c.unit);
    case BinWord::Kind::Leaf: return c.base.id(objs.at(w.letter() - 1));
    case BinWord::Kind::Pair: {
        Nat l = normalize(c, w.left(), objs, nf), r = normalize(c, w.right(), objs, nf);
        Objs ll = leavesOf(w.left(), objs), rl = leavesOf(w.right(), objs);
        Nat merge = nf == NormalForm::RightNested ? mergeRight(c, ll, rl) : mergeLeft(c, ll, rl);
        return c.base.compose(merge, c.tensorArrow(l, r));
    }
    }
    return c.base.id(c.unit);
}

} // namespace

Nat coherence(const FinMonoidalCategory &c, const BinWord &from, const BinWord &to, const std::vector<Nat> &objs,
              NormalForm nf) {
    if (typeOf(from) != typeOf(to)) throw Error("coherence: " + from.str() + " and " + to.str() + " differ in leaves");
    if (c.strict) {
        Nat a = evalObject(c, from, objs);
        return c.base.id(a);
    }
    Nat nTo = normalize(c, to, objs, nf);
    auto inv = c.base.inverse(nTo);
    if (!inv) throw Error("coherence: normalization is not invertible");
    return c.base.compose(*inv, normalize(c, from, objs, nf));
}

FinFunctor phiEvalOneCell(const FinMonoidalCategory &c, const MOneCell &cell) {
    Nat k = c.base.objectCount(), m = c.base.arrowCount(), n = cell.dom;
    FinFunctor f;
    for (Nat i = 0; i < ipow(k, n); ++i) {
        auto xs = tupleOf(k, n, i);
        std::vector<Nat> ys;
        for (auto &w : cell.words) ys.push_back(evalObject(c, w, xs));
        f.onObjects.push_back(tupleIndex(k, ys));
    }
    for (Nat i = 0; i < ipow(m, n); ++i) {
        auto fs = tupleOf(m, n, i);
        std::vector<Nat> gs;
        for (auto &w : cell.words) gs.push_back(evalArrow(c, w, fs));
        f.onArrows.push_back(tupleIndex(m, gs));
    }
    return f;
}

FinNatTrans phiEvalTwoCell(const FinMonoidalCategory &c, const MTwoCell &alpha) {
    if (!twoCellM(alpha.dom, alpha.cod)) throw Error("phiEvalTwoCell: no 2-cell between these 1-cells");
    if (!c.strict && (c.alpha.empty() || c.lunit.empty() || c.runit.empty()))
        throw Error("phiEvalTwoCell: non-strict category without coherence data");
    Nat k = c.base.objectCount(), m = c.base.arrowCount(), n = alpha.dom.dom;
    FinNatTrans t;
    for (Nat i = 0; i < ipow(k, n); ++i) {
        auto xs = tupleOf(k, n, i);
        std::vector<Nat> comps;
        for (Nat j = 0; j < alpha.dom.cod(); ++j) comps.push_back(coherence(c, alpha.dom.words[j], alpha.cod.words[j], xs));
        t.components.push_back(tupleIndex(m, comps));
    }
    return t;
}

// --- actions -------------------------------------------------------------------

void validateAction(const ActionDatum &a) {
    const FinMonoidalCategory &c = a.acting;
    const FinCategory &C = c.base, &D = a.space;
    auto rep = validateMonoidal(c);
    if (!rep.ok()) throw Error("action: acting category: " + rep.violations.front());
    validateCategory(D);
    Nat n = C.objectCount(), m = C.arrowCount(), p = D.objectCount(), q = D.arrowCount();
    if (a.actObjects.size() != n * p || a.actArrows.size() != m * q) throw Error("action: tables have the wrong size");
    if (!c.strict) throw Error("action: only strict actions are supported");
    for (Nat f = 0; f < m; ++f)
        for (Nat g = 0; g < q; ++g) {
            Nat fg = a.actArrow(f, g);
            if (fg >= q || D.src(fg) != a.act(C.src(f), D.src(g)) || D.dst(fg) != a.act(C.dst(f), D.dst(g)))
                throw Error("action: " + C.arrows[f].id + " . " + D.arrows[g].id + " has the wrong ends");
        }
    for (Nat x = 0; x < n; ++x)
        for (Nat y = 0; y < p; ++y)
            if (a.actArrow(C.id(x), D.id(y)) != D.id(a.act(x, y))) throw Error("action: identities not preserved");
    for (Nat f = 0; f < m; ++f)
        for (Nat f2 = 0; f2 < m; ++f2) {
            if (C.dst(f) != C.src(f2)) continue;
            for (Nat g = 0; g < q; ++g)
                for (Nat g2 = 0; g2 < q; ++g2)
                    if (D.dst(g) == D.src(g2) &&
                        D.compose(a.actArrow(f2, g2), a.actArrow(f, g)) != a.actArrow(C.compose(f2, f), D.compose(g2, g)))
                        throw Error("action: not functorial");
        }
    for (Nat y = 0; y < p; ++y) {
        if (a.act(c.unit, y) != y) throw Error("action: unit does not act trivially on " + D.objects[y]);
        for (Nat x = 0; x < n; ++x)
            for (Nat x2 = 0; x2 < n; ++x2)
                if (a.act(c.tensor(x, x2), y) != a.act(x, a.act(x2, y))) throw Error("action: not associative on objects");
    }
    for (Nat g = 0; g < q; ++g) {
        if (a.actArrow(C.id(c.unit), g) != g) throw Error("action: unit does not act trivially on arrows");
        for (Nat f = 0; f < m; ++f)
            for (Nat f2 = 0; f2 < m; ++f2)
                if (a.actArrow(c.tensorArrow(f, f2), g) != a.actArrow(f, a.actArrow(f2, g)))
                    throw Error("action: not associative on arrows");
    }
}

ActionDatum regularAction(const FinMonoidalCategory &c) {
    ActionDatum a{c, c.base, c.tensorObjects, c.tensorArrows};
    validateAction(a);
    return a;
}

// --- lax monoidal functors -------------------------------------------------------

void validateLax(const LaxMonoidalFunctor &lf, const FinMonoidalCategory &c, const FinMonoidalCategory &d) {
    const FinCategory &C = c.base, &D = d.base;
    const FinFunctor &F = lf.functor;
    validateFunctor(F, C, D);
    Nat n = C.objectCount();
    if (lf.phi.size() != n * n) throw Error("lax functor: one phi component per pair of objects");
    auto Fo = [&](Nat x) { return F.onObjects[x]; };
    auto Fa = [&](Nat f) { return F.onArrows[f]; };
    auto phi = [&](Nat x, Nat y) { return lf.phi[x * n + y]; };
    for (Nat x = 0; x < n; ++x)
        for (Nat y = 0; y < n; ++y) {
            Nat p = phi(x, y);
            if (p >= D.arrowCount() || D.src(p) != d.tensor(Fo(x), Fo(y)) || D.dst(p) != Fo(c.tensor(x, y)))
                throw Error("lax functor: phi at " + C.objects[x] + "," + C.objects[y] + " has the wrong ends");
        }
    if (lf.phiUnit >= D.arrowCount() || D.src(lf.phiUnit) != d.unit || D.dst(lf.phiUnit) != Fo(c.unit))
        throw Error("lax functor: unit comparison has the wrong ends");
    for (Nat f = 0; f < C.arrowCount(); ++f)
        for (Nat g = 0; g < C.arrowCount(); ++g) {
            Nat lhs = D.compose(Fa(c.tensorArrow(f, g)), phi(C.src(f), C.src(g)));
            Nat rhs = D.compose(phi(C.dst(f), C.dst(g)), d.tensorArrow(Fa(f), Fa(g)));
            if (lhs != rhs) throw Error("lax functor: phi is not natural");
        }
    for (Nat x = 0; x < n; ++x) {
        Nat fx = Fo(x);
        Nat lu = D.path({d.tensorArrow(lf.phiUnit, D.id(fx)), phi(c.unit, x), Fa(c.left(x))});
        if (lu != d.left(fx)) throw Error("lax functor: left unit coherence fails at " + C.objects[x]);
        Nat ru = D.path({d.tensorArrow(D.id(fx), lf.phiUnit), phi(x, c.unit), Fa(c.right(x))});
        if (ru != d.right(fx)) throw Error("lax functor: right unit coherence fails at " + C.objects[x]);
        for (Nat y = 0; y < n; ++y)
            for (Nat z = 0; z < n; ++z) {
                Nat lhs = D.path({d.tensorArrow(phi(x, y), D.id(Fo(z))), phi(c.tensor(x, y), z), Fa(c.assoc(x, y, z))});
                Nat rhs = D.path({d.assoc(Fo(x), Fo(y), Fo(z)), d.tensorArrow(D.id(fx), phi(y, z)), phi(x, c.tensor(y, z))});
                if (lhs != rhs) throw Error("lax functor: associativity coherence fails");
            }
    }
}

LaxMonoidalFunctor identityLax(const FinMonoidalCategory &c) {
    LaxMonoidalFunctor f{identityFunctor(c.base), {}, c.base.id(c.unit)};
    Nat n = c.base.objectCount();
    for (Nat x = 0; x < n; ++x)
        for (Nat y = 0; y < n; ++y) f.phi.push_back(c.base.id(c.tensor(x, y)));
    return f;
}

LaxMonoidalFunctor composeLax(const LaxMonoidalFunctor &f, const LaxMonoidalFunctor &g, const FinMonoidalCategory &mid,
                              const FinMonoidalCategory &target) {
    LaxMonoidalFunctor h;
    h.functor = composeFunctors(f.functor, g.functor);
    Nat n = f.functor.onObjects.size(), nm = mid.base.objectCount();
    const FinCategory &E = target.base;
    for (Nat x = 0; x < n; ++x)
        for (Nat y = 0; y < n; ++y) {
            Nat fx = f.functor.onObjects[x], fy = f.functor.onObjects[y];
            h.phi.push_back(E.compose(g.functor.onArrows[f.phi[x * n + y]], g.phi[fx * nm + fy]));
        }
    h.phiUnit = E.compose(g.functor.onArrows[f.phiUnit], g.phiUnit);
    return h;
}

} // namespace weights
