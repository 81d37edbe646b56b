#include "weights/limits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <tuple>

namespace weights {

VariantObject asVariant(const MonoidObject &m) {
    VariantObject o;
    o.carrier = m.carrier;
    o.mul = m.mul;
    o.unit = m.unit;
    return o;
}

// --- structure categories --------------------------------------------------------

std::string render(const FinMonoidalCategory &c, const VariantObject &o, const ActionDatum *action) {
    const FinCategory &C = c.base;
    std::string s = C.objects.at(o.carrier);
    auto add = [&](const char *name, Nat f, const FinCategory &in) {
        if (f != npos) s += std::string(" ") + name + "=" + in.arrows.at(f).id;
    };
    add("mu", o.mul, C);
    add("eta", o.unit, C);
    add("delta", o.comul, C);
    add("eps", o.counit, C);
    if (o.space != npos) {
        if (!action) throw Error("render: action object without an action");
        s += " on " + action->space.objects.at(o.space);
        add("act", o.act, action->space);
    }
    return s;
}

StructureCategory assembleStructures(WeightTag tag, std::vector<VariantObject> objects,
                                     std::vector<StructureHom> homs, const FinMonoidalCategory &c,
                                     const ActionDatum *action) {
    const FinCategory &C = c.base;
    std::vector<VariantObject> sorted = objects;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("structures: duplicate object");
    std::vector<Nat> where(objects.size());
    for (Nat i = 0; i < objects.size(); ++i)
        where[i] = std::lower_bound(sorted.begin(), sorted.end(), objects[i]) - sorted.begin();
    for (auto &h : homs) {
        h.src = where.at(h.src);
        h.dst = where.at(h.dst);
    }
    std::sort(homs.begin(), homs.end());
    if (std::adjacent_find(homs.begin(), homs.end()) != homs.end()) throw Error("structures: duplicate morphism");

    StructureCategory s{tag, std::move(sorted), std::move(homs), {}};
    auto find = [&](const StructureHom &h) -> Nat {
        auto it = std::lower_bound(s.homs.begin(), s.homs.end(), h);
        return it != s.homs.end() && *it == h ? Nat(it - s.homs.begin()) : npos;
    };
    const FinCategory *D = action ? &action->space : nullptr;
    std::vector<std::string> names;
    for (auto &o : s.objects) names.push_back(render(c, o, action));
    std::vector<FinCategory::Arrow> arrows;
    for (Nat i = 0; i < s.homs.size(); ++i) {
        auto &h = s.homs[i];
        std::string id = std::to_string(h.src) + "->" + std::to_string(h.dst) + ":" + C.arrows.at(h.onCarrier).id;
        if (h.onSpace != npos) id += "," + D->arrows.at(h.onSpace).id;
        arrows.push_back({id, h.src, h.dst});
    }
    std::vector<Nat> ids;
    for (Nat i = 0; i < s.objects.size(); ++i) {
        auto &o = s.objects[i];
        StructureHom h{i, i, C.id(o.carrier), o.space == npos ? npos : D->id(o.space)};
        Nat k = find(h);
        if (k == npos) throw Error("structures: no identity on " + names[i]);
        ids.push_back(k);
    }
    std::vector<std::array<Nat, 3>> comps;
    for (Nat g = 0; g < s.homs.size(); ++g)
        for (Nat f = 0; f < s.homs.size(); ++f) {
            auto &hf = s.homs[f], &hg = s.homs[g];
            if (hf.dst != hg.src) continue;
            StructureHom gf{hf.src, hg.dst, C.compose(hg.onCarrier, hf.onCarrier),
                            hf.onSpace == npos ? npos : D->compose(hg.onSpace, hf.onSpace)};
            Nat k = find(gf);
            if (k == npos) throw Error("structures: morphisms are not closed under composition");
            comps.push_back({g, f, k});
        }
    s.category = makeCategory(std::move(names), std::move(arrows), std::move(ids), comps);
    return s;
}

std::optional<std::string> compareOverC(const StructureCategory &a, const StructureCategory &b) {
    if (a.tag != b.tag) return "different weights";
    if (a.objects.size() != b.objects.size())
        return "object counts differ: " + std::to_string(a.objects.size()) + " vs " + std::to_string(b.objects.size());
    for (Nat i = 0; i < a.objects.size(); ++i)
        if (!(a.objects[i] == b.objects[i])) return "object " + a.category.objects[i] + " has no counterpart";
    if (a.homs.size() != b.homs.size())
        return "morphism counts differ: " + std::to_string(a.homs.size()) + " vs " + std::to_string(b.homs.size());
    for (Nat i = 0; i < a.homs.size(); ++i)
        if (!(a.homs[i] == b.homs[i])) return "morphism " + a.category.arrows[i].id + " has no counterpart";
    if (a.category.table != b.category.table) return "composition differs";
    return std::nullopt;
}

FinFunctor forgetful(const StructureCategory &s) {
    FinFunctor f;
    for (auto &o : s.objects) f.onObjects.push_back(o.carrier);
    for (auto &h : s.homs) f.onArrows.push_back(h.onCarrier);
    return f;
}

// --- tau -------------------------------------------------------------------------

namespace {

BinWord rightNested(const std::vector<BinWord> &items) {
    if (items.empty()) return BinWord::unit();
    BinWord acc = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;) acc = BinWord::pair(items[i], acc);
    return acc;
}

/// Leaves from+1 .. from+k, right nested; e when k = 0.
BinWord flat(Nat from, Nat k) {
    std::vector<BinWord> items;
    for (Nat i = 1; i <= k; ++i) items.push_back(BinWord::leaf(from + i));
    return rightNested(items);
}

/// Blocks of consecutive leaves, each right nested, then nested to the right.
BinWord blocks(const std::vector<Nat> &sizes) {
    std::vector<BinWord> items;
    Nat from = 0;
    for (Nat s : sizes) {
        items.push_back(flat(from, s));
        from += s;
    }
    return rightNested(items);
}

BinWord numbered(const BinWord &w, Nat &next) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return w;
    case BinWord::Kind::Leaf: return BinWord::leaf(++next);
    case BinWord::Kind::Pair: {
        BinWord l = numbered(w.left(), next);
        return BinWord::pair(l, numbered(w.right(), next));
    }
    }
    return w;
}

BinWord numbered(const BinWord &w) {
    Nat next = 0;
    return numbered(w, next);
}

BinWord asWord(const ActTerm &t) {
    switch (t.kind()) {
    case ActTerm::Kind::Unit: return BinWord::unit();
    case ActTerm::Kind::Leaf: return BinWord::leaf(1);
    case ActTerm::Kind::Mul: return BinWord::pair(asWord(t.left()), asWord(t.right()));
    case ActTerm::Kind::Act: break;
    }
    throw Error("not a color-0 term: " + t.str());
}

bool isColorOne(const ActTerm &t) {
    if (t.kind() == ActTerm::Kind::Act) return true;
    if (t.kind() == ActTerm::Kind::Leaf) return t.letter() == 2;
    return false;
}

/// tau for one structure at one object of the vertex.
class Tau {
public:
    Tau(const FinMonoidalCategory &c, const VariantObject &s, bool mergeOrdered, const ActionDatum *action)
        : c_(c), C_(c.base), s_(s), mergeOrdered_(mergeOrdered), action_(action) {}

    /// One morphism per part: in C for color-0 parts, in the space for color-1 parts.
    std::vector<Nat> cell(const WObject &dom, const WObject &cod, const OccurrenceCell &occ) {
        auto domIds = dom.leafIds(), codIds = cod.leafIds();
        std::vector<Nat> out;
        for (std::size_t j = 0; j < dom.parts.size(); ++j) {
            std::vector<std::vector<Nat>> split, merge;
            for (Nat k : domIds[j]) split.push_back(occ.split.at(k - 1));
            for (Nat k : codIds[j]) merge.push_back(occ.merge.at(k - 1));
            if (isColorOne(dom.parts[j]))
                out.push_back(colorOne(split, merge));
            else
                out.push_back(colorZero(asWord(dom.parts[j]), asWord(cod.parts[j]), split, merge));
        }
        return out;
    }

    /// Evaluation of an object at the carrier (and space).
    std::vector<Nat> object(const WObject &o) const {
        std::vector<Nat> out;
        for (auto &p : o.parts) out.push_back(termObject(p, s_.carrier, s_.space));
        return out;
    }

    Nat termObject(const ActTerm &t, Nat m, Nat x) const {
        switch (t.kind()) {
        case ActTerm::Kind::Unit: return c_.unit;
        case ActTerm::Kind::Leaf: return t.letter() == 1 ? m : x;
        case ActTerm::Kind::Mul: return c_.tensor(termObject(t.left(), m, x), termObject(t.right(), m, x));
        case ActTerm::Kind::Act: return action_->act(termObject(t.left(), m, x), termObject(t.right(), m, x));
        }
        return c_.unit;
    }

    Nat termArrow(const ActTerm &t, Nat h, Nat k) const {
        switch (t.kind()) {
        case ActTerm::Kind::Unit: return C_.id(c_.unit);
        case ActTerm::Kind::Leaf: return t.letter() == 1 ? h : k;
        case ActTerm::Kind::Mul: return c_.tensorArrow(termArrow(t.left(), h, k), termArrow(t.right(), h, k));
        case ActTerm::Kind::Act: return action_->actArrow(termArrow(t.left(), h, k), termArrow(t.right(), h, k));
        }
        return C_.id(c_.unit);
    }

private:
    Nat M() const { return s_.carrier; }

    Nat coh(const BinWord &from, const BinWord &to) {
        if (c_.strict) return C_.id(evalObject(c_, from, std::vector<Nat>(typeOf(from).size(), M())));
        return coherence(c_, from, to, std::vector<Nat>(typeOf(from).size(), M()));
    }

    Nat tensorR(const std::vector<Nat> &fs) const {
        if (fs.empty()) return C_.id(c_.unit);
        Nat acc = fs.back();
        for (std::size_t i = fs.size() - 1; i-- > 0;) acc = c_.tensorArrow(fs[i], acc);
        return acc;
    }

    Nat mulK(Nat k) {
        if (k == 0) return need(s_.unit, "unit");
        if (k == 1) return C_.id(M());
        return C_.compose(need(s_.mul, "multiplication"), c_.tensorArrow(C_.id(M()), mulK(k - 1)));
    }

    Nat comulK(Nat k) {
        if (k == 0) return need(s_.counit, "counit");
        if (k == 1) return C_.id(M());
        return C_.compose(c_.tensorArrow(C_.id(M()), comulK(k - 1)), need(s_.comul, "comultiplication"));
    }

    Nat actK(Nat k) {
        const FinCategory &D = action_->space;
        if (k == 0) return D.id(s_.space);
        return D.compose(need(s_.act, "action"), action_->actArrow(C_.id(M()), actK(k - 1)));
    }

    static Nat need(Nat f, const char *what) {
        if (f == npos) throw Error(std::string("tau: the structure has no ") + what);
        return f;
    }

    /// Adjacent transposition of factors p, p+1 of the right-nested n-fold power.
    Nat swapAt(Nat n, Nat p) {
        if (!c_.symmetric()) throw Error("tau: permuting occurrences needs a symmetry");
        std::vector<BinWord> items, hItems;
        std::vector<Nat> arrows;
        for (Nat i = 0; i < n; ++i) {
            if (i == p) {
                items.push_back(BinWord::pair(BinWord::leaf(i + 1), BinWord::leaf(i + 2)));
                arrows.push_back(c_.swap(M(), M()));
                ++i;
            } else {
                items.push_back(BinWord::leaf(i + 1));
                arrows.push_back(C_.id(M()));
            }
            hItems.push_back(BinWord::leaf(hItems.size() + 1));
        }
        BinWord g = rightNested(items), f = flat(0, n);
        Nat mid = evalArrow(c_, rightNested(hItems), arrows);
        return C_.path({coh(f, g), mid, coh(g, f)});
    }

    Nat permute(std::vector<Nat> cur, const std::vector<Nat> &target) {
        Nat acc = C_.id(evalObject(c_, flat(0, cur.size()), std::vector<Nat>(cur.size(), M())));
        for (Nat i = 0; i < target.size(); ++i) {
            Nat pos = std::find(cur.begin() + i, cur.end(), target[i]) - cur.begin();
            if (pos == cur.size()) throw Error("tau: a middle element changes part");
            for (Nat q = pos; q > i; --q) {
                acc = C_.compose(swapAt(cur.size(), q - 1), acc);
                std::swap(cur[q], cur[q - 1]);
            }
        }
        return acc;
    }

    Nat colorZero(const BinWord &dom, const BinWord &cod, const std::vector<std::vector<Nat>> &split,
                  std::vector<std::vector<Nat>> merge) {
        std::vector<Nat> s1, sizes;
        bool plainSplit = true;
        for (auto &l : split) {
            s1.insert(s1.end(), l.begin(), l.end());
            sizes.push_back(l.size());
            plainSplit &= l.size() == 1;
        }
        Nat acc = coh(numbered(dom), flat(0, split.size()));
        if (!plainSplit) {
            std::vector<Nat> fs;
            for (Nat s : sizes) fs.push_back(comulK(s));
            acc = C_.path({acc, tensorR(fs), coh(blocks(sizes), flat(0, s1.size()))});
        }
        if (!mergeOrdered_) {
            std::map<Nat, Nat> pos;
            for (Nat i = 0; i < s1.size(); ++i) pos[s1[i]] = i;
            for (auto &l : merge) std::sort(l.begin(), l.end(), [&](Nat a, Nat b) { return pos.at(a) < pos.at(b); });
        }
        std::vector<Nat> s2, tsizes;
        bool plainMerge = true;
        for (auto &l : merge) {
            s2.insert(s2.end(), l.begin(), l.end());
            tsizes.push_back(l.size());
            plainMerge &= l.size() == 1;
        }
        if (s1.size() != s2.size()) throw Error("tau: a middle element changes part");
        if (s1 != s2) acc = C_.compose(permute(s1, s2), acc);
        if (!plainMerge) {
            std::vector<Nat> fs;
            for (Nat t : tsizes) fs.push_back(mulK(t));
            acc = C_.path({acc, coh(flat(0, s2.size()), blocks(tsizes)), tensorR(fs)});
        }
        return C_.compose(coh(flat(0, merge.size()), numbered(cod)), acc);
    }

    /// Strict actions only: the value is actArrow(mu-contractions, act-contraction).
    Nat colorOne(const std::vector<std::vector<Nat>> &split, const std::vector<std::vector<Nat>> &merge) {
        if (!action_) throw Error("tau: color-1 part without an action");
        std::vector<Nat> s1, s2;
        for (auto &l : split) {
            if (l.size() != 1) throw Error("tau: split in a color-1 part");
            s1.push_back(l.front());
        }
        for (auto &l : merge) s2.insert(s2.end(), l.begin(), l.end());
        if (s1 != s2) throw Error("tau: permutation in a color-1 part");
        std::vector<Nat> fs;
        for (std::size_t j = 0; j + 1 < merge.size(); ++j) fs.push_back(mulK(merge[j].size()));
        return action_->actArrow(tensorR(fs), actK(merge.back().size() - 1));
    }

    const FinMonoidalCategory &c_;
    const FinCategory &C_;
    VariantObject s_;
    bool mergeOrdered_;
    const ActionDatum *action_;
};

bool mergeOrdered(WeightTag tag) { return tag != WeightTag::CMonoid; }

Nat laws(const FinMonoidalCategory &c, Nat m, Nat mu, Nat eta) {
    const FinCategory &C = c.base;
    Nat one = C.id(m);
    Nat lhs = C.path({c.assoc(m, m, m), c.tensorArrow(one, mu), mu});
    Nat rhs = C.compose(mu, c.tensorArrow(mu, one));
    if (lhs != rhs) return 1;
    if (C.compose(mu, c.tensorArrow(eta, one)) != c.left(m)) return 2;
    if (C.compose(mu, c.tensorArrow(one, eta)) != c.right(m)) return 3;
    return 0;
}

} // namespace

// --- cones -----------------------------------------------------------------------

void validateConeShape(const FinMonoidalCategory &c, const WCone &cone) {
    const FinCategory &C = c.base, &X = cone.vertex;
    validateFunctor(cone.f, X, C);
    if (cone.mu.components.size() != X.objectCount() || cone.eta.components.size() != X.objectCount())
        throw Error("cone: one component per object of the vertex");
    for (Nat x = 0; x < X.objectCount(); ++x) {
        Nat m = cone.f.onObjects[x], mu = cone.mu.components[x], eta = cone.eta.components[x];
        if (C.src(mu) != c.tensor(m, m) || C.dst(mu) != m) throw Error("cone: mu has the wrong ends");
        if (C.src(eta) != c.unit || C.dst(eta) != m) throw Error("cone: eta has the wrong ends");
    }
    for (Nat g = 0; g < X.arrowCount(); ++g) {
        Nat x = X.src(g), y = X.dst(g), fg = cone.f.onArrows[g];
        if (C.compose(cone.mu.components[y], c.tensorArrow(fg, fg)) != C.compose(fg, cone.mu.components[x]))
            throw Error("cone: mu is not natural");
        if (cone.eta.components[y] != C.compose(fg, cone.eta.components[x])) throw Error("cone: eta is not natural");
    }
}

bool checkConeLaws(const FinMonoidalCategory &c, const WCone &cone) {
    validateConeShape(c, cone);
    for (Nat x = 0; x < cone.vertex.objectCount(); ++x)
        if (laws(c, cone.f.onObjects[x], cone.mu.components[x], cone.eta.components[x]) != 0) return false;
    return true;
}

WCone coneFromMonoid(const FinMonoidalCategory &c, const MonoidObject &m) {
    WCone cone{terminalCategory(), {{m.carrier}, {c.base.id(m.carrier)}}, {{m.mul}}, {{m.unit}}};
    validateConeShape(c, cone);
    if (!checkConeLaws(c, cone)) throw Error("coneFromMonoid: not a monoid");
    return cone;
}

namespace {

VariantObject structureAt(const WCone &cone, Nat x) {
    VariantObject o;
    o.carrier = cone.f.onObjects[x];
    o.mul = cone.mu.components[x];
    o.unit = cone.eta.components[x];
    return o;
}

/// Objects of W(1] up to a word depth with all their morphisms, cached per depth.
struct MonoidTruncation {
    struct Hom {
        std::vector<WMonTwoCell> cells;
        std::vector<OccurrenceCell> occ;
        std::map<std::vector<Nat>, Nat> index; ///< by image vector
    };
    std::vector<WObject> objs;
    std::map<std::string, Nat> objIndex;
    std::vector<Hom> homs;                  ///< [a * n + b]
    std::vector<std::vector<Nat>> composite; ///< [(a * n + b) * n + c][i * |hom(b, c)| + j]
};

const MonoidTruncation &monoidTruncation(Nat depth) {
    static std::mutex lock;
    static std::map<Nat, MonoidTruncation> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(depth);
    if (it != cache.end()) return it->second;
    MonoidTruncation mt;
    for (auto &w : wordsUpToDepth(depth)) mt.objs.push_back(wordObject({w}));
    Nat n = mt.objs.size();
    for (Nat i = 0; i < n; ++i) mt.objIndex[mt.objs[i].str()] = i;
    mt.homs.resize(n * n);
    for (Nat a = 0; a < n; ++a)
        for (Nat b = 0; b < n; ++b) {
            auto &h = mt.homs[a * n + b];
            h.cells = homMonoid(mt.objs[a], mt.objs[b]);
            for (Nat i = 0; i < h.cells.size(); ++i) {
                h.index[h.cells[i].maps[0].images()] = i;
                h.occ.push_back(occurrencesOf(h.cells[i]));
            }
        }
    mt.composite.resize(n * n * n);
    for (Nat a = 0; a < n; ++a)
        for (Nat b = 0; b < n; ++b)
            for (Nat c = 0; c < n; ++c) {
                auto &ab = mt.homs[a * n + b], &bc = mt.homs[b * n + c], &ac = mt.homs[a * n + c];
                auto &out = mt.composite[(a * n + b) * n + c];
                for (auto &f : ab.cells)
                    for (auto &g : bc.cells) out.push_back(ac.index.at(compose(f.maps[0], g.maps[0]).images()));
            }
    return cache.emplace(depth, std::move(mt)).first->second;
}

} // namespace

FinFunctor evalCone(const FinMonoidalCategory &c, const WCone &cone, const WObject &w) {
    const FinCategory &X = cone.vertex;
    Nat k = c.base.objectCount(), a = c.base.arrowCount();
    FinFunctor out;
    std::vector<BinWord> words;
    for (auto &p : w.parts) words.push_back(asWord(p));
    for (Nat x = 0; x < X.objectCount(); ++x) {
        std::vector<Nat> t;
        for (auto &u : words) t.push_back(evalObject(c, u, {cone.f.onObjects[x]}));
        out.onObjects.push_back(tupleIndex(k, t));
    }
    for (Nat g = 0; g < X.arrowCount(); ++g) {
        std::vector<Nat> t;
        for (auto &u : words) t.push_back(evalArrow(c, u, {cone.f.onArrows[g]}));
        out.onArrows.push_back(tupleIndex(a, t));
    }
    return out;
}

FinNatTrans evalCone(const FinMonoidalCategory &c, const WCone &cone, const WMonTwoCell &x) {
    FinNatTrans out;
    OccurrenceCell occ = occurrencesOf(x);
    for (Nat v = 0; v < cone.vertex.objectCount(); ++v) {
        Tau tau(c, structureAt(cone, v), true, nullptr);
        out.components.push_back(tupleIndex(c.base.arrowCount(), tau.cell(x.dom, x.cod, occ)));
    }
    return out;
}

bool checkNaturalityTruncated(const FinMonoidalCategory &c, const WCone &cone, Nat depth, std::string *why) {
    validateConeShape(c, cone);
    if (depth == 0) return true;
    const FinCategory &C = c.base, &X = cone.vertex;
    auto fail = [&](const std::string &s) {
        if (why) *why = s;
        return false;
    };

    const MonoidTruncation &mt = monoidTruncation(depth);
    const auto &objs = mt.objs;
    const auto &objIndex = mt.objIndex;
    const auto &homs = mt.homs;
    Nat n = objs.size();

    // tau tables per vertex object
    std::vector<std::vector<std::vector<Nat>>> tau(X.objectCount(), std::vector<std::vector<Nat>>(n * n));
    for (Nat x = 0; x < X.objectCount(); ++x) {
        Tau t(c, structureAt(cone, x), true, nullptr);
        for (Nat a = 0; a < n; ++a)
            for (Nat b = 0; b < n; ++b)
                for (Nat i = 0; i < homs[a * n + b].cells.size(); ++i) {
                    auto &cell = homs[a * n + b].cells[i];
                    tau[x][a * n + b].push_back(t.cell(cell.dom, cell.cod, homs[a * n + b].occ[i]).front());
                }
    }

    for (Nat x = 0; x < X.objectCount(); ++x) {
        std::string at = " at " + X.objects[x];
        Nat m = cone.f.onObjects[x];
        for (Nat a = 0; a < n; ++a) {
            Nat ida = homs[a * n + a].index.at(FinFunction::identity(objs[a].occurrences()).images());
            if (tau[x][a * n + a][ida] != C.id(evalObject(c, asWord(objs[a].parts[0]), {m})))
                return fail("identity on " + objs[a].str() + " is not sent to an identity" + at);
        }
        for (Nat a = 0; a < n; ++a)
            for (Nat b = 0; b < n; ++b) {
                const auto &ab = homs[a * n + b];
                for (Nat c2 = 0; c2 < n; ++c2) {
                    const auto &bc = homs[b * n + c2];
                    for (Nat i = 0; i < ab.cells.size(); ++i)
                        for (Nat j = 0; j < bc.cells.size(); ++j) {
                            Nat k = mt.composite[(a * n + b) * n + c2][i * bc.cells.size() + j];
                            if (tau[x][a * n + c2][k] != C.compose(tau[x][b * n + c2][j], tau[x][a * n + b][i]))
                                return fail("composition " + objs[a].str() + " -> " + objs[b].str() + " -> " +
                                            objs[c2].str() + " is not preserved" + at);
                        }
                }
            }
    }

    // the 1-cell (1*2): tau on W((1*2))(p, q) is the tensor of tau on p and q
    if (depth >= 1) {
        std::vector<Nat> small;
        for (Nat a = 0; a < n; ++a)
            if (asWord(objs[a].parts[0]).depth() + 1 <= depth) small.push_back(a);
        for (Nat x = 0; x < X.objectCount(); ++x)
            for (Nat a1 : small)
                for (Nat b1 : small)
                    for (Nat a2 : small)
                        for (Nat b2 : small) {
                            WObject pa = wordObject({BinWord::pair(asWord(objs[a1].parts[0]), asWord(objs[a2].parts[0]))});
                            WObject pb = wordObject({BinWord::pair(asWord(objs[b1].parts[0]), asWord(objs[b2].parts[0]))});
                            Nat ia = objIndex.at(pa.str()), ib = objIndex.at(pb.str());
                            const auto &h1 = homs[a1 * n + b1], &h2 = homs[a2 * n + b2], &h = homs[ia * n + ib];
                            Nat off = h1.cells.empty() ? 0 : h1.cells.front().maps[0].cod();
                            for (Nat i = 0; i < h1.cells.size(); ++i)
                                for (Nat j = 0; j < h2.cells.size(); ++j) {
                                    auto im = h1.cells[i].maps[0].images();
                                    for (Nat y : h2.cells[j].maps[0].images()) im.push_back(y + off);
                                    Nat k = h.index.at(im);
                                    if (tau[x][ia * n + ib][k] !=
                                        c.tensorArrow(tau[x][a1 * n + b1][i], tau[x][a2 * n + b2][j]))
                                        return fail("the 1-cell (1*2) is not respected on " + pa.str() + " -> " +
                                                    pb.str());
                                }
                        }
    }

    // generating 2-cells: tau(W(alpha)_o) = Phi(alpha) at tau(o)
    for (auto &alpha : generatorsM(3).twoCells) {
        Nat arity = alpha.dom.dom;
        Nat room = std::max(alpha.dom.words[0].depth(), alpha.cod.words[0].depth());
        if (room > depth) continue;
        std::vector<BinWord> parts;
        for (auto &w : wordsUpToDepth(depth - room)) parts.push_back(w);
        std::vector<std::vector<BinWord>> tuples{{}};
        for (Nat i = 0; i < arity; ++i) {
            std::vector<std::vector<BinWord>> next;
            for (auto &t : tuples)
                for (auto &w : parts) {
                    auto u = t;
                    u.push_back(w);
                    next.push_back(u);
                }
            tuples = std::move(next);
        }
        for (auto &t : tuples) {
            BinWord src = substitute(alpha.dom.words[0], t), dst = substitute(alpha.cod.words[0], t);
            Nat ia = objIndex.at(wordObject({src}).str()), ib = objIndex.at(wordObject({dst}).str());
            Nat k = homs[ia * n + ib].index.at(FinFunction::identity(typeOf(src).size()).images());
            for (Nat x = 0; x < X.objectCount(); ++x) {
                std::vector<Nat> objsAt;
                for (auto &w : t) objsAt.push_back(evalObject(c, w, {cone.f.onObjects[x]}));
                if (tau[x][ia * n + ib][k] != coherence(c, alpha.dom.words[0], alpha.cod.words[0], objsAt))
                    return fail("2-cell " + alpha.dom.str() + " => " + alpha.cod.str() + " is not respected at " +
                                src.str());
            }
        }
    }

    // naturality in the arrows of the vertex
    for (Nat g = 0; g < X.arrowCount(); ++g) {
        Nat x = X.src(g), y = X.dst(g), fg = cone.f.onArrows[g];
        for (Nat a = 0; a < n; ++a)
            for (Nat b = 0; b < n; ++b)
                for (Nat i = 0; i < homs[a * n + b].cells.size(); ++i) {
                    Nat lhs = C.compose(tau[y][a * n + b][i], evalArrow(c, asWord(objs[a].parts[0]), {fg}));
                    Nat rhs = C.compose(evalArrow(c, asWord(objs[b].parts[0]), {fg}), tau[x][a * n + b][i]);
                    if (lhs != rhs) return fail("not natural in " + X.arrows[g].id);
                }
    }
    return true;
}

// --- the variant weights ---------------------------------------------------------

namespace {

Nat allLeaves(const ActTerm &t) {
    if (t.kind() == ActTerm::Kind::Mul || t.kind() == ActTerm::Kind::Act) return allLeaves(t.left()) + allLeaves(t.right());
    return 1;
}

Nat termDepth(const ActTerm &t) {
    if (t.kind() == ActTerm::Kind::Mul || t.kind() == ActTerm::Kind::Act)
        return 1 + std::max(termDepth(t.left()), termDepth(t.right()));
    return 0;
}

/// Color-1 terms 2 | (w>T) of depth <= d.
std::vector<ActTerm> colorOneTerms(Nat d) {
    std::vector<ActTerm> out{ActTerm::leaf(2)};
    for (Nat level = 1; level <= d; ++level) {
        std::vector<ActTerm> next{ActTerm::leaf(2)};
        for (auto &w : wordsUpToDepth(level - 1))
            for (auto &t : out) next.push_back(ActTerm::act(ActTerm::parse(w.str()), t));
        out = std::move(next);
    }
    return out;
}

struct Piece {
    Nat dom, cod;
    WCell cell;
};

struct TruncatedWeight {
    std::vector<WObject> objects;
    std::vector<Piece> cells;
    std::vector<Nat> elementary;
    std::vector<std::vector<Nat>> from; ///< cells by domain
    std::vector<Piece> composites;      ///< distinct composites, possibly outside the truncation
    struct Pair {
        Nat g, f, composite;
    };
    std::vector<Pair> pairs; ///< f after elementary g
};

bool isElementary(const OccurrenceCell &occ, bool ordered) {
    int odd = 0;
    for (auto &l : occ.split) odd += l.size() != 1;
    for (auto &l : occ.merge) odd += l.size() != 1;
    std::vector<Nat> s1, s2;
    for (auto &l : occ.split) s1.insert(s1.end(), l.begin(), l.end());
    std::map<Nat, Nat> pos;
    for (Nat i = 0; i < s1.size(); ++i) pos[s1[i]] = i;
    for (auto l : occ.merge) {
        if (!ordered) std::sort(l.begin(), l.end(), [&](Nat a, Nat b) { return pos.at(a) < pos.at(b); });
        s2.insert(s2.end(), l.begin(), l.end());
    }
    int diff = 0;
    for (Nat i = 0; i < s1.size() && i < s2.size(); ++i) diff += s1[i] != s2[i];
    if (odd > 1) return false;
    if (odd == 1) return diff == 0;
    return diff == 0 || (diff == 2 && [&] {
               for (Nat i = 0; i + 1 < s1.size(); ++i)
                   if (s1[i] != s2[i]) return s1[i] == s2[i + 1] && s1[i + 1] == s2[i];
               return false;
           }());
}

const TruncatedWeight &truncatedWeight(WeightTag tag, Truncation t) {
    static std::mutex lock;
    static std::map<std::tuple<WeightTag, Nat, Nat>, TruncatedWeight> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto key = std::make_tuple(tag, t.depth, t.bound);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    WeightId w = weightFor(tag);
    TruncatedWeight tw;
    std::vector<std::vector<WObject>> groups(1);
    for (auto &word : wordsUpToDepth(t.depth))
        if (allLeaves(ActTerm::parse(word.str())) <= t.bound) groups[0].push_back(wordObject({word}));
    if (tag == WeightTag::Action) {
        groups.emplace_back();
        for (auto &term : colorOneTerms(t.depth))
            if (allLeaves(term) <= t.bound && termDepth(term) <= t.depth) {
                WObject o;
                o.parts.push_back(term);
                o.n1 = 1;
                groups.back().push_back(o);
            }
    }
    bool ordered = mergeOrdered(tag);
    for (auto &g : groups) {
        Nat base = tw.objects.size();
        tw.objects.insert(tw.objects.end(), g.begin(), g.end());
        for (Nat a = 0; a < g.size(); ++a)
            for (Nat b = 0; b < g.size(); ++b) {
                Nat apex = std::max(g[a].occurrences(), g[b].occurrences());
                for (auto &cell : homW(w, g[a], g[b], apex)) {
                    if (isElementary(cell.occ, ordered)) tw.elementary.push_back(tw.cells.size());
                    tw.cells.push_back({base + a, base + b, cell});
                }
            }
    }
    tw.from.resize(tw.objects.size());
    for (Nat i = 0; i < tw.cells.size(); ++i) tw.from[tw.cells[i].dom].push_back(i);
    using Key = std::tuple<Nat, Nat, std::vector<std::vector<Nat>>, std::vector<std::vector<Nat>>>;
    std::map<Key, Nat> seen;
    for (Nat g : tw.elementary)
        for (Nat f : tw.from[tw.cells[g].cod]) {
            OccurrenceCell occ = composeOccurrences(tw.cells[g].cell.occ, tw.cells[f].cell.occ);
            Key k{tw.cells[g].dom, tw.cells[f].cod, occ.split, occ.merge};
            auto [it, fresh] = seen.emplace(std::move(k), tw.composites.size());
            if (fresh) {
                WCell cell;
                cell.dom = tw.cells[g].cell.dom;
                cell.cod = tw.cells[f].cell.cod;
                cell.occ = std::move(occ);
                tw.composites.push_back({tw.cells[g].dom, tw.cells[f].cod, std::move(cell)});
            }
            tw.pairs.push_back({g, f, it->second});
        }
    return cache.emplace(key, std::move(tw)).first->second;
}

struct Composer {
    const FinCategory &C;
    const FinCategory *D;
    const WObject &obj;
    Nat operator()(Nat j, Nat g, Nat f) const {
        bool one = isColorOne(obj.parts[j]);
        return one ? D->compose(g, f) : C.compose(g, f);
    }
};

} // namespace

bool checkWeightTruncated(const FinMonoidalCategory &c, WeightTag tag, const VariantObject &o,
                          const ActionDatum *action, Truncation t, std::string *why) {
    if (needsSymmetry(tag) && !c.symmetric()) throw Error(weightName(tag) + " weight needs a symmetric category");
    if (tag == WeightTag::Action && !action) throw Error("action weight needs an action");
    const TruncatedWeight &tw = truncatedWeight(tag, t);
    Tau tau(c, o, mergeOrdered(tag), action);
    std::vector<std::vector<Nat>> value(tw.cells.size());
    try {
        for (Nat i = 0; i < tw.cells.size(); ++i) {
            auto &p = tw.cells[i];
            value[i] = tau.cell(p.cell.dom, p.cell.cod, p.cell.occ);
        }
        std::vector<std::vector<Nat>> whole(tw.composites.size());
        for (auto &p : tw.pairs) {
            auto &pg = tw.cells[p.g], &pf = tw.cells[p.f];
            auto &w = whole[p.composite];
            if (w.empty()) {
                auto &pc = tw.composites[p.composite];
                w = tau.cell(pc.cell.dom, pc.cell.cod, pc.cell.occ);
            }
            Composer comp{c.base, action ? &action->space : nullptr, pg.cell.dom};
            for (Nat j = 0; j < w.size(); ++j)
                if (w[j] != comp(j, value[p.f][j], value[p.g][j])) {
                    if (why)
                        *why = "composition " + pg.cell.dom.str() + " -> " + pg.cell.cod.str() + " -> " +
                               pf.cell.cod.str() + " is not preserved";
                    return false;
                }
        }
    } catch (const Error &e) {
        if (why) *why = e.what();
        return false;
    }
    return true;
}

namespace {

/// h (and k) commute with tau on every elementary morphism of the truncation.
bool isModification(const FinMonoidalCategory &c, WeightTag tag, const VariantObject &a, const VariantObject &b,
                    Nat h, Nat k, const ActionDatum *action, Truncation t) {
    const TruncatedWeight &tw = truncatedWeight(tag, t);
    Tau ta(c, a, mergeOrdered(tag), action), tb(c, b, mergeOrdered(tag), action);
    for (Nat g : tw.elementary) {
        auto &p = tw.cells[g];
        auto va = ta.cell(p.cell.dom, p.cell.cod, p.cell.occ), vb = tb.cell(p.cell.dom, p.cell.cod, p.cell.occ);
        Composer comp{c.base, action ? &action->space : nullptr, p.cell.dom};
        for (Nat j = 0; j < va.size(); ++j) {
            Nat hd = ta.termArrow(p.cell.dom.parts[j], h, k), hc = ta.termArrow(p.cell.cod.parts[j], h, k);
            if (comp(j, vb[j], hd) != comp(j, hc, va[j])) return false;
        }
    }
    return true;
}

std::vector<VariantObject> candidates(const FinMonoidalCategory &c, WeightTag tag, const ActionDatum *action) {
    const FinCategory &C = c.base;
    std::vector<VariantObject> out;
    for (Nat m = 0; m < C.objectCount(); ++m) {
        auto mm = c.tensor(m, m);
        std::vector<Nat> none{npos};
        bool alg = tag != WeightTag::Comonoid, coalg = tag == WeightTag::Comonoid || tag == WeightTag::Bimonoid;
        auto muS = alg ? C.hom(mm, m) : none, etaS = alg ? C.hom(c.unit, m) : none;
        auto deltaS = coalg ? C.hom(m, mm) : none, epsS = coalg ? C.hom(m, c.unit) : none;
        for (Nat mu : muS)
            for (Nat eta : etaS)
                for (Nat delta : deltaS)
                    for (Nat eps : epsS) {
                        VariantObject o{m, mu, eta, delta, eps, npos, npos};
                        if (tag != WeightTag::Action) {
                            out.push_back(o);
                            continue;
                        }
                        const FinCategory &D = action->space;
                        for (Nat x = 0; x < D.objectCount(); ++x)
                            for (Nat a : D.hom(action->act(m, x), x)) {
                                o.space = x;
                                o.act = a;
                                out.push_back(o);
                            }
                    }
    }
    return out;
}

} // namespace

StructureCategory weightedLimit(const FinMonoidalCategory &c, WeightTag tag, const ActionDatum *action, Truncation t) {
    const FinCategory &C = c.base;
    if (needsSymmetry(tag) && !c.symmetric()) throw Error(weightName(tag) + " weight needs a symmetric category");
    if (tag == WeightTag::Action) {
        if (!action) throw Error("action weight needs an action");
        validateAction(*action);
    }
    std::vector<VariantObject> objs;
    std::vector<StructureHom> homs;
    if (tag == WeightTag::Monoid) {
        for (auto &o : candidates(c, tag, nullptr))
            if (laws(c, o.carrier, o.mul, o.unit) == 0) objs.push_back(o);
        for (Nat i = 0; i < objs.size(); ++i)
            for (Nat j = 0; j < objs.size(); ++j)
                for (Nat h : C.hom(objs[i].carrier, objs[j].carrier))
                    if (C.compose(h, objs[i].mul) == C.compose(objs[j].mul, c.tensorArrow(h, h)) &&
                        C.compose(h, objs[i].unit) == objs[j].unit)
                        homs.push_back({i, j, h, npos});
        return assembleStructures(tag, objs, homs, c);
    }
    for (auto &o : candidates(c, tag, action))
        if (checkWeightTruncated(c, tag, o, action, t)) objs.push_back(o);
    for (Nat i = 0; i < objs.size(); ++i)
        for (Nat j = 0; j < objs.size(); ++j)
            for (Nat h : C.hom(objs[i].carrier, objs[j].carrier)) {
                if (tag != WeightTag::Action) {
                    if (isModification(c, tag, objs[i], objs[j], h, npos, action, t)) homs.push_back({i, j, h, npos});
                    continue;
                }
                for (Nat k : action->space.hom(objs[i].space, objs[j].space))
                    if (isModification(c, tag, objs[i], objs[j], h, k, action, t)) homs.push_back({i, j, h, k});
            }
    return assembleStructures(tag, objs, homs, c, action);
}

// --- the comparison functor --------------------------------------------------------

WCone universalCone(const FinMonoidalCategory &c, const StructureCategory &lim) {
    if (lim.tag != WeightTag::Monoid) throw Error("universalCone: monoid weight only");
    WCone cone{lim.category, forgetful(lim), {}, {}};
    for (auto &o : lim.objects) {
        cone.mu.components.push_back(o.mul);
        cone.eta.components.push_back(o.unit);
    }
    validateConeShape(c, cone);
    return cone;
}

FinFunctor comparisonPsi(const FinMonoidalCategory &c, const WCone &cone, const StructureCategory &lim) {
    if (!checkConeLaws(c, cone)) throw Error("comparisonPsi: not a cone");
    const FinCategory &X = cone.vertex;
    FinFunctor g;
    for (Nat x = 0; x < X.objectCount(); ++x) {
        auto it = std::lower_bound(lim.objects.begin(), lim.objects.end(), structureAt(cone, x));
        if (it == lim.objects.end() || !(*it == structureAt(cone, x)))
            throw Error("comparisonPsi: monoid missing from the limit");
        g.onObjects.push_back(it - lim.objects.begin());
    }
    for (Nat a = 0; a < X.arrowCount(); ++a) {
        StructureHom h{g.onObjects[X.src(a)], g.onObjects[X.dst(a)], cone.f.onArrows[a], npos};
        auto it = std::lower_bound(lim.homs.begin(), lim.homs.end(), h);
        if (it == lim.homs.end() || !(*it == h)) throw Error("comparisonPsi: morphism missing from the limit");
        g.onArrows.push_back(it - lim.homs.begin());
    }
    return g;
}

WCone precompose(const WCone &cone, const FinFunctor &g, const FinCategory &y) {
    WCone out{y, composeFunctors(g, cone.f), {}, {}};
    for (Nat v : g.onObjects) {
        out.mu.components.push_back(cone.mu.components.at(v));
        out.eta.components.push_back(cone.eta.components.at(v));
    }
    return out;
}

std::vector<WCone> enumerateCones(const FinMonoidalCategory &c, const FinCategory &x) {
    const FinCategory &C = c.base;
    std::vector<WCone> out;
    for (auto &f : allFunctors(x, C)) {
        // monoid structures available at each object
        std::vector<std::vector<std::pair<Nat, Nat>>> options(x.objectCount());
        for (Nat v = 0; v < x.objectCount(); ++v) {
            Nat m = f.onObjects[v];
            for (Nat mu : C.hom(c.tensor(m, m), m))
                for (Nat eta : C.hom(c.unit, m))
                    if (laws(c, m, mu, eta) == 0) options[v].push_back({mu, eta});
        }
        WCone cone{x, f, {std::vector<Nat>(x.objectCount())}, {std::vector<Nat>(x.objectCount())}};
        std::function<void(Nat)> go = [&](Nat v) {
            if (v == x.objectCount()) {
                for (Nat g = 0; g < x.arrowCount(); ++g) {
                    Nat s = x.src(g), d = x.dst(g), fg = f.onArrows[g];
                    if (C.compose(cone.mu.components[d], c.tensorArrow(fg, fg)) != C.compose(fg, cone.mu.components[s]))
                        return;
                    if (cone.eta.components[d] != C.compose(fg, cone.eta.components[s])) return;
                }
                out.push_back(cone);
                return;
            }
            for (auto [mu, eta] : options[v]) {
                cone.mu.components[v] = mu;
                cone.eta.components[v] = eta;
                go(v + 1);
            }
        };
        go(0);
    }
    return out;
}

std::vector<FinNatTrans> coneMorphisms(const FinMonoidalCategory &c, const WCone &a, const WCone &b) {
    const FinCategory &C = c.base;
    std::vector<FinNatTrans> out;
    for (auto &t : allNatTrans(a.f, b.f, a.vertex, C)) {
        bool ok = true;
        for (Nat v = 0; v < a.vertex.objectCount() && ok; ++v) {
            Nat h = t.components[v];
            ok = C.compose(h, a.mu.components[v]) == C.compose(b.mu.components[v], c.tensorArrow(h, h)) &&
                 C.compose(h, a.eta.components[v]) == b.eta.components[v];
        }
        if (ok) out.push_back(t);
    }
    return out;
}

} // namespace weights
