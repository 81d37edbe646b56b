#include "weights/theory.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace weights {

namespace {

std::vector<std::string> splitList(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ',' || ch == ';') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    return out;
}

BinWord numberLeaves(const BinWord &w, Nat &next) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return w;
    case BinWord::Kind::Leaf: return BinWord::leaf(next++);
    case BinWord::Kind::Pair: {
        BinWord l = numberLeaves(w.left(), next);
        return BinWord::pair(l, numberLeaves(w.right(), next));
    }
    }
    return w;
}

ActTerm toAct(const BinWord &w) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return ActTerm::unit();
    case BinWord::Kind::Leaf: return ActTerm::leaf(w.letter());
    case BinWord::Kind::Pair: return ActTerm::mul(toAct(w.left()), toAct(w.right()));
    }
    return ActTerm::unit();
}

BinWord toBin(const ActTerm &t) {
    switch (t.kind()) {
    case ActTerm::Kind::Unit: return BinWord::unit();
    case ActTerm::Kind::Leaf: return BinWord::leaf(t.letter());
    case ActTerm::Kind::Mul: return BinWord::pair(toBin(t.left()), toBin(t.right()));
    case ActTerm::Kind::Act: throw Error("not a binary word: " + t.str());
    }
    return BinWord::unit();
}

bool hasAct(const ActTerm &t) {
    if (t.kind() == ActTerm::Kind::Act) return true;
    if (t.kind() == ActTerm::Kind::Mul) return hasAct(t.left()) || hasAct(t.right());
    return false;
}

/// Leaves renamed by their raw occurrence numbers.
ActTerm numberTerm(const ActTerm &t, const std::vector<Nat> &ids, std::size_t &pos) {
    switch (t.kind()) {
    case ActTerm::Kind::Unit: return t;
    case ActTerm::Kind::Leaf: return ActTerm::leaf(ids[pos++]);
    case ActTerm::Kind::Mul: {
        ActTerm l = numberTerm(t.left(), ids, pos);
        return ActTerm::mul(l, numberTerm(t.right(), ids, pos));
    }
    case ActTerm::Kind::Act: {
        ActTerm l = numberTerm(t.left(), ids, pos);
        return ActTerm::act(l, numberTerm(t.right(), ids, pos));
    }
    }
    return t;
}

/// The 1-cell before canonicalization; apex element k is the k-th leaf overall.
SpanMorphism rawImageM(const MOneCell &c, OperadId b) {
    std::vector<Nat> letters, owner;
    std::vector<OperadOp> rightLabels;
    Nat next = 1;
    for (Nat j = 0; j < c.cod(); ++j) {
        for (Nat x : typeOf(c.words[j])) {
            letters.push_back(x);
            owner.push_back(j + 1);
        }
        rightLabels.push_back(btrOp(numberLeaves(c.words[j], next)));
    }
    Nat k = letters.size();
    FinFunction lf(k, c.dom, letters), rf(k, c.cod(), owner);
    std::vector<OperadOp> leftLabels;
    for (Nat i = 1; i <= c.dom; ++i) leftLabels.push_back(topOp(OperadId::Top, fiber(lf, i)));
    SpanMorphism s;
    s.opA = OperadId::Top;
    s.opB = b;
    s.src = {c.dom};
    s.tgt = {c.cod()};
    s.apex = {k};
    s.left = makeFA(OperadId::Top, lf, leftLabels);
    s.right = makeFA(OperadId::BTr, rf, rightLabels);
    if (b != OperadId::BTr) s.right = mapFA(b, s.right);
    return s;
}

SpanMorphism rawImageAction(const WObject &o) {
    auto ids = o.leafIds();
    Nat k = o.occurrences(), k0 = 0;
    for (Nat x = 1; x <= k; ++x) k0 += o.colorOfOccurrence(x) == 0;
    ColoredObject apex{k0, k - k0}, src{1, 1}, tgt{o.n0(), o.n1};
    std::vector<Nat> lf(k), rf(k);
    for (Nat x = 1; x <= k; ++x) lf[x - 1] = x <= k0 ? 1 : 2;
    std::vector<OperadOp> rightLabels;
    for (std::size_t j = 0; j < o.parts.size(); ++j) {
        std::map<Nat, Color> colors;
        for (Nat x : ids[j]) {
            rf[x - 1] = j + 1;
            colors[x] = o.colorOfOccurrence(x);
        }
        std::size_t pos = 0;
        rightLabels.push_back(actOp(numberTerm(o.parts[j], ids[j], pos), colors));
    }
    FinFunction left(k, 2, lf), right(k, total(tgt), rf);
    std::vector<OperadOp> leftLabels;
    for (Nat i = 1; i <= 2; ++i) {
        auto fib = fiber(left, i);
        leftLabels.push_back(topOp(OperadId::Top2, fib, std::vector<Color>(fib.size(), Color(i - 1)), Color(i - 1)));
    }
    SpanMorphism s;
    s.opA = OperadId::Top2;
    s.opB = OperadId::Lo2;
    s.src = src;
    s.tgt = tgt;
    s.apex = apex;
    s.left = makeFA(OperadId::Top2, apex, src, left, leftLabels);
    s.right = mapFA(OperadId::Lo2, makeFA(OperadId::Act, apex, tgt, right, rightLabels));
    return s;
}

std::vector<Nat> orderedCarrier(const OperadOp &op) { return op.order.empty() ? op.carrier : op.order; }

void requireUncolored(const WObject &o, const char *where) {
    if (o.n1 != 0) throw Error(std::string(where) + ": colored object");
}

} // namespace

// --- M ---------------------------------------------------------------------

std::string MOneCell::str() const {
    std::string s;
    for (std::size_t j = 0; j < words.size(); ++j) s += (j ? "," : "") + words[j].str();
    return s;
}

MOneCell makeM(Nat dom, std::vector<BinWord> words) {
    for (auto &w : words)
        if (maxLetter(w) > dom) throw Error("1-cell of M: word " + w.str() + " leaves (" + std::to_string(dom) + "]");
    return {dom, std::move(words)};
}

MOneCell parseM(const std::string &text, std::optional<Nat> dom) {
    std::vector<BinWord> words;
    for (auto &part : splitList(text)) words.push_back(BinWord::parse(part));
    Nat n = 0;
    for (auto &w : words) n = std::max(n, maxLetter(w));
    return makeM(dom.value_or(n), std::move(words));
}

MOneCell identityM(Nat n) {
    std::vector<BinWord> ws;
    for (Nat i = 1; i <= n; ++i) ws.push_back(BinWord::leaf(i));
    return {n, ws};
}

MOneCell composeM(const MOneCell &f, const MOneCell &g) {
    if (f.cod() != g.dom)
        throw Error("composeM: codomain (" + std::to_string(f.cod()) + "] is not domain (" + std::to_string(g.dom) + "]");
    MOneCell out{f.dom, {}};
    for (auto &w : g.words) out.words.push_back(substitute(w, f.words));
    return out;
}

ProductM productM(Nat n, Nat m) {
    ProductM p{n + m, {n + m, {}}, {n + m, {}}};
    for (Nat i = 1; i <= n; ++i) p.p1.words.push_back(BinWord::leaf(i));
    for (Nat i = n + 1; i <= n + m; ++i) p.p2.words.push_back(BinWord::leaf(i));
    return p;
}

MOneCell pairingM(const MOneCell &f, const MOneCell &g) {
    if (f.dom != g.dom) throw Error("pairingM: domains differ");
    MOneCell out = f;
    out.words.insert(out.words.end(), g.words.begin(), g.words.end());
    return out;
}

MOneCell terminalM(Nat n) { return {n, {}}; }

std::optional<MTwoCell> twoCellM(const MOneCell &f, const MOneCell &g) {
    if (f.dom != g.dom || f.cod() != g.cod()) throw Error("twoCellM: 1-cells are not parallel");
    for (Nat j = 0; j < f.cod(); ++j)
        if (typeOf(f.words[j]) != typeOf(g.words[j])) return std::nullopt;
    return MTwoCell{f, g};
}

GeneratorsM generatorsM(Nat maxArity) {
    GeneratorsM g;
    for (Nat m = 1; m <= maxArity; ++m)
        for (Nat i = 1; i <= m; ++i) g.oneCells.push_back({m, {BinWord::leaf(i)}});
    g.oneCells.push_back({0, {BinWord::unit()}});
    g.oneCells.push_back(parseM("(1*2)"));
    g.twoCells.push_back(*twoCellM(parseM("(1*(2*3))"), parseM("((1*2)*3)")));
    g.twoCells.push_back(*twoCellM(parseM("(e*1)"), parseM("1")));
    g.twoCells.push_back(*twoCellM(parseM("(1*e)"), parseM("1")));
    return g;
}

SpanMorphism imageM(const MOneCell &c, OperadId b) { return canonicalize(rawImageM(c, b)); }

// --- weights ---------------------------------------------------------------

WeightId weightFor(WeightTag tag) {
    using O = OperadId;
    switch (tag) {
    case WeightTag::Monoid: return {tag, {O::Bot, O::Lo, O::Top, O::Lo}, O::BTr};
    case WeightTag::Comonoid: return {tag, {O::Lo, O::Bot, O::Top, O::Lo}, O::BTr};
    case WeightTag::CMonoid: return {tag, {O::Bot, O::Top, O::Top, O::Top}, O::BTr};
    case WeightTag::Bimonoid: return {tag, {O::Lo, O::Lo, O::Top, O::Top}, O::BTr};
    case WeightTag::Action: return {tag, {O::Bot2, O::Lo2, O::Top2, O::Lo2}, O::Act};
    }
    throw Error("unknown weight");
}

std::string weightName(WeightTag tag) {
    switch (tag) {
    case WeightTag::Monoid: return "monoid";
    case WeightTag::Comonoid: return "comonoid";
    case WeightTag::CMonoid: return "cmonoid";
    case WeightTag::Bimonoid: return "bimonoid";
    case WeightTag::Action: return "action";
    }
    return "?";
}

WeightTag parseWeight(const std::string &name) {
    for (auto t : {WeightTag::Monoid, WeightTag::Comonoid, WeightTag::CMonoid, WeightTag::Bimonoid, WeightTag::Action})
        if (weightName(t) == name) return t;
    if (name == "commutative-monoid") return WeightTag::CMonoid;
    throw Error("unknown weight '" + name + "'");
}

bool needsSymmetry(WeightTag tag) { return tag == WeightTag::CMonoid || tag == WeightTag::Bimonoid; }

std::vector<std::vector<Nat>> WObject::leafIds() const {
    Nat k0 = 0;
    for (auto &p : parts)
        for (Nat x : p.leaves()) k0 += x == 1;
    std::vector<std::vector<Nat>> out;
    Nat c0 = 0, c1 = 0;
    for (auto &p : parts) {
        std::vector<Nat> ids;
        for (Nat x : p.leaves()) ids.push_back(x == 1 ? ++c0 : k0 + ++c1);
        out.push_back(std::move(ids));
    }
    return out;
}

Nat WObject::occurrences() const {
    Nat k = 0;
    for (auto &p : parts) k += p.leaves().size();
    return k;
}

Color WObject::colorOfOccurrence(Nat k) const {
    Nat k0 = 0;
    for (auto &p : parts)
        for (Nat x : p.leaves()) k0 += x == 1;
    return k <= k0 ? 0 : 1;
}

std::string WObject::str() const {
    std::string s;
    for (std::size_t j = 0; j < parts.size(); ++j) s += (j ? "," : "") + parts[j].str();
    return s;
}

WObject wordObject(const std::vector<BinWord> &words) {
    WObject o;
    for (auto &w : words) o.parts.push_back(toAct(w));
    return o;
}

WObject parseWObject(const std::string &text) {
    WObject o;
    for (auto &part : splitList(text)) {
        ActTerm t = ActTerm::parse(part);
        auto ls = t.leaves();
        bool colored = hasAct(t) || std::find(ls.begin(), ls.end(), Nat{2}) != ls.end();
        if (colored) ++o.n1;
        else if (o.n1 > 0) throw Error("weight object '" + text + "': color-0 parts must come first");
        o.parts.push_back(t);
    }
    return o;
}

void validateWObject(const WeightId &w, const WObject &o) {
    bool action = w.tag == WeightTag::Action;
    if (!action && o.n1 != 0) throw Error("weight object " + o.str() + ": only the action weight has color 1");
    for (std::size_t j = 0; j < o.parts.size(); ++j) {
        const ActTerm &t = o.parts[j];
        Nat ones = 0;
        for (Nat x : t.leaves()) {
            if (x != 1 && x != 2) throw Error("weight object " + o.str() + ": leaves are 1 (and 2)");
            ones += x == 2;
        }
        bool colorOne = j >= o.n0();
        if (!colorOne) {
            if (ones != 0 || hasAct(t)) throw Error("weight object " + o.str() + ": part " + t.str() + " is not a word");
        } else if (t.typeCheck({{1, 0}, {2, 1}}) != 1 || ones != 1) {
            throw Error("weight object " + o.str() + ": part " + t.str() + " needs exactly one color-1 leaf");
        }
    }
}

WImage imageW(const WeightId &w, const WObject &o) {
    validateWObject(w, o);
    SpanMorphism raw;
    if (w.tag == WeightTag::Action) {
        raw = rawImageAction(o);
    } else {
        MOneCell c{1, {}};
        for (auto &p : o.parts) c.words.push_back(toBin(p));
        raw = rawImageM(c, w.array.b0);
    }
    TrackedSpan tr = canonicalizeTracked(raw);
    FinFunction back = tr.sigma.inverse();
    return {tr.span, back.images()};
}

WCell makeWCell(const WeightId &w, const WObject &dom, const WObject &cod, const TwoSpanCell &cell) {
    WImage d = imageW(w, dom), c = imageW(w, cod);
    if (!(cell.dom == d.span) || !(cell.cod == c.span)) throw Error("weight cell: boundary is not the image of its objects");
    OccurrenceCell occ;
    occ.m = total(cell.cell.apex);
    occ.split.resize(dom.occurrences());
    occ.merge.resize(cod.occurrences());
    for (Nat a = 1; a <= d.occurrenceAt.size(); ++a)
        occ.split[d.occurrenceAt[a - 1] - 1] = orderedCarrier(cell.d2().labels.at(a - 1));
    for (Nat a = 1; a <= c.occurrenceAt.size(); ++a)
        occ.merge[c.occurrenceAt[a - 1] - 1] = orderedCarrier(cell.c2().labels.at(a - 1));
    return {dom, cod, cell, std::move(occ)};
}

std::vector<WCell> homW(const WeightId &w, const WObject &dom, const WObject &cod, Nat maxApex) {
    if (dom.parts.size() != cod.parts.size() || dom.n1 != cod.n1) throw Error("homW: objects live in different W(n]");
    WImage d = imageW(w, dom), c = imageW(w, cod);
    std::vector<WCell> out;
    for (auto &cell : localHom(w.array, d.span, c.span, 0, maxApex)) out.push_back(makeWCell(w, dom, cod, cell));
    return out;
}

WCell identityW(const WeightId &w, const WObject &o) {
    return makeWCell(w, o, o, identityCell(w.array, imageW(w, o).span));
}

WCell composeW(const WeightId &w, const WCell &u, const WCell &v) {
    if (!(u.cod == v.dom)) throw Error("composeW: " + u.cod.str() + " is not " + v.dom.str());
    return makeWCell(w, u.dom, v.cod, verticalCompose(u.cell, v.cell));
}

OccurrenceCell composeOccurrences(const OccurrenceCell &u, const OccurrenceCell &v) {
    if (u.merge.size() != v.split.size()) throw Error("composeOccurrences: middle objects differ");
    std::vector<Nat> mergeOcc(u.m + 1, 0), splitOcc(v.m + 1, 0);
    for (Nat j = 0; j < u.merge.size(); ++j)
        for (Nat k : u.merge[j]) mergeOcc[k] = j;
    for (Nat j = 0; j < v.split.size(); ++j)
        for (Nat k : v.split[j]) splitOcc[k] = j;
    OccurrenceCell out;
    std::map<std::pair<Nat, Nat>, Nat> id;
    out.split.resize(u.split.size());
    for (Nat i = 0; i < u.split.size(); ++i)
        for (Nat k1 : u.split[i])
            for (Nat k2 : v.split[mergeOcc[k1]]) {
                id[{k1, k2}] = ++out.m;
                out.split[i].push_back(out.m);
            }
    out.merge.resize(v.merge.size());
    for (Nat j = 0; j < v.merge.size(); ++j)
        for (Nat k2 : v.merge[j])
            for (Nat k1 : u.merge[splitOcc[k2]]) out.merge[j].push_back(id.at({k1, k2}));
    return out;
}

OccurrenceCell occurrencesOf(const WMonTwoCell &c) {
    auto domIds = c.dom.leafIds(), codIds = c.cod.leafIds();
    OccurrenceCell out;
    out.m = c.dom.occurrences();
    out.split.resize(out.m);
    out.merge.resize(c.cod.occurrences());
    for (Nat k = 1; k <= out.m; ++k) out.split[k - 1] = {k};
    for (std::size_t j = 0; j < domIds.size(); ++j)
        for (Nat p = 0; p < domIds[j].size(); ++p)
            out.merge[codIds[j][c.maps[j](p + 1) - 1] - 1].push_back(domIds[j][p]);
    for (auto &l : out.merge) std::sort(l.begin(), l.end());
    return out;
}

// --- the monoid weight in closed form ----------------------------------------

std::vector<WMonTwoCell> homMonoid(const WObject &dom, const WObject &cod) {
    requireUncolored(dom, "homMonoid");
    requireUncolored(cod, "homMonoid");
    if (dom.parts.size() != cod.parts.size()) throw Error("homMonoid: objects live in different W(n]");
    std::vector<std::vector<FinFunction>> choices;
    for (std::size_t j = 0; j < dom.parts.size(); ++j) {
        Nat a = dom.parts[j].leaves().size(), b = cod.parts[j].leaves().size();
        std::vector<FinFunction> mono;
        for (auto &f : allFunctions(a, b))
            if (std::is_sorted(f.images().begin(), f.images().end())) mono.push_back(f);
        choices.push_back(std::move(mono));
    }
    std::vector<WMonTwoCell> out{{dom, cod, {}}};
    for (auto &ch : choices) {
        std::vector<WMonTwoCell> next;
        for (auto &partial : out)
            for (auto &f : ch) {
                WMonTwoCell x = partial;
                x.maps.push_back(f);
                next.push_back(std::move(x));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

WMonTwoCell asMonotone(const WCell &c) {
    requireUncolored(c.dom, "asMonotone");
    std::vector<Nat> target(c.occ.m + 1, 0);
    for (Nat j = 1; j <= c.occ.merge.size(); ++j)
        for (Nat k : c.occ.merge[j - 1]) target[k] = j;
    auto domIds = c.dom.leafIds(), codIds = c.cod.leafIds();
    WMonTwoCell out{c.dom, c.cod, {}};
    for (std::size_t j = 0; j < domIds.size(); ++j) {
        std::map<Nat, Nat> posInCod;
        for (Nat p = 0; p < codIds[j].size(); ++p) posInCod[codIds[j][p]] = p + 1;
        std::vector<Nat> images;
        for (Nat occ : domIds[j]) {
            const auto &over = c.occ.split[occ - 1];
            if (over.size() != 1) throw Error("asMonotone: not a cell of the monoid weight");
            images.push_back(posInCod.at(target[over.front()]));
        }
        out.maps.emplace_back(domIds[j].size(), codIds[j].size(), images);
    }
    return out;
}

std::vector<BinWord> wordsUpToDepth(Nat d) {
    std::vector<BinWord> ws{BinWord::unit(), BinWord::leaf(1)};
    for (Nat level = 1; level <= d; ++level) {
        std::vector<BinWord> next{BinWord::unit(), BinWord::leaf(1)};
        for (auto &a : ws)
            for (auto &b : ws) next.push_back(BinWord::pair(a, b));
        ws = std::move(next);
    }
    std::sort(ws.begin(), ws.end());
    return ws;
}

std::vector<WObject> objectsUpToDepth(Nat n, Nat d) {
    auto ws = wordsUpToDepth(d);
    std::vector<std::vector<BinWord>> tuples{{}};
    for (Nat j = 0; j < n; ++j) {
        std::vector<std::vector<BinWord>> next;
        for (auto &t : tuples)
            for (auto &w : ws) {
                auto x = t;
                x.push_back(w);
                next.push_back(std::move(x));
            }
        tuples = std::move(next);
    }
    std::vector<WObject> out;
    for (auto &t : tuples) out.push_back(wordObject(t));
    return out;
}

// --- the weight 2-functor on M ------------------------------------------------

WObject weightOnOneCell(const MOneCell &c, const WObject &o) {
    requireUncolored(o, "weightOnOneCell");
    if (o.parts.size() != c.dom) throw Error("weightOnOneCell: object has " + std::to_string(o.parts.size()) +
                                             " parts, 1-cell expects " + std::to_string(c.dom));
    std::vector<BinWord> args;
    for (auto &p : o.parts) args.push_back(toBin(p));
    std::vector<BinWord> out;
    for (auto &w : c.words) out.push_back(substitute(w, args));
    return wordObject(out);
}

WCell weightOnOneCell(const WeightId &w, const MOneCell &c, const WCell &x) {
    if (w.tag == WeightTag::Action) throw Error("weightOnOneCell: the action weight is not indexed by M");
    SpanMorphism t = mapSpan(w.array.a0, w.array.b0, imageM(c));
    return makeWCell(w, weightOnOneCell(c, x.dom), weightOnOneCell(c, x.cod), whiskerRight(x.cell, t));
}

WCell weightOnTwoCell(const WeightId &w, const MTwoCell &alpha, const WObject &o) {
    if (w.tag == WeightTag::Action) throw Error("weightOnTwoCell: the action weight is not indexed by M");
    WObject src = weightOnOneCell(alpha.dom, o), dst = weightOnOneCell(alpha.cod, o);
    WImage a = imageW(w, src), b = imageW(w, dst);
    Nat k = src.occurrences();
    std::vector<Nat> atA(k + 1), atB(k + 1);
    for (Nat p = 1; p <= k; ++p) {
        atA[a.occurrenceAt[p - 1]] = p;
        atB[b.occurrenceAt[p - 1]] = p;
    }
    std::vector<Nat> fa, fb;
    for (Nat x = 1; x <= k; ++x) {
        fa.push_back(atA[x]);
        fb.push_back(atB[x]);
    }
    FinFunction ff(k, k, fa), fg(k, k, fb);
    std::vector<OperadOp> la(k), lb(k);
    for (Nat x = 1; x <= k; ++x) {
        la[ff(x) - 1] = unitOp(w.array.a1, x);
        lb[fg(x) - 1] = unitOp(w.array.b1, x);
    }
    TwoSpanCell cell = makeCell(w.array, a.span, b.span, makeFA(w.array.a1, ff, la), makeFA(w.array.b1, fg, lb));
    return makeWCell(w, src, dst, cell);
}

} // namespace weights
