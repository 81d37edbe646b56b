#include "weights/span.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace weights {

namespace {

std::string tableStr(const FinFunction &f) {
    std::string s;
    for (Nat y : f.images()) s += std::to_string(y) + ",";
    return s;
}

std::string objStr(const ColoredObject &o) {
    std::string s = "(";
    for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + std::to_string(o[i]);
    return s + ")";
}

/// Position of x among the leaves of a linear label, 0 when the label carries no order.
Nat leafPosition(const OperadOp &a, Nat x) {
    std::vector<Nat> seq;
    switch (a.operad) {
    case OperadId::Lo:
    case OperadId::Lo2: seq = a.order; break;
    case OperadId::BTr: seq = typeOf(a.tree); break;
    case OperadId::Act: seq = a.term.leaves(); break;
    default: return 0;
    }
    auto it = std::find(seq.begin(), seq.end(), x);
    if (it == seq.end()) throw Error("canonicalize: label does not contain its carrier");
    return static_cast<Nat>(it - seq.begin()) + 1;
}

bool payloadFree(OperadId id) {
    return id == OperadId::Bot || id == OperadId::Top || id == OperadId::Bot2 || id == OperadId::Top2;
}

bool leftLegAllowed(const FAMorphism &l) {
    if (!isColored(l.operad)) return true;
    for (Nat k = 1; k <= l.f.dom(); ++k)
        if (colorAt(l.dom, k) != colorAt(l.cod, l.f(k))) return false;
    return true;
}

void checkSpan(const SpanMorphism &s) {
    if (s.left.operad != s.opA || s.right.operad != s.opB) throw Error("span: leg operads do not match");
    if (s.left.dom != s.apex || s.right.dom != s.apex) throw Error("span: legs do not share the apex");
    if (s.left.cod != s.src || s.right.cod != s.tgt) throw Error("span: legs have the wrong codomains");
    validateFA(s.left);
    validateFA(s.right);
    if (!leftLegAllowed(s.left)) throw Error("span: a colored left leg must preserve colors");
}

} // namespace

std::string SpanMorphism::key() const {
    std::string k = operadName(opA) + "|" + operadName(opB) + "|" + objStr(src) + objStr(apex) + objStr(tgt) + "|" +
                    tableStr(left.f) + "|" + tableStr(right.f) + "|";
    for (auto &a : left.labels) k += a.str() + ";";
    k += "|";
    for (auto &b : right.labels) k += b.str() + ";";
    return k;
}

std::string SpanMorphism::str() const {
    std::string s = objStr(src) + " <-[" + tableStr(left.f) + "]- " + objStr(apex) + " -[" + tableStr(right.f) +
                    "]-> " + objStr(tgt);
    if (!payloadFree(opA)) {
        s += " L:";
        for (auto &a : left.labels) s += " " + a.str();
    }
    if (!payloadFree(opB)) {
        s += " R:";
        for (auto &b : right.labels) s += " " + b.str();
    }
    return s;
}

SpanMorphism canonicalize(const SpanMorphism &raw) { return canonicalizeTracked(raw).span; }

TrackedSpan canonicalizeTracked(const SpanMorphism &raw) {
    checkSpan(raw);
    Nat r = total(raw.apex);
    // Linear labels give every element of a tie block a distinct leaf position; when
    // both operads carry no payload, tied elements are interchangeable.
    auto keyOf = [&](Nat k) {
        return std::make_tuple(colorAt(raw.apex, k), raw.left.f(k), raw.right.f(k),
                               leafPosition(raw.left.labels[raw.left.f(k) - 1], k),
                               leafPosition(raw.right.labels[raw.right.f(k) - 1], k));
    };
    std::vector<Nat> order(r);
    std::iota(order.begin(), order.end(), Nat{1});
    std::stable_sort(order.begin(), order.end(), [&](Nat a, Nat b) { return keyOf(a) < keyOf(b); });
    std::vector<Nat> sigma(r);
    for (Nat p = 0; p < r; ++p) sigma[order[p] - 1] = p + 1;
    FinFunction sig(r, r, sigma);
    SpanMorphism s = raw;
    s.left = precomposeBijection(raw.left, sig);
    s.right = precomposeBijection(raw.right, sig);
    return {std::move(s), std::move(sig)};
}

SpanMorphism makeSpan(FAMorphism left, FAMorphism right) {
    SpanMorphism s;
    s.opA = left.operad;
    s.opB = right.operad;
    s.src = left.cod;
    s.tgt = right.cod;
    s.apex = left.dom;
    s.left = std::move(left);
    s.right = std::move(right);
    return canonicalize(s);
}

SpanMorphism identitySpan(OperadId opA, OperadId opB, const ColoredObject &n) {
    if (isColored(opA) != isColored(opB)) throw Error("identitySpan: mixed colored and uncolored operads");
    return makeSpan(identityFA(opA, n), identityFA(opB, n));
}

SpanMorphism identitySpan(OperadId opA, OperadId opB, Nat n) { return identitySpan(opA, opB, objectFor(opA, n)); }

LabelledSquare labelledPullback(const FAMorphism &g, const FAMorphism &f) {
    if (g.cod != f.cod) throw Error("pullback square: the cospan does not share its apex");
    Nat r = total(g.dom), s = total(f.dom);
    std::vector<std::pair<Nat, Nat>> pairs;
    for (std::size_t c = 0; c < g.dom.size(); ++c)
        for (Nat u = 1; u <= r; ++u)
            if (colorAt(g.dom, u) == static_cast<Color>(c))
                for (Nat v = 1; v <= s; ++v)
                    if (g.f(u) == f.f(v)) pairs.emplace_back(u, v);
    ColoredObject apex(g.dom.size(), 0);
    for (auto &[u, v] : pairs) ++apex[colorAt(g.dom, u)];
    std::map<std::pair<Nat, Nat>, Nat> idx;
    std::vector<Nat> p1, p2;
    for (Nat k = 0; k < pairs.size(); ++k) {
        idx[pairs[k]] = k + 1;
        p1.push_back(pairs[k].first);
        p2.push_back(pairs[k].second);
    }
    Nat p = pairs.size();
    auto colorsOf = [&](const FiberedSubset &carrier) {
        std::vector<Color> cs;
        for (Nat e : carrier) cs.push_back(colorAt(apex, e));
        return cs;
    };
    std::vector<OperadOp> firstLabels, secondLabels;
    for (Nat u = 1; u <= r; ++u) {
        const OperadOp &a = f.labels[g.f(u) - 1];
        std::map<Nat, Nat> part;
        for (Nat v : a.carrier) part[v] = idx.at({u, v});
        OperadOp moved = actBijection(a, part);
        firstLabels.push_back(recolor(moved, colorsOf(moved.carrier), colorAt(g.dom, u)));
    }
    for (Nat v = 1; v <= s; ++v) {
        const OperadOp &b = g.labels[f.f(v) - 1];
        std::map<Nat, Nat> part;
        for (Nat u : b.carrier) part[u] = idx.at({u, v});
        OperadOp moved = actBijection(b, part);
        secondLabels.push_back(recolor(moved, colorsOf(moved.carrier), colorAt(f.dom, v)));
    }
    return {apex, makeFA(f.operad, apex, g.dom, FinFunction(p, r, p1), std::move(firstLabels)),
            makeFA(g.operad, apex, f.dom, FinFunction(p, s, p2), std::move(secondLabels)), std::move(pairs)};
}

SpanMorphism composeSpanRaw(const SpanMorphism &s1, const SpanMorphism &s2) {
    if (s1.opA != s2.opA || s1.opB != s2.opB) throw Error("composeSpan: operads differ");
    if (s1.tgt != s2.src) throw Error("composeSpan: middle objects differ");
    LabelledSquare sq = labelledPullback(s1.right, s2.left);
    SpanMorphism s{s1.opA, s1.opB, s1.src, s2.tgt, sq.apex, composeFA(sq.toFirst, s1.left),
                   composeFA(sq.toSecond, s2.right)};
    checkSpan(s);
    return s;
}

SpanMorphism composeSpan(const SpanMorphism &s1, const SpanMorphism &s2) { return canonicalize(composeSpanRaw(s1, s2)); }

SpanMorphism tensorSpan(const SpanMorphism &s1, const SpanMorphism &s2) {
    if (s1.opA != s2.opA || s1.opB != s2.opB) throw Error("tensorSpan: operads differ");
    return makeSpan(tensorFA(s1.left, s2.left), tensorFA(s1.right, s2.right));
}

SpanMorphism dualSpan(const SpanMorphism &s) { return makeSpan(s.right, s.left); }

SpanMorphism mapSpan(OperadId toA, OperadId toB, const SpanMorphism &s) {
    return makeSpan(mapFA(toA, s.left), mapFA(toB, s.right));
}

std::vector<SpanMorphism> enumerateSpans(OperadId opA, OperadId opB, const ColoredObject &src,
                                         const ColoredObject &tgt, Nat maxApex, Nat bound) {
    std::set<std::string> seen;
    std::vector<SpanMorphism> out;
    std::vector<ColoredObject> apexes;
    if (src.size() == 1) {
        for (Nat r = 0; r <= maxApex; ++r) apexes.push_back({r});
    } else {
        for (Nat r = 0; r <= maxApex; ++r)
            for (Nat a0 = 0; a0 <= r; ++a0) apexes.push_back({a0, r - a0});
    }
    for (auto &apex : apexes) {
        auto lefts = enumerateFA(opA, apex, src, bound);
        std::erase_if(lefts, [](const FAMorphism &l) { return !leftLegAllowed(l); });
        if (lefts.empty()) continue;
        auto rights = enumerateFA(opB, apex, tgt, bound);
        for (auto &l : lefts)
            for (auto &r : rights) {
                SpanMorphism s = makeSpan(l, r);
                if (seen.insert(s.key()).second) out.push_back(std::move(s));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PlainSpan normalizePlainSpan(const FinFunction &l, const FinFunction &r) {
    if (l.dom() != r.dom()) throw Error("plain span: legs do not share the apex");
    std::vector<std::pair<Nat, Nat>> pairs;
    for (Nat k = 1; k <= l.dom(); ++k) pairs.emplace_back(l(k), r(k));
    std::sort(pairs.begin(), pairs.end());
    std::vector<Nat> a, b;
    for (auto &[x, y] : pairs) {
        a.push_back(x);
        b.push_back(y);
    }
    return {FinFunction(l.dom(), l.cod(), a), FinFunction(r.dom(), r.cod(), b)};
}

PlainSpan composePlainSpan(const PlainSpan &x, const PlainSpan &y) {
    Pullback pb = pullback(x.right, y.left);
    return normalizePlainSpan(compose(pb.p1, x.left), compose(pb.p2, y.right));
}

SpecialImage specialIso(SpecialIso which, const SpanMorphism &s) {
    auto needBot = [&](OperadId id) {
        if (id != OperadId::Bot && id != OperadId::Bot2) throw Error("specialIso: left operad must be bot");
    };
    switch (which) {
    case SpecialIso::BotA_to_FA: needBot(s.opA); return precomposeBijection(s.right, s.left.f);
    case SpecialIso::TopTop_to_SpanF:
        if (s.opA != OperadId::Top || s.opB != OperadId::Top) throw Error("specialIso: expected a [top top] span");
        return normalizePlainSpan(s.left.f, s.right.f);
    case SpecialIso::BotTop_to_F:
        if (s.opA != OperadId::Bot || s.opB != OperadId::Top) throw Error("specialIso: expected a [bot top] span");
        return compose(s.left.f.inverse(), s.right.f);
    case SpecialIso::BotBot_to_B:
        if (s.opA != OperadId::Bot || s.opB != OperadId::Bot) throw Error("specialIso: expected a [bot bot] span");
        return compose(s.left.f.inverse(), s.right.f);
    }
    throw Error("specialIso: unknown comparison");
}

SpanMorphism fromFA(const FAMorphism &x) {
    OperadId bot = isColored(x.operad) ? OperadId::Bot2 : OperadId::Bot;
    return makeSpan(identityFA(bot, x.dom), x);
}

namespace {
FAMorphism topLeg(const FinFunction &f) {
    std::vector<OperadOp> labels;
    for (Nat i = 1; i <= f.cod(); ++i) labels.push_back(topOp(OperadId::Top, fiber(f, i)));
    return makeFA(OperadId::Top, f, std::move(labels));
}
FAMorphism botLeg(const FinFunction &f) {
    if (!f.isBijection()) throw Error("bot leg must be a bijection");
    std::vector<OperadOp> labels;
    for (Nat i = 1; i <= f.cod(); ++i) labels.push_back(unitOp(OperadId::Bot, fiber(f, i).at(0)));
    return makeFA(OperadId::Bot, f, std::move(labels));
}
} // namespace

SpanMorphism fromPlainSpan(const PlainSpan &s) { return makeSpan(topLeg(s.left), topLeg(s.right)); }

SpanMorphism fromFunction(const FinFunction &f) {
    return makeSpan(botLeg(FinFunction::identity(f.dom())), topLeg(f));
}

SpanMorphism fromBijection(const FinFunction &f) { return makeSpan(botLeg(FinFunction::identity(f.dom())), botLeg(f)); }

} // namespace weights
