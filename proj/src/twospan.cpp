#include "weights/twospan.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace weights {

namespace {

bool isBottom(OperadId id) { return id == OperadId::Bot || id == OperadId::Bot2; }

void checkBoundary(const OperadArray &array, const SpanMorphism &s) {
    if (s.opA != array.a0 || s.opB != array.b0) throw Error("2-cell: boundary 1-cell is not in [" +
                                                           operadName(array.a0) + " " + operadName(array.b0) + "]");
}

ColoredObject objectOfColors(std::size_t shape, const std::vector<Color> &colors) {
    ColoredObject o(shape, 0);
    for (Color c : colors) ++o[static_cast<std::size_t>(c)];
    return o;
}

/// Index of the canonical composite's apex for every raw pullback pair.
struct Composite {
    SpanMorphism span;
    std::map<std::pair<Nat, Nat>, Nat> index;
};

Composite trackedComposite(const SpanMorphism &s, const SpanMorphism &t) {
    SpanMorphism raw = composeSpanRaw(s, t);
    LabelledSquare sq = labelledPullback(s.right, t.left);
    TrackedSpan tr = canonicalizeTracked(raw);
    Composite c{tr.span, {}};
    for (Nat k = 1; k <= sq.pairs.size(); ++k) c.index[sq.pairs[k - 1]] = tr.sigma(k);
    return c;
}

/// Leg Q -> target in the operad of `inner`. Element k of Q lies over image[k-1] and
/// stands for innerElem[k-1] in the domain of inner; target element p carries the
/// label of inner at innerAt[p-1], moved onto its fiber.
FAMorphism transportLeg(const FAMorphism &inner, const ColoredObject &q, const ColoredObject &target,
                        const std::vector<Nat> &image, const std::vector<Nat> &innerElem,
                        const std::vector<Nat> &innerAt) {
    Nat nq = image.size(), nt = total(target);
    FinFunction f(nq, nt, image);
    std::vector<OperadOp> labels;
    for (Nat p = 1; p <= nt; ++p) {
        FiberedSubset fib = fiber(f, p);
        std::map<Nat, Nat> part;
        for (Nat k : fib) part[innerElem[k - 1]] = k;
        OperadOp moved = actBijection(inner.labels.at(innerAt[p - 1] - 1), part);
        std::vector<Color> cs;
        for (Nat e : moved.carrier) cs.push_back(colorAt(q, e));
        labels.push_back(recolor(moved, cs, colorAt(target, p)));
    }
    return makeFA(inner.operad, q, target, std::move(f), std::move(labels));
}

/// c2 leg over Lo2 whose labels are read off from the order the right triangle
/// requires: the composite of d2 with the domain's right leg.
FAMorphism restrictedLeg(const FAMorphism &d2, const SpanMorphism &dom, const SpanMorphism &cod, const ColoredObject &q,
                         const std::vector<Nat> &image) {
    FAMorphism required = composeFA(mapFA(cod.right.operad, d2), dom.right);
    std::map<Nat, Nat> position; // element of q -> position in the label over its image
    for (auto &lab : required.labels)
        for (std::size_t i = 0; i < lab.order.size(); ++i) position[lab.order[i]] = i;
    Nat nt = total(cod.apex);
    FinFunction f(image.size(), nt, image);
    std::vector<OperadOp> labels;
    for (Nat p = 1; p <= nt; ++p) {
        FiberedSubset fib = fiber(f, p);
        std::vector<Nat> order(fib.begin(), fib.end());
        std::sort(order.begin(), order.end(), [&](Nat a, Nat b) { return position.at(a) < position.at(b); });
        std::vector<Color> cs;
        for (Nat e : order) cs.push_back(colorAt(q, e));
        labels.push_back(lo2Op(order, cs, colorAt(cod.apex, p)));
    }
    return makeFA(OperadId::Lo2, q, cod.apex, std::move(f), std::move(labels));
}

/// For each element of the canonical composite apex, the chosen component of its pair.
std::vector<Nat> componentAt(const Composite &c, bool second) {
    std::vector<Nat> out(total(c.span.apex));
    for (auto &[pr, k] : c.index) out[k - 1] = second ? pr.second : pr.first;
    return out;
}

} // namespace

std::string OperadArray::str() const {
    return "[" + operadName(a1) + " " + operadName(b1) + " / " + operadName(a0) + " " + operadName(b0) + "]";
}

void validateArray(const OperadArray &a) {
    for (auto [from, to] : {std::pair{a.a1, a.a0}, {a.a1, a.b0}, {a.b1, a.a0}, {a.b1, a.b0}})
        if (!hasMorphism(from, to))
            throw Error("operad array " + a.str() + ": no morphism " + operadName(from) + " -> " + operadName(to));
}

OperadArray parseArray(const std::string &text) {
    std::istringstream in(text);
    std::string w[4];
    for (auto &x : w)
        if (!(in >> x)) throw Error("operad array: expected four operad names in '" + text + "'");
    OperadArray a{parseOperad(w[0]), parseOperad(w[1]), parseOperad(w[2]), parseOperad(w[3])};
    validateArray(a);
    return a;
}

std::string TwoSpanCell::key() const { return array.str() + "#" + dom.key() + "#" + cod.key() + "#" + cell.key(); }

std::string TwoSpanCell::str() const { return "d2 " + cell.left.str() + "  c2 " + cell.right.str(); }

bool cellCommutes(const OperadArray &array, const SpanMorphism &dom, const SpanMorphism &cod, const FAMorphism &d2,
                  const FAMorphism &c2) {
    if (array.a0 == OperadId::Top2) {
        // elements raised from color 0 to color 1 are absorbed by the action and
        // are not tied to a variable of the source
        for (Nat x = 1; x <= d2.f.dom(); ++x) {
            Nat y0 = d2.f(x), y1 = c2.f(x);
            if (colorAt(dom.apex, y0) != colorAt(cod.apex, y1)) continue;
            if (dom.left.f(y0) != cod.left.f(y1)) return false;
        }
    } else {
        FAMorphism l1 = composeFA(mapFA(array.a0, d2), dom.left);
        FAMorphism l2 = composeFA(mapFA(array.a0, c2), cod.left);
        if (!(l1 == l2)) return false;
    }
    FAMorphism r1 = composeFA(mapFA(array.b0, d2), dom.right);
    FAMorphism r2 = composeFA(mapFA(array.b0, c2), cod.right);
    return r1 == r2;
}

TwoSpanCell makeCell(const OperadArray &array, const SpanMorphism &dom, const SpanMorphism &cod, FAMorphism d2,
                     FAMorphism c2) {
    validateArray(array);
    checkBoundary(array, dom);
    checkBoundary(array, cod);
    if (dom.src != cod.src || dom.tgt != cod.tgt) throw Error("2-cell: boundary 1-cells are not parallel");
    if (d2.operad != array.a1 || c2.operad != array.b1) throw Error("2-cell: inner legs in the wrong operads");
    if (d2.cod != dom.apex || c2.cod != cod.apex) throw Error("2-cell: inner legs do not reach the boundary apexes");
    if (!cellCommutes(array, dom, cod, d2, c2)) throw Error("2-cell: triangles do not commute");
    return {array, dom, cod, makeSpan(std::move(d2), std::move(c2))};
}

TwoSpanCell identityCell(const OperadArray &array, const SpanMorphism &s) {
    return makeCell(array, s, s, identityFA(array.a1, s.apex), identityFA(array.b1, s.apex));
}

TwoSpanCell verticalCompose(const TwoSpanCell &u, const TwoSpanCell &v) {
    if (!(u.array == v.array)) throw Error("verticalCompose: arrays differ");
    if (!(u.cod == v.dom)) throw Error("verticalCompose: boundary mismatch");
    SpanMorphism c = composeSpan(u.cell, v.cell);
    return makeCell(u.array, u.dom, v.cod, c.left, c.right);
}

TwoSpanCell whiskerRight(const TwoSpanCell &u, const SpanMorphism &t) {
    Composite p0 = trackedComposite(u.dom, t), p1 = trackedComposite(u.cod, t);
    const FAMorphism &d2 = u.d2(), &c2 = u.c2();
    const ColoredObject &m = d2.dom;
    std::vector<Nat> toP0, toP1, xs;
    std::vector<Color> colors;
    for (Color col = 0; col < static_cast<Color>(m.size()); ++col)
        for (Nat x = 1; x <= total(m); ++x) {
            if (colorAt(m, x) != col) continue;
            Nat y = u.dom.right.f(d2.f(x));
            for (Nat s = 1; s <= total(t.apex); ++s)
                if (t.left.f(s) == y) {
                    toP0.push_back(p0.index.at({d2.f(x), s}));
                    toP1.push_back(p1.index.at({c2.f(x), s}));
                    xs.push_back(x);
                    colors.push_back(col);
                }
        }
    ColoredObject q = objectOfColors(m.size(), colors);
    FAMorphism nd = transportLeg(d2, q, p0.span.apex, toP0, xs, componentAt(p0, false));
    FAMorphism nc = transportLeg(c2, q, p1.span.apex, toP1, xs, componentAt(p1, false));
    return makeCell(u.array, p0.span, p1.span, std::move(nd), std::move(nc));
}

TwoSpanCell whiskerLeft(const SpanMorphism &s, const TwoSpanCell &v) {
    Composite p0 = trackedComposite(s, v.dom), p1 = trackedComposite(s, v.cod);
    const FAMorphism &d2 = v.d2(), &c2 = v.c2();
    const ColoredObject &n = d2.dom;
    std::vector<Nat> toP0, toP1, xs;
    std::vector<Color> colors;
    for (Color col = 0; col < static_cast<Color>(s.apex.size()); ++col)
        for (Nat a = 1; a <= total(s.apex); ++a) {
            if (colorAt(s.apex, a) != col) continue;
            for (Nat x = 1; x <= total(n); ++x) {
                if (v.dom.left.f(d2.f(x)) != s.right.f(a)) continue;
                Nat y1 = c2.f(x), a1 = a;
                if (colorAt(v.dom.apex, d2.f(x)) != colorAt(v.cod.apex, y1)) {
                    // absorbed by the action: lands on the first element of the outer fiber
                    const OperadOp &outer = s.right.labels.at(v.cod.left.f(y1) - 1);
                    if (outer.order.empty()) throw Error("whiskerLeft: nothing to absorb into");
                    a1 = outer.order.front();
                }
                toP0.push_back(p0.index.at({a, d2.f(x)}));
                toP1.push_back(p1.index.at({a1, y1}));
                xs.push_back(x);
                colors.push_back(col);
            }
        }
    ColoredObject q = objectOfColors(s.apex.size(), colors);
    FAMorphism nd = transportLeg(d2, q, p0.span.apex, toP0, xs, componentAt(p0, true));
    FAMorphism nc = v.array.b1 == OperadId::Lo2 && v.array.b0 == OperadId::Lo2
                        ? restrictedLeg(nd, p0.span, p1.span, q, toP1)
                        : transportLeg(c2, q, p1.span.apex, toP1, xs, componentAt(p1, true));
    if (!cellCommutes(v.array, p0.span, p1.span, nd, nc))
        throw Error("whiskerLeft: the pasted cell does not commute; no horizontal composite");
    return makeCell(v.array, p0.span, p1.span, std::move(nd), std::move(nc));
}

TwoSpanCell horizontalCompose(const TwoSpanCell &u, const TwoSpanCell &v) {
    if (!(u.array == v.array)) throw Error("horizontalCompose: arrays differ");
    if (u.dom.tgt != v.dom.src) throw Error("horizontalCompose: middle objects differ");
    return verticalCompose(whiskerRight(u, v.dom), whiskerLeft(u.cod, v));
}

std::vector<TwoSpanCell> localHom(const OperadArray &array, const SpanMorphism &dom, const SpanMorphism &cod, Nat bound,
                                  Nat maxApex) {
    validateArray(array);
    checkBoundary(array, dom);
    checkBoundary(array, cod);
    if (dom.src != cod.src || dom.tgt != cod.tgt) throw Error("localHom: 1-cells are not parallel");
    std::vector<std::pair<FAMorphism, FAMorphism>> candidates;
    if (isBottom(array.a1)) {
        FAMorphism id = identityFA(array.a1, dom.apex);
        for (auto &c2 : enumerateFA(array.b1, dom.apex, cod.apex, bound)) candidates.emplace_back(id, c2);
    } else if (isBottom(array.b1)) {
        FAMorphism id = identityFA(array.b1, cod.apex);
        for (auto &d2 : enumerateFA(array.a1, cod.apex, dom.apex, bound)) candidates.emplace_back(d2, id);
    } else {
        for (auto &s : enumerateSpans(array.a1, array.b1, dom.apex, cod.apex, maxApex, bound))
            candidates.emplace_back(s.left, s.right);
    }
    std::set<std::string> seen;
    std::vector<TwoSpanCell> out;
    for (auto &[d2, c2] : candidates) {
        if (!cellCommutes(array, dom, cod, d2, c2)) continue;
        TwoSpanCell c = makeCell(array, dom, cod, d2, c2);
        if (seen.insert(c.key()).second) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace weights
