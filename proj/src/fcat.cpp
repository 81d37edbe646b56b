#include "weights/fcat.hpp"

#include <numeric>

namespace weights {

Nat total(const ColoredObject &o) { return std::accumulate(o.begin(), o.end(), Nat{0}); }

Color colorAt(const ColoredObject &o, Nat x) {
    Nat acc = 0;
    for (std::size_t c = 0; c < o.size(); ++c) {
        acc += o[c];
        if (x <= acc) return static_cast<Color>(c);
    }
    throw Error("element " + std::to_string(x) + " outside the object");
}

ColoredObject plainObject(Nat n) { return {n}; }

ColoredObject objectFor(OperadId id, Nat n0, Nat n1) {
    if (isColored(id)) return {n0, n1};
    if (n1 != 0) throw Error("uncolored object with a second block");
    return {n0};
}

std::string FAMorphism::str() const {
    std::string s = operadName(operad) + " " + f.str() + " {";
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "; " : "") + labels[i].str();
    return s + "}";
}

void validateFA(const FAMorphism &x) {
    if (x.dom.size() != x.cod.size() || x.dom.size() != (isColored(x.operad) ? 2u : 1u))
        throw Error("FA morphism: object shape does not match the operad");
    if (x.f.dom() != total(x.dom) || x.f.cod() != total(x.cod)) throw Error("FA morphism: function has the wrong type");
    if (x.labels.size() != x.f.cod()) throw Error("FA morphism: one label per codomain element expected");
    for (Nat i = 1; i <= x.f.cod(); ++i) {
        const OperadOp &a = x.labels[i - 1];
        if (a.operad != x.operad) throw Error("FA morphism: label from the wrong operad");
        FiberedSubset fib = fiber(x.f, i);
        if (a.carrier != fib) throw Error("FA morphism: label over " + std::to_string(i) + " is not carried by the fiber");
        for (std::size_t k = 0; k < fib.size(); ++k)
            if (a.colors[k] != colorAt(x.dom, fib[k])) throw Error("FA morphism: label colors disagree with the domain");
        if (a.out != colorAt(x.cod, i)) throw Error("FA morphism: label output color disagrees with the codomain");
        validateOp(a);
    }
}

FAMorphism makeFA(OperadId id, ColoredObject dom, ColoredObject cod, FinFunction f, std::vector<OperadOp> labels) {
    FAMorphism x{id, std::move(dom), std::move(cod), std::move(f), std::move(labels)};
    validateFA(x);
    return x;
}

FAMorphism makeFA(OperadId id, FinFunction f, std::vector<OperadOp> labels) {
    ColoredObject d{f.dom()}, c{f.cod()};
    return makeFA(id, d, c, std::move(f), std::move(labels));
}

FAMorphism identityFA(OperadId id, const ColoredObject &n) {
    Nat t = total(n);
    std::vector<OperadOp> labels;
    for (Nat i = 1; i <= t; ++i) labels.push_back(unitOp(id, i, colorAt(n, i)));
    return makeFA(id, n, n, FinFunction::identity(t), std::move(labels));
}

FAMorphism identityFA(OperadId id, Nat n) { return identityFA(id, objectFor(id, n)); }

FAMorphism composeFA(const FAMorphism &first, const FAMorphism &second) {
    if (first.operad != second.operad) throw Error("composeFA: operad mismatch");
    if (first.cod != second.dom) throw Error("composeFA: codomain does not match domain");
    FinFunction h = compose(first.f, second.f);
    std::vector<OperadOp> labels;
    for (Nat j = 1; j <= h.cod(); ++j) {
        const OperadOp &b = second.labels[j - 1];
        std::vector<OperadOp> inner;
        for (Nat i : b.carrier) inner.push_back(first.labels[i - 1]);
        labels.push_back(multiply(b, inner));
    }
    return makeFA(first.operad, first.dom, second.cod, std::move(h), std::move(labels));
}

FAMorphism composeColoredFA(const FAMorphism &first, const FAMorphism &second) {
    if (!isColored(first.operad)) throw Error("composeColoredFA: operad is not colored");
    return composeFA(first, second);
}

ColoredObject tensorObject(const ColoredObject &a, const ColoredObject &b) {
    if (a.size() != b.size()) throw Error("tensor: object shapes differ");
    ColoredObject r(a.size());
    for (std::size_t c = 0; c < a.size(); ++c) r[c] = a[c] + b[c];
    return r;
}

Nat tensorIndex(const ColoredObject &a, const ColoredObject &b, bool second, Nat x) {
    Color c = colorAt(second ? b : a, x);
    Nat before = 0, within = x;
    for (Color k = 0; k < c; ++k) {
        before += a[k] + b[k];
        within -= (second ? b : a)[k];
    }
    return before + (second ? a[c] : 0) + within;
}

FAMorphism tensorFA(const FAMorphism &x, const FAMorphism &y) {
    if (x.operad != y.operad) throw Error("tensorFA: operad mismatch");
    ColoredObject dom = tensorObject(x.dom, y.dom), cod = tensorObject(x.cod, y.cod);
    std::vector<Nat> table(total(dom));
    std::vector<OperadOp> labels(total(cod));
    auto place = [&](const FAMorphism &m, bool second) {
        std::map<Nat, Nat> sigma;
        for (Nat e = 1; e <= total(m.dom); ++e) {
            Nat ne = tensorIndex(x.dom, y.dom, second, e);
            sigma[e] = ne;
            table[ne - 1] = tensorIndex(x.cod, y.cod, second, m.f(e));
        }
        for (Nat i = 1; i <= total(m.cod); ++i) {
            const OperadOp &a = m.labels[i - 1];
            std::map<Nat, Nat> part;
            for (Nat e : a.carrier) part[e] = sigma[e];
            labels[tensorIndex(x.cod, y.cod, second, i) - 1] = actBijection(a, part);
        }
    };
    place(x, false);
    place(y, true);
    return makeFA(x.operad, dom, cod, FinFunction(total(dom), total(cod), std::move(table)), std::move(labels));
}

FinFunction piA(const FAMorphism &x) { return x.f; }

FAMorphism mapFA(OperadId to, const FAMorphism &x) {
    std::vector<OperadOp> labels;
    for (auto &a : x.labels) labels.push_back(applyMorphism(to, a));
    return makeFA(to, x.dom, x.cod, x.f, std::move(labels));
}

FAMorphism precomposeBijection(const FAMorphism &x, const FinFunction &sigma) {
    // x' = x after sigma^{-1}, so that x' o sigma = x
    if (!sigma.isBijection() || sigma.dom() != x.f.dom()) throw Error("precomposeBijection: not a bijection of the domain");
    for (Nat k = 1; k <= sigma.dom(); ++k)
        if (colorAt(x.dom, k) != colorAt(x.dom, sigma(k))) throw Error("precomposeBijection: bijection changes colors");
    FinFunction inv = sigma.inverse();
    FinFunction g = compose(inv, x.f);
    std::vector<OperadOp> labels;
    for (Nat i = 1; i <= x.f.cod(); ++i) {
        std::map<Nat, Nat> part;
        for (Nat e : x.labels[i - 1].carrier) part[e] = sigma(e);
        labels.push_back(actBijection(x.labels[i - 1], part));
    }
    return makeFA(x.operad, x.dom, x.cod, std::move(g), std::move(labels));
}

FAMorphism postcomposeBijection(const FAMorphism &x, const FinFunction &sigma) {
    if (!sigma.isBijection() || sigma.dom() != x.f.cod()) throw Error("postcomposeBijection: not a bijection of the codomain");
    std::vector<OperadOp> labels(x.labels.size());
    for (Nat i = 1; i <= x.f.cod(); ++i) {
        if (colorAt(x.cod, i) != colorAt(x.cod, sigma(i))) throw Error("postcomposeBijection: bijection changes colors");
        labels[sigma(i) - 1] = x.labels[i - 1];
    }
    return makeFA(x.operad, x.dom, x.cod, compose(x.f, sigma), std::move(labels));
}

std::vector<FAMorphism> enumerateLabelings(OperadId id, const ColoredObject &dom, const ColoredObject &cod,
                                           const FinFunction &f, Nat bound) {
    std::vector<std::vector<OperadOp>> choices;
    for (Nat i = 1; i <= f.cod(); ++i) {
        FiberedSubset fib = fiber(f, i);
        std::vector<Color> colors;
        for (Nat e : fib) colors.push_back(colorAt(dom, e));
        choices.push_back(enumerateOps(id, fib, bound, colors, colorAt(cod, i)));
        if (choices.back().empty()) return {};
    }
    std::vector<FAMorphism> out;
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
        std::vector<OperadOp> labels;
        for (std::size_t i = 0; i < choices.size(); ++i) labels.push_back(choices[i][idx[i]]);
        out.push_back(FAMorphism{id, dom, cod, f, std::move(labels)});
        std::size_t i = choices.size();
        while (i > 0 && idx[i - 1] + 1 == choices[i - 1].size()) idx[--i] = 0;
        if (i == 0) break;
        ++idx[i - 1];
    }
    return out;
}

std::vector<FAMorphism> enumerateFA(OperadId id, const ColoredObject &dom, const ColoredObject &cod, Nat bound) {
    std::vector<FAMorphism> out;
    for (auto &f : allFunctions(total(dom), total(cod))) {
        auto part = enumerateLabelings(id, dom, cod, f, bound);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

} // namespace weights
