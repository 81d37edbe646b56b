#pragma once

// Random generators for the property suites. Every suite seeds its own engine so
// failures reproduce.

#include "weights/fcat.hpp"
#include "weights/span.hpp"

#include <algorithm>
#include <optional>
#include <random>

namespace gen {

using weights::Nat;
using Rng = std::mt19937_64;

inline Nat uniform(Rng &rng, Nat lo, Nat hi) { return std::uniform_int_distribution<Nat>(lo, hi)(rng); }

inline weights::FinFunction function(Rng &rng, Nat dom, Nat cod) {
    std::vector<Nat> t(dom);
    for (auto &y : t) y = uniform(rng, 1, cod);
    return {dom, cod, t};
}

inline weights::FinFunction permutation(Rng &rng, Nat n) {
    std::vector<Nat> t(n);
    for (Nat i = 0; i < n; ++i) t[i] = i + 1;
    std::shuffle(t.begin(), t.end(), rng);
    return {n, n, t};
}

inline weights::BinWord word(Rng &rng, Nat letters, Nat depth) {
    Nat pick = uniform(rng, 0, depth == 0 ? 1 : 3);
    if (pick == 0 || letters == 0) return weights::BinWord::unit();
    if (pick == 1) return weights::BinWord::leaf(uniform(rng, 1, letters));
    return weights::BinWord::pair(word(rng, letters, depth - 1), word(rng, letters, depth - 1));
}

template <class T> const T &pick(Rng &rng, const std::vector<T> &xs) { return xs.at(uniform(rng, 0, xs.size() - 1)); }

/// A random morphism of F_A with a function drawn first and labels drawn per fiber.
inline std::optional<weights::FAMorphism> fa(Rng &rng, weights::OperadId id, const weights::ColoredObject &dom,
                                             const weights::ColoredObject &cod, Nat bound = 1) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        if (weights::total(cod) == 0 && weights::total(dom) > 0) return std::nullopt;
        auto f = function(rng, weights::total(dom), weights::total(cod));
        std::vector<weights::OperadOp> labels;
        bool ok = true;
        for (Nat i = 1; i <= f.cod() && ok; ++i) {
            auto fib = weights::fiber(f, i);
            std::vector<weights::Color> cs;
            for (Nat e : fib) cs.push_back(weights::colorAt(dom, e));
            auto ops = weights::enumerateOps(id, fib, bound, cs, weights::colorAt(cod, i));
            if (ops.empty()) ok = false;
            else labels.push_back(pick(rng, ops));
        }
        if (ok) return weights::makeFA(id, dom, cod, f, labels);
    }
    return std::nullopt;
}

inline std::optional<weights::SpanMorphism> span(Rng &rng, weights::OperadId a, weights::OperadId b,
                                                 const weights::ColoredObject &src, const weights::ColoredObject &tgt,
                                                 Nat maxApex) {
    for (int attempt = 0; attempt < 50; ++attempt) {
        weights::ColoredObject apex;
        if (src.size() == 1) apex = {uniform(rng, 0, maxApex)};
        else {
            Nat r = uniform(rng, 0, maxApex);
            Nat a0 = uniform(rng, 0, r);
            apex = {a0, r - a0};
        }
        auto l = fa(rng, a, apex, src);
        if (!l) continue;
        bool keepsColors = true;
        for (Nat k = 1; k <= l->f.dom(); ++k)
            keepsColors &= weights::colorAt(apex, k) == weights::colorAt(src, l->f(k));
        if (!keepsColors) continue;
        auto r = fa(rng, b, apex, tgt);
        if (!r) continue;
        return weights::makeSpan(*l, *r);
    }
    return std::nullopt;
}

} // namespace gen
