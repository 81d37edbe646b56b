#include "weights/finset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weights {

FinFunction::FinFunction(Nat dom, Nat cod, std::vector<Nat> images)
    : dom_(dom), cod_(cod), images_(std::move(images)) {
    if (images_.size() != dom_)
        throw Error("function table has length " + std::to_string(images_.size()) +
                    ", expected " + std::to_string(dom_));
    for (Nat y : images_)
        if (y < 1 || y > cod_)
            throw Error("image " + std::to_string(y) + " outside (" + std::to_string(cod_) + "]");
}

FinFunction FinFunction::identity(Nat n) {
    std::vector<Nat> t(n);
    std::iota(t.begin(), t.end(), Nat{1});
    return {n, n, std::move(t)};
}

FinFunction FinFunction::constant(Nat dom, Nat cod, Nat value) {
    return {dom, cod, std::vector<Nat>(dom, value)};
}

bool FinFunction::isBijection() const {
    if (dom_ != cod_) return false;
    std::vector<bool> hit(cod_ + 1, false);
    for (Nat y : images_) {
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

FinFunction FinFunction::inverse() const {
    if (!isBijection()) throw Error("inverse of a non-bijection");
    std::vector<Nat> t(dom_);
    for (Nat x = 1; x <= dom_; ++x) t[images_[x - 1] - 1] = x;
    return {cod_, dom_, std::move(t)};
}

std::string FinFunction::str() const {
    std::ostringstream os;
    os << '[';
    for (Nat i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << "]:(" << dom_ << "]->(" << cod_ << ']';
    return os.str();
}

FinFunction compose(const FinFunction &f, const FinFunction &g) {
    if (f.cod() != g.dom())
        throw Error("compose: codomain (" + std::to_string(f.cod()) + "] does not match domain (" +
                    std::to_string(g.dom()) + "]");
    std::vector<Nat> t(f.dom());
    for (Nat x = 1; x <= f.dom(); ++x) t[x - 1] = g(f(x));
    return {f.dom(), g.cod(), std::move(t)};
}

Pullback pullback(const FinFunction &f, const FinFunction &g) {
    if (f.cod() != g.cod()) throw Error("pullback: codomain mismatch");
    std::vector<Nat> a, b;
    for (Nat x = 1; x <= f.dom(); ++x)
        for (Nat y = 1; y <= g.dom(); ++y)
            if (f(x) == g(y)) {
                a.push_back(x);
                b.push_back(y);
            }
    Nat p = a.size();
    return {{p}, {p, f.dom(), std::move(a)}, {p, g.dom(), std::move(b)}};
}

Sum sum(FinSetObj a, FinSetObj b) {
    Nat n = a.n + b.n;
    std::vector<Nat> l(a.n), r(b.n);
    std::iota(l.begin(), l.end(), Nat{1});
    std::iota(r.begin(), r.end(), a.n + 1);
    return {{n}, {a.n, n, std::move(l)}, {b.n, n, std::move(r)}};
}

FinFunction sumMap(const FinFunction &f, const FinFunction &g) {
    std::vector<Nat> t = f.images();
    for (Nat y : g.images()) t.push_back(f.cod() + y);
    return {f.dom() + g.dom(), f.cod() + g.cod(), std::move(t)};
}

FiberedSubset fiber(const FinFunction &f, Nat y) {
    if (y < 1 || y > f.cod())
        throw Error("fiber: point " + std::to_string(y) + " outside (" + std::to_string(f.cod()) + "]");
    FiberedSubset s;
    for (Nat x = 1; x <= f.dom(); ++x)
        if (f(x) == y) s.push_back(x);
    return s;
}

Nat indexIn(const FiberedSubset &s, Nat x) {
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) throw Error("element " + std::to_string(x) + " not in subset");
    return static_cast<Nat>(it - s.begin()) + 1;
}

std::vector<FinFunction> allFunctions(Nat dom, Nat cod) {
    std::vector<FinFunction> out;
    if (cod == 0) {
        if (dom == 0) out.push_back(FinFunction::identity(0));
        return out;
    }
    std::vector<Nat> t(dom, 1);
    while (true) {
        out.emplace_back(dom, cod, t);
        Nat i = dom;
        while (i > 0 && t[i - 1] == cod) t[--i] = 1;
        if (i == 0) break;
        ++t[i - 1];
    }
    return out;
}

std::vector<FinFunction> allPermutations(Nat n) {
    std::vector<FinFunction> out;
    std::vector<Nat> t(n);
    std::iota(t.begin(), t.end(), Nat{1});
    do out.emplace_back(n, n, t);
    while (std::next_permutation(t.begin(), t.end()));
    return out;
}

} // namespace weights
