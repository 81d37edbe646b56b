#include "weights/oracles.hpp"

#include <algorithm>

namespace weights {

namespace {

Nat inverseOf(const FinCategory &C, Nat f) {
    auto g = C.inverse(f);
    if (!g) throw Error("oracle: coherence component is not invertible");
    return *g;
}

bool isMonoid(const FinMonoidalCategory &c, Nat m, Nat mu, Nat eta) {
    const FinCategory &C = c.base;
    Nat id = C.id(m);
    // mu (mu * 1) = mu (1 * mu) alpha
    if (C.compose(mu, c.tensorArrow(mu, id)) != C.compose(mu, C.compose(c.tensorArrow(id, mu), c.assoc(m, m, m))))
        return false;
    return C.compose(mu, c.tensorArrow(eta, id)) == c.left(m) && C.compose(mu, c.tensorArrow(id, eta)) == c.right(m);
}

bool isMonoidMap(const FinMonoidalCategory &c, const VariantObject &a, const VariantObject &b, Nat h) {
    const FinCategory &C = c.base;
    return C.compose(h, a.mul) == C.compose(b.mul, c.tensorArrow(h, h)) && C.compose(h, a.unit) == b.unit;
}

std::vector<VariantObject> monoidsOf(const FinMonoidalCategory &c) {
    const FinCategory &C = c.base;
    std::vector<VariantObject> out;
    for (Nat m = 0; m < C.objectCount(); ++m)
        for (Nat mu : C.hom(c.tensor(m, m), m))
            for (Nat eta : C.hom(c.unit, m))
                if (isMonoid(c, m, mu, eta)) {
                    VariantObject o;
                    o.carrier = m;
                    o.mul = mu;
                    o.unit = eta;
                    out.push_back(o);
                }
    return out;
}

std::vector<StructureHom> monoidMaps(const FinMonoidalCategory &c, const std::vector<VariantObject> &objs) {
    std::vector<StructureHom> out;
    for (Nat i = 0; i < objs.size(); ++i)
        for (Nat j = 0; j < objs.size(); ++j)
            for (Nat h : c.base.hom(objs[i].carrier, objs[j].carrier))
                if (isMonoidMap(c, objs[i], objs[j], h)) out.push_back({i, j, h, npos});
    return out;
}

void needSymmetry(const FinMonoidalCategory &c, const char *what) {
    if (!c.symmetric()) throw Error(std::string(what) + " need a symmetric category");
}

} // namespace

StructureCategory enumerateMonoids(const FinMonoidalCategory &c) {
    auto objs = monoidsOf(c);
    return assembleStructures(WeightTag::Monoid, objs, monoidMaps(c, objs), c);
}

StructureCategory enumerateComonoids(const FinMonoidalCategory &c) {
    FinMonoidalCategory op = oppositeMonoidal(c);
    auto mons = monoidsOf(op);
    std::vector<VariantObject> objs;
    for (auto &m : mons) {
        VariantObject o;
        o.carrier = m.carrier;
        o.comul = m.mul;
        o.counit = m.unit;
        objs.push_back(o);
    }
    std::vector<StructureHom> homs;
    for (auto &h : monoidMaps(op, mons)) homs.push_back({h.dst, h.src, h.onCarrier, npos});
    return assembleStructures(WeightTag::Comonoid, objs, homs, c);
}

StructureCategory enumerateCommutativeMonoids(const FinMonoidalCategory &c) {
    needSymmetry(c, "commutative monoids");
    std::vector<VariantObject> objs;
    for (auto &o : monoidsOf(c))
        if (c.base.compose(o.mul, c.swap(o.carrier, o.carrier)) == o.mul) objs.push_back(o);
    return assembleStructures(WeightTag::CMonoid, objs, monoidMaps(c, objs), c);
}

StructureCategory enumerateBimonoids(const FinMonoidalCategory &c) {
    needSymmetry(c, "bimonoids");
    const FinCategory &C = c.base;
    StructureCategory comon = enumerateComonoids(c);
    std::vector<VariantObject> objs;
    for (auto &m : monoidsOf(c))
        for (auto &d : comon.objects) {
            if (d.carrier != m.carrier) continue;
            Nat x = m.carrier, id = C.id(x), mm = c.tensor(x, x);
            Nat I = c.unit;
            if (C.compose(d.counit, m.unit) != C.id(I)) continue;
            if (C.compose(d.counit, m.mul) != C.compose(c.left(I), c.tensorArrow(d.counit, d.counit))) continue;
            if (C.compose(d.comul, m.unit) != C.compose(c.tensorArrow(m.unit, m.unit), inverseOf(C, c.left(I))))
                continue;
            Nat middle = C.path({inverseOf(C, c.assoc(x, x, x)), c.tensorArrow(c.swap(x, x), id), c.assoc(x, x, x)});
            Nat rhs = C.path({c.tensorArrow(d.comul, d.comul), c.assoc(x, x, mm), c.tensorArrow(id, middle),
                              inverseOf(C, c.assoc(x, x, mm)), c.tensorArrow(m.mul, m.mul)});
            if (C.compose(d.comul, m.mul) != rhs) continue;
            VariantObject o = m;
            o.comul = d.comul;
            o.counit = d.counit;
            objs.push_back(o);
        }
    std::vector<StructureHom> homs;
    for (Nat i = 0; i < objs.size(); ++i)
        for (Nat j = 0; j < objs.size(); ++j)
            for (Nat h : C.hom(objs[i].carrier, objs[j].carrier)) {
                auto &a = objs[i], &b = objs[j];
                bool comul = C.compose(b.comul, h) == C.compose(c.tensorArrow(h, h), a.comul) &&
                             C.compose(b.counit, h) == a.counit;
                if (comul && isMonoidMap(c, a, b, h)) homs.push_back({i, j, h, npos});
            }
    return assembleStructures(WeightTag::Bimonoid, objs, homs, c);
}

StructureCategory enumerateActions(const ActionDatum &action) {
    validateAction(action);
    const FinMonoidalCategory &c = action.acting;
    const FinCategory &D = action.space;
    std::vector<VariantObject> objs;
    for (auto &m : monoidsOf(c))
        for (Nat x = 0; x < D.objectCount(); ++x)
            for (Nat a : D.hom(action.act(m.carrier, x), x)) {
                Nat idx = D.id(x);
                if (D.compose(a, action.actArrow(m.unit, idx)) != idx) continue;
                if (D.compose(a, action.actArrow(m.mul, idx)) !=
                    D.compose(a, action.actArrow(c.base.id(m.carrier), a)))
                    continue;
                VariantObject o = m;
                o.space = x;
                o.act = a;
                objs.push_back(o);
            }
    std::vector<StructureHom> homs;
    for (Nat i = 0; i < objs.size(); ++i)
        for (Nat j = 0; j < objs.size(); ++j)
            for (Nat h : c.base.hom(objs[i].carrier, objs[j].carrier)) {
                if (!isMonoidMap(c, objs[i], objs[j], h)) continue;
                for (Nat k : D.hom(objs[i].space, objs[j].space))
                    if (D.compose(k, objs[i].act) == D.compose(objs[j].act, action.actArrow(h, k)))
                        homs.push_back({i, j, h, k});
            }
    return assembleStructures(WeightTag::Action, objs, homs, c, &action);
}

StructureCategory oracleFor(WeightTag tag, const FinMonoidalCategory &c, const ActionDatum *action) {
    switch (tag) {
    case WeightTag::Monoid: return enumerateMonoids(c);
    case WeightTag::Comonoid: return enumerateComonoids(c);
    case WeightTag::CMonoid: return enumerateCommutativeMonoids(c);
    case WeightTag::Bimonoid: return enumerateBimonoids(c);
    case WeightTag::Action:
        if (!action) throw Error("actions need an action");
        return enumerateActions(*action);
    }
    throw Error("unknown weight");
}

FinFunctor inducedOnMonoids(const LaxMonoidalFunctor &f, const FinMonoidalCategory &c,
                            const FinMonoidalCategory &target, const StructureCategory &monC,
                            const StructureCategory &monTarget) {
    const FinCategory &D = target.base;
    Nat n = c.base.objectCount();
    FinFunctor out;
    for (auto &o : monC.objects) {
        VariantObject image;
        image.carrier = f.functor.onObjects[o.carrier];
        image.mul = D.compose(f.functor.onArrows[o.mul], f.phi[o.carrier * n + o.carrier]);
        image.unit = D.compose(f.functor.onArrows[o.unit], f.phiUnit);
        auto it = std::find(monTarget.objects.begin(), monTarget.objects.end(), image);
        if (it == monTarget.objects.end()) throw Error("inducedOnMonoids: image is not a monoid");
        out.onObjects.push_back(it - monTarget.objects.begin());
    }
    for (auto &h : monC.homs) {
        StructureHom image{out.onObjects[h.src], out.onObjects[h.dst], f.functor.onArrows[h.onCarrier], npos};
        auto it = std::find(monTarget.homs.begin(), monTarget.homs.end(), image);
        if (it == monTarget.homs.end()) throw Error("inducedOnMonoids: image is not a monoid map");
        out.onArrows.push_back(it - monTarget.homs.begin());
    }
    return out;
}

} // namespace weights
