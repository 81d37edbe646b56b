#pragma once

#include "weights/theory.hpp"

#include <array>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace weights {

inline constexpr Nat npos = std::numeric_limits<Nat>::max();

/// A finite category with objects and morphisms numbered from 0.
struct FinCategory {
    struct Arrow {
        std::string id;
        Nat src = 0, dst = 0;
    };
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<Nat> identity;  ///< per object
    std::vector<Nat> table;     ///< table[g * arrows + f] = g o f, npos if not composable

    Nat objectCount() const { return objects.size(); }
    Nat arrowCount() const { return arrows.size(); }
    Nat src(Nat f) const { return arrows.at(f).src; }
    Nat dst(Nat f) const { return arrows.at(f).dst; }
    Nat id(Nat a) const { return identity.at(a); }
    /// g after f; throws unless dst(f) = src(g).
    Nat compose(Nat g, Nat f) const;
    /// Composite of a path given first-to-last.
    Nat path(std::initializer_list<Nat> fs) const;
    std::vector<Nat> hom(Nat a, Nat b) const;
    std::optional<Nat> inverse(Nat f) const;

    Nat objectIndex(const std::string &name) const;
    Nat arrowIndex(const std::string &name) const;
};

/// Builds the table from a composition function and checks the category laws.
FinCategory makeCategory(std::vector<std::string> objects, std::vector<FinCategory::Arrow> arrows,
                         std::vector<Nat> identity, const std::vector<std::array<Nat, 3>> &composites);

/// Throws with the first violated law.
void validateCategory(const FinCategory &c);

FinCategory opposite(const FinCategory &c);
FinCategory terminalCategory();
FinCategory discreteCategory(Nat n);

/// The n-fold power; objects and arrows are tuples in lexicographic order.
FinCategory powerCategory(const FinCategory &c, Nat n);
/// Index of a tuple of objects (or arrows) of c in its power.
Nat tupleIndex(Nat base, const std::vector<Nat> &tuple);
std::vector<Nat> tupleOf(Nat base, Nat n, Nat index);

struct FinFunctor {
    std::vector<Nat> onObjects, onArrows;
    friend bool operator==(const FinFunctor &, const FinFunctor &) = default;
};

struct FinNatTrans {
    std::vector<Nat> components; ///< per object of the source category
    friend bool operator==(const FinNatTrans &, const FinNatTrans &) = default;
};

void validateFunctor(const FinFunctor &f, const FinCategory &c, const FinCategory &d);
void validateNatTrans(const FinNatTrans &t, const FinFunctor &f, const FinFunctor &g, const FinCategory &c,
                      const FinCategory &d);
FinFunctor identityFunctor(const FinCategory &c);
/// g after f.
FinFunctor composeFunctors(const FinFunctor &f, const FinFunctor &g);
FinFunctor projectionFunctor(const FinCategory &c, Nat n, Nat i);
/// All functors c -> d.
std::vector<FinFunctor> allFunctors(const FinCategory &c, const FinCategory &d);
/// All natural transformations f => g between functors c -> d.
std::vector<FinNatTrans> allNatTrans(const FinFunctor &f, const FinFunctor &g, const FinCategory &c,
                                     const FinCategory &d);

/// A finite monoidal category. When strict, the coherence tables are empty and the
/// components are identities. alpha : (a*b)*c -> a*(b*c), lunit : I*a -> a,
/// runit : a*I -> a, sym : a*b -> b*a.
struct FinMonoidalCategory {
    FinCategory base;
    std::vector<Nat> tensorObjects; ///< [a * objects + b]
    std::vector<Nat> tensorArrows;  ///< [f * arrows + g]
    Nat unit = 0;
    bool strict = true;
    std::vector<Nat> alpha, lunit, runit;
    std::vector<Nat> sym; ///< empty when there is no symmetry

    bool symmetric() const { return !sym.empty(); }
    Nat tensor(Nat a, Nat b) const { return tensorObjects.at(a * base.objectCount() + b); }
    Nat tensorArrow(Nat f, Nat g) const { return tensorArrows.at(f * base.arrowCount() + g); }
    Nat assoc(Nat a, Nat b, Nat c) const;
    Nat left(Nat a) const;
    Nat right(Nat a) const;
    Nat swap(Nat a, Nat b) const;
};

struct MonoidalReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Functoriality of the tensor, naturality and invertibility of the coherence
/// components, pentagon, triangle, and the symmetry axioms when present.
MonoidalReport validateMonoidal(const FinMonoidalCategory &c);

/// The same tensor on the opposite category; coherence components are inverted.
FinMonoidalCategory oppositeMonoidal(const FinMonoidalCategory &c);

/// Value of a word with leaf i read as objs[i-1] (e is the unit).
Nat evalObject(const FinMonoidalCategory &c, const BinWord &w, const std::vector<Nat> &objs);
Nat evalArrow(const FinMonoidalCategory &c, const BinWord &w, const std::vector<Nat> &arrows);

enum class NormalForm { RightNested, LeftNested };

/// The coherence isomorphism eval(from) -> eval(to) for words with the same leaves,
/// composed from alpha, lunit, runit through the chosen normal form.
Nat coherence(const FinMonoidalCategory &c, const BinWord &from, const BinWord &to, const std::vector<Nat> &objs,
              NormalForm nf = NormalForm::RightNested);

/// The functor C^n -> C^m of a 1-cell of M, by structural recursion.
FinFunctor phiEvalOneCell(const FinMonoidalCategory &c, const MOneCell &cell);
/// The coherence transformation of a 2-cell of M. Throws for non-strict categories
/// without coherence data.
FinNatTrans phiEvalTwoCell(const FinMonoidalCategory &c, const MTwoCell &alpha);

/// An action C x D -> D of a monoidal category. Only strict actions are supported:
/// I.x = x and (m*n).x = m.(n.x) on the nose.
struct ActionDatum {
    FinMonoidalCategory acting;
    FinCategory space;
    std::vector<Nat> actObjects; ///< [m * space objects + x]
    std::vector<Nat> actArrows;  ///< [f * space arrows + g]

    Nat act(Nat m, Nat x) const { return actObjects.at(m * space.objectCount() + x); }
    Nat actArrow(Nat f, Nat g) const { return actArrows.at(f * space.arrowCount() + g); }
};

void validateAction(const ActionDatum &a);
/// C acting on its own underlying category by the tensor.
ActionDatum regularAction(const FinMonoidalCategory &c);

/// phi_{x,y} : F(x) *' F(y) -> F(x*y) and phiUnit : I' -> F(I).
struct LaxMonoidalFunctor {
    FinFunctor functor;
    std::vector<Nat> phi; ///< [x * objects + y]
    Nat phiUnit = 0;
};

void validateLax(const LaxMonoidalFunctor &f, const FinMonoidalCategory &c, const FinMonoidalCategory &d);
LaxMonoidalFunctor identityLax(const FinMonoidalCategory &c);
/// g after f, with phi composed as G(phi_f) o phi_g.
LaxMonoidalFunctor composeLax(const LaxMonoidalFunctor &f, const LaxMonoidalFunctor &g,
                              const FinMonoidalCategory &mid, const FinMonoidalCategory &target);

} // namespace weights
