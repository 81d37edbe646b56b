#pragma once

#include "weights/finset.hpp"
#include "weights/operad.hpp"

#include <string>
#include <vector>

namespace weights {

/// Block sizes per color; uncolored objects have one block.
using ColoredObject = std::vector<Nat>;

Nat total(const ColoredObject &o);
/// Color of element x of the coproduct, color-0 block first.
Color colorAt(const ColoredObject &o, Nat x);
ColoredObject plainObject(Nat n);
/// The object shape used by an operad: one block, or two for the colored operads.
ColoredObject objectFor(OperadId id, Nat n0, Nat n1 = 0);

/// An arrow of F_A: a function with an operation of A on every fiber.
struct FAMorphism {
    OperadId operad = OperadId::Top;
    ColoredObject dom, cod;
    FinFunction f;
    std::vector<OperadOp> labels; ///< labels[i-1] is carried by fiber(f, i)

    std::string str() const;
    friend bool operator==(const FAMorphism &, const FAMorphism &) = default;
};

/// Throws unless labels sit on the fibers with the right colors.
void validateFA(const FAMorphism &x);

FAMorphism makeFA(OperadId id, ColoredObject dom, ColoredObject cod, FinFunction f, std::vector<OperadOp> labels);
/// Uncolored shorthand.
FAMorphism makeFA(OperadId id, FinFunction f, std::vector<OperadOp> labels);

FAMorphism identityFA(OperadId id, const ColoredObject &n);
FAMorphism identityFA(OperadId id, Nat n);

/// second after first; labels multiply operadically.
FAMorphism composeFA(const FAMorphism &first, const FAMorphism &second);
/// Same as composeFA; spelled out for the colored categories.
FAMorphism composeColoredFA(const FAMorphism &first, const FAMorphism &second);

/// Block sum, color by color.
FAMorphism tensorFA(const FAMorphism &x, const FAMorphism &y);

FinFunction piA(const FAMorphism &x);

/// Image under the functor induced by an operad morphism.
FAMorphism mapFA(OperadId to, const FAMorphism &x);

/// Relabels the domain along a color-preserving bijection sigma : dom -> dom.
FAMorphism precomposeBijection(const FAMorphism &x, const FinFunction &sigma);

/// sigma o x for a color-preserving bijection sigma of the codomain; labels move along.
FAMorphism postcomposeBijection(const FAMorphism &x, const FinFunction &sigma);

/// Reindexing of the coproduct blocks: where element x of the k-th summand lands.
Nat tensorIndex(const ColoredObject &a, const ColoredObject &b, bool second, Nat x);
ColoredObject tensorObject(const ColoredObject &a, const ColoredObject &b);

/// All morphisms dom -> cod; BTr/Act labels limited by bound units per fiber.
std::vector<FAMorphism> enumerateFA(OperadId id, const ColoredObject &dom, const ColoredObject &cod, Nat bound = 0);

/// Labels for a fixed underlying function.
std::vector<FAMorphism> enumerateLabelings(OperadId id, const ColoredObject &dom, const ColoredObject &cod,
                                           const FinFunction &f, Nat bound = 0);

} // namespace weights
