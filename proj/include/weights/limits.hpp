#pragma once

#include "weights/fincat.hpp"
#include "weights/theory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weights {

struct MonoidObject {
    Nat carrier = 0, mul = 0, unit = 0;
};

/// An object of a weighted limit or of an oracle category, as data in C. Unused
/// fields are npos. For actions, carrier is the monoid and space the object of D.
struct VariantObject {
    Nat carrier = 0;
    Nat mul = npos, unit = npos, comul = npos, counit = npos;
    Nat space = npos, act = npos;

    friend auto operator<=>(const VariantObject &, const VariantObject &) = default;
    friend bool operator==(const VariantObject &, const VariantObject &) = default;
};

VariantObject asVariant(const MonoidObject &m);

struct StructureHom {
    Nat src = 0, dst = 0;
    Nat onCarrier = 0;
    Nat onSpace = npos;

    friend auto operator<=>(const StructureHom &, const StructureHom &) = default;
    friend bool operator==(const StructureHom &, const StructureHom &) = default;
};

/// Structured objects and structure-preserving morphisms, with the category they form.
/// Arrow i of the category is homs[i].
struct StructureCategory {
    WeightTag tag = WeightTag::Monoid;
    std::vector<VariantObject> objects;
    std::vector<StructureHom> homs;
    FinCategory category;

    /// Number of morphisms, identities included.
    Nat homCount() const { return homs.size(); }
};

/// Sorts objects and homs and builds the category, composing in C (and in the space
/// of the action). Throws if identities or composites are missing.
StructureCategory assembleStructures(WeightTag tag, std::vector<VariantObject> objects,
                                     std::vector<StructureHom> homs, const FinMonoidalCategory &c,
                                     const ActionDatum *action = nullptr);

/// nullopt when the two categories have the same structured objects and morphisms,
/// which is an isomorphism commuting with the forgetful functors. Otherwise the first
/// difference.
std::optional<std::string> compareOverC(const StructureCategory &a, const StructureCategory &b);

/// The functor to C taking an object to its carrier.
FinFunctor forgetful(const StructureCategory &s);

std::string render(const FinMonoidalCategory &c, const VariantObject &o, const ActionDatum *action = nullptr);

// ---------------------------------------------------------------------------
// Cones for the monoid weight in (f, mu, eta) form.

struct WCone {
    FinCategory vertex;
    FinFunctor f;   ///< X -> C
    FinNatTrans mu;  ///< f(x) * f(x) -> f(x)
    FinNatTrans eta; ///< I -> f(x)
};

/// Throws unless the components have the right ends and are natural in the vertex.
void validateConeShape(const FinMonoidalCategory &c, const WCone &cone);

/// mu (1 * mu) alpha = mu (mu * 1), mu (eta * 1) = l and mu (1 * eta) = r at every
/// object of the vertex.
bool checkConeLaws(const FinMonoidalCategory &c, const WCone &cone);

WCone coneFromMonoid(const FinMonoidalCategory &c, const MonoidObject &m);

/// tau on an object of W(n]: the functor X -> C^n replacing 1 by f and e by I.
FinFunctor evalCone(const FinMonoidalCategory &c, const WCone &cone, const WObject &w);
/// tau on a morphism of W(n]: components in C^n, built from coherence cells and
/// contractions by mu and eta.
FinNatTrans evalCone(const FinMonoidalCategory &c, const WCone &cone, const WMonTwoCell &x);

/// Checks that tau is a 2-natural transformation W => Cat(X, F(-)) on the truncation:
/// objects of W(1] of word depth <= depth, all composable pairs of their morphisms,
/// the 1-cell (1*2) on objects of W(2], the generating 2-cells, and naturality in the
/// arrows of X. Depth 0 is vacuous. On failure, why receives a description.
bool checkNaturalityTruncated(const FinMonoidalCategory &c, const WCone &cone, Nat depth,
                              std::string *why = nullptr);

struct Truncation {
    Nat depth = 2; ///< word depth
    Nat bound = 3; ///< leaves per word, units included
};

/// Weight-driven check for one candidate structure with terminal vertex: tau is
/// functorial on the truncation of W for the tag's weight. Every morphism is composed
/// after each elementary morphism (one split or merge of size 0 or 2, or one adjacent
/// transposition).
bool checkWeightTruncated(const FinMonoidalCategory &c, WeightTag tag, const VariantObject &o,
                          const ActionDatum *action = nullptr, Truncation t = {}, std::string *why = nullptr);

/// The weighted limit as a finite category of structures in C. The monoid weight
/// uses the (f, mu, eta) normal form with checkConeLaws; the other weights keep the
/// candidates passing checkWeightTruncated, with morphisms the maps whose evaluations
/// commute with tau on the elementary morphisms of the truncation.
StructureCategory weightedLimit(const FinMonoidalCategory &c, WeightTag tag, const ActionDatum *action = nullptr,
                                Truncation t = {});

/// The cone with vertex the limit: f forgets, mu and eta are the structure maps.
WCone universalCone(const FinMonoidalCategory &c, const StructureCategory &lim);

/// The functor X -> lim picking (f(x), mu_x, eta_x) at each object.
FinFunctor comparisonPsi(const FinMonoidalCategory &c, const WCone &cone, const StructureCategory &lim);

/// The cone restricted along g : Y -> vertex.
WCone precompose(const WCone &cone, const FinFunctor &g, const FinCategory &y);

/// All cones with vertex x.
std::vector<WCone> enumerateCones(const FinMonoidalCategory &c, const FinCategory &x);

/// Morphisms of cones: transformations f => f' whose components are monoid maps.
std::vector<FinNatTrans> coneMorphisms(const FinMonoidalCategory &c, const WCone &a, const WCone &b);

} // namespace weights
