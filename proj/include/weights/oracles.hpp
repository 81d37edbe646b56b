#pragma once

#include "weights/limits.hpp"

namespace weights {

// Brute-force categories of structures, each checked against its written-out laws.

StructureCategory enumerateMonoids(const FinMonoidalCategory &c);
/// Monoids in the opposite, read back in c.
StructureCategory enumerateComonoids(const FinMonoidalCategory &c);
/// Monoids with mu o s = mu. Throws without a symmetry.
StructureCategory enumerateCommutativeMonoids(const FinMonoidalCategory &c);
/// Monoid and comonoid on one carrier with eps eta = id, eps mu = l (eps * eps),
/// delta eta = (eta * eta) l^-1 and the middle-four compatibility of delta and mu.
/// Morphisms preserve both structures. Throws without a symmetry.
StructureCategory enumerateBimonoids(const FinMonoidalCategory &c);
/// Pairs of a monoid M and an object x with a : M.x -> x such that
/// a (eta . 1) = 1 and a (mu . 1) = a (1 . a). Morphisms (h, k) are monoid maps h
/// with k a = a' (h . k). Strict actions only.
StructureCategory enumerateActions(const ActionDatum &action);

/// The oracle for a weight tag. The action tag needs the action.
StructureCategory oracleFor(WeightTag tag, const FinMonoidalCategory &c, const ActionDatum *action = nullptr);

/// Mon(F) : Mon(C) -> Mon(C') of a lax monoidal functor.
FinFunctor inducedOnMonoids(const LaxMonoidalFunctor &f, const FinMonoidalCategory &c,
                            const FinMonoidalCategory &target, const StructureCategory &monC,
                            const StructureCategory &monTarget);

} // namespace weights
