#pragma once

#include "weights/fcat.hpp"

#include <string>
#include <variant>
#include <vector>

namespace weights {

/// An arrow of [A B]: src <- apex -> tgt, left leg in F_A, right leg in F_B.
///
/// Over colored operads the left leg must preserve colors; otherwise a pullback
/// element would need the colors of both of its components.
///
/// Values produced by this module are always in canonical form, so equality of
/// spans is equality of representatives.
struct SpanMorphism {
    OperadId opA = OperadId::Top, opB = OperadId::Top;
    ColoredObject src, tgt, apex;
    FAMorphism left, right;

    /// Total encoding; equal keys iff equal canonical spans.
    std::string key() const;
    std::string str() const;

    friend bool operator==(const SpanMorphism &a, const SpanMorphism &b) { return a.key() == b.key(); }
    friend bool operator<(const SpanMorphism &a, const SpanMorphism &b) { return a.key() < b.key(); }
};

/// Canonical representative of the class of a raw span under apex bijections.
///
/// Apex elements are sorted by (color, left image, right image, leaf position in
/// the left label, leaf position in the right label).
SpanMorphism canonicalize(const SpanMorphism &raw);

/// Canonical form together with the apex bijection sigma taking raw to canonical:
/// canonical.left o sigma = raw.left, and likewise on the right.
struct TrackedSpan {
    SpanMorphism span;
    FinFunction sigma;
};
TrackedSpan canonicalizeTracked(const SpanMorphism &raw);

SpanMorphism makeSpan(FAMorphism left, FAMorphism right);

SpanMorphism identitySpan(OperadId opA, OperadId opB, const ColoredObject &n);
SpanMorphism identitySpan(OperadId opA, OperadId opB, Nat n);

/// s2 after s1, through the labelled pullback square.
SpanMorphism composeSpan(const SpanMorphism &s1, const SpanMorphism &s2);

/// The composite before canonicalization; its apex is the pullback apex.
SpanMorphism composeSpanRaw(const SpanMorphism &s1, const SpanMorphism &s2);

SpanMorphism tensorSpan(const SpanMorphism &s1, const SpanMorphism &s2);

/// The same span read in [B A].
SpanMorphism dualSpan(const SpanMorphism &s);

/// Image of a span under the functor induced by operad morphisms.
SpanMorphism mapSpan(OperadId toA, OperadId toB, const SpanMorphism &s);

/// Labelled pullback of g (right leg of the first span, in F_B) and f (left leg of
/// the second span, in F_A). Returns the two new legs p -> dom(g) in F_A and
/// p -> dom(f) in F_B.
struct LabelledSquare {
    ColoredObject apex;
    FAMorphism toFirst;  ///< f'': p -> dom(g), labels from f
    FAMorphism toSecond; ///< g'': p -> dom(f), labels from g
    std::vector<std::pair<Nat, Nat>> pairs; ///< apex element k is pairs[k-1] = (u, v)
};
LabelledSquare labelledPullback(const FAMorphism &g, const FAMorphism &f);

/// All canonical spans src -> tgt with apex size at most maxApex.
std::vector<SpanMorphism> enumerateSpans(OperadId opA, OperadId opB, const ColoredObject &src,
                                         const ColoredObject &tgt, Nat maxApex, Nat bound = 0);

/// Plain span of finite sets, sorted so that equal spans compare equal.
struct PlainSpan {
    FinFunction left, right;
    friend bool operator==(const PlainSpan &, const PlainSpan &) = default;
    friend auto operator<=>(const PlainSpan &, const PlainSpan &) = default;
};
PlainSpan normalizePlainSpan(const FinFunction &l, const FinFunction &r);
PlainSpan composePlainSpan(const PlainSpan &a, const PlainSpan &b);

enum class SpecialIso { BotA_to_FA, TopTop_to_SpanF, BotTop_to_F, BotBot_to_B };
using SpecialImage = std::variant<FAMorphism, PlainSpan, FinFunction>;

/// The comparisons [bot A] ~ F_A, [top top] ~ Span(F), [bot top] ~ F, [bot bot] ~ B.
SpecialImage specialIso(SpecialIso which, const SpanMorphism &s);

/// Inverses of the comparisons, used to check they are bijective.
SpanMorphism fromFA(const FAMorphism &x);
SpanMorphism fromPlainSpan(const PlainSpan &s);
SpanMorphism fromFunction(const FinFunction &f);
SpanMorphism fromBijection(const FinFunction &f);

} // namespace weights
