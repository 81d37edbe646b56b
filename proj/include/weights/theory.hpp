#pragma once

#include "weights/twospan.hpp"
#include "weights/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weights {

// ---------------------------------------------------------------------------
// The 2-theory M of monoids.

/// A 1-cell (n] -> (m] of M: m binary words over (n].
struct MOneCell {
    Nat dom = 0;
    std::vector<BinWord> words;

    Nat cod() const { return words.size(); }
    /// Words separated by commas, e.g. "(1*2),e".
    std::string str() const;

    friend bool operator==(const MOneCell &, const MOneCell &) = default;
};

MOneCell makeM(Nat dom, std::vector<BinWord> words);
/// Accepts ',' or ';' as separators. dom defaults to the largest leaf.
MOneCell parseM(const std::string &text, std::optional<Nat> dom = std::nullopt);

MOneCell identityM(Nat n);
/// g after f: words[i] = g.words[i] with j replaced by f.words[j].
MOneCell composeM(const MOneCell &f, const MOneCell &g);

struct ProductM {
    Nat obj = 0;
    MOneCell p1, p2;
};
ProductM productM(Nat n, Nat m);
/// <f, g> : (n] -> (a+b].
MOneCell pairingM(const MOneCell &f, const MOneCell &g);
MOneCell terminalM(Nat n);

/// The unique 2-cell between parallel 1-cells with equal types.
struct MTwoCell {
    MOneCell dom, cod;
};
std::optional<MTwoCell> twoCellM(const MOneCell &f, const MOneCell &g);

struct GeneratorsM {
    std::vector<MOneCell> oneCells;
    std::vector<MTwoCell> twoCells;
};
/// Projections i : (m] -> (1] for m <= maxArity, e, (1*2), the associator and the unitors.
GeneratorsM generatorsM(Nat maxArity = 3);

/// The 1-cell as a span of [top BTr], then pushed along BTr -> b.
SpanMorphism imageM(const MOneCell &c, OperadId b = OperadId::BTr);

// ---------------------------------------------------------------------------
// Weights.

enum class WeightTag { Monoid, Comonoid, CMonoid, Bimonoid, Action };

struct WeightId {
    WeightTag tag = WeightTag::Monoid;
    OperadArray array;
    OperadId generators = OperadId::BTr;
};

WeightId weightFor(WeightTag tag);
std::string weightName(WeightTag tag);
WeightTag parseWeight(const std::string &name);
/// CMonoid and Bimonoid need a symmetry on the target category.
bool needsSymmetry(WeightTag tag);

/// An object of W(n]: a tuple of terms. Uncolored weights use words over the leaf 1.
/// The action weight lists n0 terms of color 0 over the leaf 1, then n1 terms of
/// color 1 whose only color-1 leaf is 2.
struct WObject {
    std::vector<ActTerm> parts;
    Nat n1 = 0;

    Nat n0() const { return parts.size() - n1; }
    /// Raw occurrence numbers of the leaves of each part, left to right. Occurrences
    /// of 1 are numbered first, across all parts, then occurrences of 2.
    std::vector<std::vector<Nat>> leafIds() const;
    Nat occurrences() const;
    /// Color of a raw occurrence.
    Color colorOfOccurrence(Nat k) const;
    std::string str() const;

    friend bool operator==(const WObject &a, const WObject &b) { return a.n1 == b.n1 && a.str() == b.str(); }
    friend bool operator<(const WObject &a, const WObject &b) { return a.str() < b.str(); }
};

WObject wordObject(const std::vector<BinWord> &words);
/// Parts separated by ',' or ';'. Terms containing '>' or the leaf 2 are color 1.
WObject parseWObject(const std::string &text);
void validateWObject(const WeightId &w, const WObject &o);

/// The object as a 1-cell of the bottom row of the weight's array, together with the
/// raw occurrence sitting at each canonical apex element.
struct WImage {
    SpanMorphism span;
    std::vector<Nat> occurrenceAt; ///< occurrenceAt[a-1] for canonical apex element a
};
WImage imageW(const WeightId &w, const WObject &o);

/// Occurrence-level reading of a morphism w -> u of W(n]: middle elements 1..m,
/// split[i-1] lists those over occurrence i of w, merge[j-1] those over occurrence j
/// of u, each in the order carried by the labels (increasing when unordered).
struct OccurrenceCell {
    Nat m = 0;
    std::vector<std::vector<Nat>> split, merge;
    friend bool operator==(const OccurrenceCell &, const OccurrenceCell &) = default;
};

struct WCell {
    WObject dom, cod;
    TwoSpanCell cell;
    OccurrenceCell occ;

    std::string key() const { return cell.key(); }
    friend bool operator==(const WCell &a, const WCell &b) { return a.cell == b.cell; }
};

WCell makeWCell(const WeightId &w, const WObject &dom, const WObject &cod, const TwoSpanCell &cell);

/// All morphisms dom -> cod of W(n], from canonical 2-spans of the weight's array.
/// maxApex bounds the middle set where it is not determined (Bimonoid).
std::vector<WCell> homW(const WeightId &w, const WObject &dom, const WObject &cod, Nat maxApex = 4);

WCell identityW(const WeightId &w, const WObject &o);

/// v after u on occurrence data alone. Middle elements of the composite are the
/// pairs (k1, k2) with k1 merging where k2 splits, numbered in split order. Lists
/// are composed lexicographically, as orders compose in Lo.
OccurrenceCell composeOccurrences(const OccurrenceCell &u, const OccurrenceCell &v);

/// v after u.
WCell composeW(const WeightId &w, const WCell &u, const WCell &v);

/// A morphism of the monoid weight as monotone maps between occurrence chains.
struct WMonTwoCell {
    WObject dom, cod;
    std::vector<FinFunction> maps; ///< maps[j]: occurrences of dom part j -> those of cod part j
    friend bool operator==(const WMonTwoCell &a, const WMonTwoCell &b) { return a.maps == b.maps; }
    friend bool operator<(const WMonTwoCell &a, const WMonTwoCell &b) { return a.maps < b.maps; }
};

/// Monoid weight, directly: all tuples of weakly monotone maps.
std::vector<WMonTwoCell> homMonoid(const WObject &dom, const WObject &cod);
WMonTwoCell asMonotone(const WCell &c);
/// The occurrence reading of a monoid-weight cell: middle element i sits over
/// occurrence i of the domain.
OccurrenceCell occurrencesOf(const WMonTwoCell &c);

/// All uncolored objects of W(n] whose parts have depth at most d.
std::vector<WObject> objectsUpToDepth(Nat n, Nat d);
/// Words over {e, 1} of depth at most d.
std::vector<BinWord> wordsUpToDepth(Nat d);

/// W(c) on objects: substitute the parts of o into the words of c.
WObject weightOnOneCell(const MOneCell &c, const WObject &o);
/// W(c) on morphisms: post-composition with the image of c.
WCell weightOnOneCell(const WeightId &w, const MOneCell &c, const WCell &x);
/// The component W(alpha)_o : W(alpha.dom)(o) -> W(alpha.cod)(o), the identity on occurrences.
WCell weightOnTwoCell(const WeightId &w, const MTwoCell &alpha, const WObject &o);

} // namespace weights
