#pragma once

#include "weights/span.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weights {

/// A 2x2 array [A1 B1 / A0 B0]. The four operad morphisms A1 -> A0, A1 -> B0,
/// B1 -> A0, B1 -> B0 are the unique ones along the chain.
struct OperadArray {
    OperadId a1 = OperadId::Bot, b1 = OperadId::Lo, a0 = OperadId::Top, b0 = OperadId::Lo;

    std::string str() const;
    friend bool operator==(const OperadArray &, const OperadArray &) = default;
};

void validateArray(const OperadArray &a);
OperadArray parseArray(const std::string &text);

/// A 2-cell dom => cod between parallel 1-cells of [A0 B0].
///
/// The boundary 1-cells are canonical spans and stay fixed; the cell itself is the
/// canonical span dom.apex <-d2- (m] -c2-> cod.apex of [A1 B1]. Two cells are equal
/// iff an apex bijection of (m] identifies them.
struct TwoSpanCell {
    OperadArray array;
    SpanMorphism dom, cod, cell;

    const FAMorphism &d2() const { return cell.left; }
    const FAMorphism &c2() const { return cell.right; }

    std::string key() const;
    std::string str() const;

    friend bool operator==(const TwoSpanCell &a, const TwoSpanCell &b) { return a.key() == b.key(); }
    friend bool operator<(const TwoSpanCell &a, const TwoSpanCell &b) { return a.key() < b.key(); }
};

/// Whether d2, c2 make both triangles commute after mapping into A0 and B0. Over
/// top2 the left triangle is checked only on elements whose color c2 keeps.
bool cellCommutes(const OperadArray &array, const SpanMorphism &dom, const SpanMorphism &cod, const FAMorphism &d2,
                  const FAMorphism &c2);

TwoSpanCell makeCell(const OperadArray &array, const SpanMorphism &dom, const SpanMorphism &cod, FAMorphism d2,
                     FAMorphism c2);

TwoSpanCell identityCell(const OperadArray &array, const SpanMorphism &s);

/// v after u.
TwoSpanCell verticalCompose(const TwoSpanCell &u, const TwoSpanCell &v);

/// u followed by the 1-cell t: (u.dom ; t) => (u.cod ; t).
TwoSpanCell whiskerRight(const TwoSpanCell &u, const SpanMorphism &t);

/// The 1-cell s followed by v: (s ; v.dom) => (s ; v.cod).
TwoSpanCell whiskerLeft(const SpanMorphism &s, const TwoSpanCell &v);

/// (u.dom ; v.dom) => (u.cod ; v.cod).
TwoSpanCell horizontalCompose(const TwoSpanCell &u, const TwoSpanCell &v);

/// All 2-cells dom => cod. When A1 (or B1) is bottom the corresponding inner leg is
/// taken to be an identity; otherwise the apex is bounded by maxApex. bound is the
/// unit budget for BTr and Act labels.
std::vector<TwoSpanCell> localHom(const OperadArray &array, const SpanMorphism &dom, const SpanMorphism &cod,
                                  Nat bound = 0, Nat maxApex = 4);

} // namespace weights
