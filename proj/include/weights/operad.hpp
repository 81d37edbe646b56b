#pragma once

#include "weights/finset.hpp"
#include "weights/words.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace weights {

enum class OperadId { Bot, BTr, Lo, Top, Bot2, Act, Lo2, Top2 };

bool isColored(OperadId id);
std::string operadName(OperadId id);
OperadId parseOperad(std::string_view name);

using Color = int;

/// Two-colored term over e : 0, m : (0,0) -> 0, a : (0,1) -> 1.
class ActTerm {
public:
    enum class Kind { Unit, Leaf, Mul, Act };

    ActTerm() : ActTerm(unit()) {}
    static ActTerm unit();
    static ActTerm leaf(Nat x);
    static ActTerm mul(ActTerm l, ActTerm r);
    static ActTerm act(ActTerm l, ActTerm r);

    Kind kind() const { return node_->kind; }
    Nat letter() const;
    ActTerm left() const;
    ActTerm right() const;

    /// Leaves in left-to-right order.
    std::vector<Nat> leaves() const;
    Nat units() const;

    /// Output color, given the color of every leaf. Throws on ill-typed terms.
    Color typeCheck(const std::map<Nat, Color> &leafColor) const;

    ActTerm relabel(const std::map<Nat, Nat> &sigma) const;
    /// Replaces each leaf x by sub.at(x).
    ActTerm graft(const std::map<Nat, ActTerm> &sub) const;

    /// e, leaf, (l*r) for m, (l>r) for a.
    std::string str() const;
    static ActTerm parse(std::string_view text);

    friend bool operator==(const ActTerm &a, const ActTerm &b) { return a.str() == b.str(); }

private:
    struct Node {
        Kind kind;
        Nat letter = 0;
        std::shared_ptr<const Node> l, r;
    };
    explicit ActTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// One operation of one of the eight operads, carried by a finite set of naturals.
///
/// Uncolored operads use color 0 throughout.
struct OperadOp {
    OperadId operad = OperadId::Top;
    FiberedSubset carrier;
    std::vector<Color> colors; ///< parallel to carrier
    Color out = 0;
    std::vector<Nat> order;    ///< Lo, Lo2: the carrier listed once each
    BinWord tree;              ///< BTr
    ActTerm term;              ///< Act

    Color colorOf(Nat x) const;
    /// Canonical rendering, used for equality and for ordering payloads.
    std::string str() const;

    friend bool operator==(const OperadOp &a, const OperadOp &b);
};

/// Throws unless the op is well formed for its operad.
void validateOp(const OperadOp &op);

/// True iff the operad has an operation with this input coloring and output color.
bool profileAllowed(OperadId id, const std::vector<Color> &inputs, Color out);

OperadOp unitOp(OperadId id, Nat element, Color color = 0);

/// The unique operation of Top/Top2 (or Lo with the given order etc.) on a carrier.
OperadOp topOp(OperadId id, FiberedSubset carrier, std::vector<Color> colors = {}, Color out = 0);
OperadOp loOp(std::vector<Nat> order);
OperadOp lo2Op(std::vector<Nat> order, std::vector<Color> colorsInOrder, Color out);
OperadOp btrOp(BinWord w);
OperadOp actOp(ActTerm t, const std::map<Nat, Color> &leafColor);

/// Operadic substitution: inner[k] is plugged into the k-th carrier element of outer.
OperadOp multiply(const OperadOp &outer, const std::vector<OperadOp> &inner);

/// Relabels along a bijection carrier -> target given as a map.
OperadOp actBijection(const OperadOp &op, const std::map<Nat, Nat> &sigma);

/// Changes the colors of the carrier and the output color; valid only when the
/// operad has an operation of the new profile with the same payload.
OperadOp recolor(const OperadOp &op, const std::vector<Color> &colors, Color out);

/// All operations on a carrier. BTr and Act are limited to at most bound occurrences of e.
std::vector<OperadOp> enumerateOps(OperadId id, const FiberedSubset &carrier, Nat bound = 0,
                                   const std::vector<Color> &colors = {}, Color out = 0);

/// Morphisms exist along Bot -> BTr -> Lo -> Top and Bot2 -> Act -> Lo2 -> Top2.
bool hasMorphism(OperadId from, OperadId to);
OperadOp applyMorphism(OperadId to, const OperadOp &op);

} // namespace weights
