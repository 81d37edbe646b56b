#pragma once

#include "weights/finset.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace weights {

/// Binary word over a natural-number alphabet: e, a leaf, or (w*u).
///
/// Terms are immutable and share subtrees.
class BinWord {
public:
    enum class Kind { Unit, Leaf, Pair };

    BinWord() : BinWord(unit()) {}

    static BinWord unit();
    static BinWord leaf(Nat x);
    static BinWord pair(BinWord l, BinWord r);

    Kind kind() const;
    bool isUnit() const { return kind() == Kind::Unit; }
    bool isLeaf() const { return kind() == Kind::Leaf; }
    bool isPair() const { return kind() == Kind::Pair; }
    Nat letter() const;
    BinWord left() const;
    BinWord right() const;

    /// Number of nodes.
    Nat size() const;
    Nat depth() const;

    std::string str() const;
    static BinWord parse(std::string_view text);

    friend bool operator==(const BinWord &a, const BinWord &b);
    friend std::strong_ordering operator<=>(const BinWord &a, const BinWord &b);

private:
    struct Node;
    explicit BinWord(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

using TypeWord = std::vector<Nat>;

/// Leaves in left-to-right order.
TypeWord typeOf(const BinWord &w);

/// Replaces leaf i by args[i-1].
BinWord substitute(const BinWord &u, const std::vector<BinWord> &args);

/// Every x in the alphabet occurs exactly once; e is unrestricted.
bool isLinear(const BinWord &w, const std::vector<Nat> &alphabet);

/// Number of leaves.
Nat occurrences(const BinWord &w);

/// Applies a relabelling to every leaf.
BinWord relabel(const BinWord &w, const std::vector<Nat> &newName);

/// Largest leaf, 0 if none.
Nat maxLetter(const BinWord &w);

std::string renderType(const TypeWord &t);

} // namespace weights
