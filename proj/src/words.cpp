#include "weights/words.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace weights {

struct BinWord::Node {
    Kind kind;
    Nat letter = 0;
    std::shared_ptr<const Node> l, r;
};

BinWord::Kind BinWord::kind() const { return node_->kind; }

BinWord BinWord::unit() {
    static const BinWord e(std::make_shared<const Node>(Node{Kind::Unit, 0, nullptr, nullptr}));
    return e;
}

BinWord BinWord::leaf(Nat x) { return BinWord(std::make_shared<const Node>(Node{Kind::Leaf, x, nullptr, nullptr})); }

BinWord BinWord::pair(BinWord l, BinWord r) {
    return BinWord(std::make_shared<const Node>(Node{Kind::Pair, 0, std::move(l.node_), std::move(r.node_)}));
}

Nat BinWord::letter() const {
    if (!isLeaf()) throw Error("letter() on a non-leaf word");
    return node_->letter;
}

BinWord BinWord::left() const {
    if (!isPair()) throw Error("left() on a non-pair word");
    return BinWord(node_->l);
}

BinWord BinWord::right() const {
    if (!isPair()) throw Error("right() on a non-pair word");
    return BinWord(node_->r);
}

Nat BinWord::size() const { return isPair() ? 1 + left().size() + right().size() : 1; }

Nat BinWord::depth() const { return isPair() ? 1 + std::max(left().depth(), right().depth()) : 0; }

std::string BinWord::str() const {
    switch (kind()) {
    case Kind::Unit: return "e";
    case Kind::Leaf: return std::to_string(letter());
    case Kind::Pair: return "(" + left().str() + "*" + right().str() + ")";
    }
    return {};
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string &what) const {
        throw Error("bad word '" + std::string(s) + "' at offset " + std::to_string(pos) + ": " + what);
    }

    BinWord term() {
        if (pos >= s.size()) fail("unexpected end");
        char c = s[pos];
        if (c == 'e') {
            ++pos;
            return BinWord::unit();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '0') fail("letters start at 1");
            Nat v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + static_cast<Nat>(s[pos++] - '0');
            return BinWord::leaf(v);
        }
        if (c == '(') {
            ++pos;
            BinWord l = term();
            if (pos >= s.size() || s[pos] != '*') fail("expected '*'");
            ++pos;
            BinWord r = term();
            if (pos >= s.size() || s[pos] != ')') fail("expected ')'");
            ++pos;
            return BinWord::pair(std::move(l), std::move(r));
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

} // namespace

BinWord BinWord::parse(std::string_view text) {
    Parser p{text};
    BinWord w = p.term();
    if (p.pos != text.size()) p.fail("trailing input");
    return w;
}

bool operator==(const BinWord &a, const BinWord &b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case BinWord::Kind::Unit: return true;
    case BinWord::Kind::Leaf: return a.letter() == b.letter();
    case BinWord::Kind::Pair: return a.left() == b.left() && a.right() == b.right();
    }
    return false;
}

std::strong_ordering operator<=>(const BinWord &a, const BinWord &b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.kind() != b.kind()) return a.kind() <=> b.kind();
    switch (a.kind()) {
    case BinWord::Kind::Unit: return std::strong_ordering::equal;
    case BinWord::Kind::Leaf: return a.letter() <=> b.letter();
    case BinWord::Kind::Pair:
        if (auto c = a.left() <=> b.left(); c != 0) return c;
        return a.right() <=> b.right();
    }
    return std::strong_ordering::equal;
}

namespace {
void collect(const BinWord &w, TypeWord &out) {
    if (w.isLeaf()) out.push_back(w.letter());
    else if (w.isPair()) {
        collect(w.left(), out);
        collect(w.right(), out);
    }
}
} // namespace

TypeWord typeOf(const BinWord &w) {
    TypeWord t;
    collect(w, t);
    return t;
}

BinWord substitute(const BinWord &u, const std::vector<BinWord> &args) {
    switch (u.kind()) {
    case BinWord::Kind::Unit: return u;
    case BinWord::Kind::Leaf:
        if (u.letter() < 1 || u.letter() > args.size())
            throw Error("substitute: leaf " + std::to_string(u.letter()) + " outside (" +
                        std::to_string(args.size()) + "]");
        return args[u.letter() - 1];
    case BinWord::Kind::Pair:
        return BinWord::pair(substitute(u.left(), args), substitute(u.right(), args));
    }
    return u;
}

bool isLinear(const BinWord &w, const std::vector<Nat> &alphabet) {
    std::map<Nat, Nat> count;
    for (Nat x : typeOf(w)) ++count[x];
    for (Nat x : alphabet)
        if (count[x] != 1) return false;
    for (auto &[x, c] : count)
        if (c > 0 && std::find(alphabet.begin(), alphabet.end(), x) == alphabet.end()) return false;
    return true;
}

Nat occurrences(const BinWord &w) { return typeOf(w).size(); }

BinWord relabel(const BinWord &w, const std::vector<Nat> &newName) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return w;
    case BinWord::Kind::Leaf:
        if (w.letter() > newName.size()) throw Error("relabel: leaf out of range");
        return BinWord::leaf(newName[w.letter() - 1]);
    case BinWord::Kind::Pair: return BinWord::pair(relabel(w.left(), newName), relabel(w.right(), newName));
    }
    return w;
}

Nat maxLetter(const BinWord &w) {
    Nat m = 0;
    for (Nat x : typeOf(w)) m = std::max(m, x);
    return m;
}

std::string renderType(const TypeWord &t) {
    if (t.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " " : "") + std::to_string(t[i]);
    return s;
}

} // namespace weights
