#include "weights/operad.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

namespace weights {

bool isColored(OperadId id) {
    return id == OperadId::Bot2 || id == OperadId::Act || id == OperadId::Lo2 || id == OperadId::Top2;
}

std::string operadName(OperadId id) {
    switch (id) {
    case OperadId::Bot: return "bot";
    case OperadId::BTr: return "btr";
    case OperadId::Lo: return "lo";
    case OperadId::Top: return "top";
    case OperadId::Bot2: return "bot2";
    case OperadId::Act: return "act";
    case OperadId::Lo2: return "lo2";
    case OperadId::Top2: return "top2";
    }
    return "?";
}

OperadId parseOperad(std::string_view name) {
    std::string s(name);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    for (OperadId id : {OperadId::Bot, OperadId::BTr, OperadId::Lo, OperadId::Top, OperadId::Bot2,
                        OperadId::Act, OperadId::Lo2, OperadId::Top2})
        if (operadName(id) == s) return id;
    throw Error("unknown operad '" + s + "'");
}

// ---------------------------------------------------------------- ActTerm

ActTerm ActTerm::unit() {
    static const ActTerm e(std::make_shared<const Node>(Node{Kind::Unit, 0, nullptr, nullptr}));
    return e;
}

ActTerm ActTerm::leaf(Nat x) { return ActTerm(std::make_shared<const Node>(Node{Kind::Leaf, x, nullptr, nullptr})); }

ActTerm ActTerm::mul(ActTerm l, ActTerm r) {
    return ActTerm(std::make_shared<const Node>(Node{Kind::Mul, 0, l.node_, r.node_}));
}

ActTerm ActTerm::act(ActTerm l, ActTerm r) {
    return ActTerm(std::make_shared<const Node>(Node{Kind::Act, 0, l.node_, r.node_}));
}

Nat ActTerm::letter() const {
    if (kind() != Kind::Leaf) throw Error("letter() on a non-leaf term");
    return node_->letter;
}

ActTerm ActTerm::left() const {
    if (kind() != Kind::Mul && kind() != Kind::Act) throw Error("left() on a constant term");
    return ActTerm(node_->l);
}

ActTerm ActTerm::right() const {
    if (kind() != Kind::Mul && kind() != Kind::Act) throw Error("right() on a constant term");
    return ActTerm(node_->r);
}

std::vector<Nat> ActTerm::leaves() const {
    std::vector<Nat> out;
    std::function<void(const ActTerm &)> go = [&](const ActTerm &t) {
        switch (t.kind()) {
        case Kind::Unit: break;
        case Kind::Leaf: out.push_back(t.letter()); break;
        default: go(t.left()); go(t.right());
        }
    };
    go(*this);
    return out;
}

Nat ActTerm::units() const {
    switch (kind()) {
    case Kind::Unit: return 1;
    case Kind::Leaf: return 0;
    default: return left().units() + right().units();
    }
}

Color ActTerm::typeCheck(const std::map<Nat, Color> &leafColor) const {
    switch (kind()) {
    case Kind::Unit: return 0;
    case Kind::Leaf: {
        auto it = leafColor.find(letter());
        if (it == leafColor.end()) throw Error("act term: leaf " + std::to_string(letter()) + " has no color");
        return it->second;
    }
    case Kind::Mul:
        if (left().typeCheck(leafColor) != 0 || right().typeCheck(leafColor) != 0)
            throw Error("act term: m expects two arguments of color 0 in " + str());
        return 0;
    case Kind::Act:
        if (left().typeCheck(leafColor) != 0 || right().typeCheck(leafColor) != 1)
            throw Error("act term: a expects arguments of colors (0,1) in " + str());
        return 1;
    }
    return 0;
}

ActTerm ActTerm::relabel(const std::map<Nat, Nat> &sigma) const {
    switch (kind()) {
    case Kind::Unit: return *this;
    case Kind::Leaf: return leaf(sigma.at(letter()));
    case Kind::Mul: return mul(left().relabel(sigma), right().relabel(sigma));
    case Kind::Act: return act(left().relabel(sigma), right().relabel(sigma));
    }
    return *this;
}

ActTerm ActTerm::graft(const std::map<Nat, ActTerm> &sub) const {
    switch (kind()) {
    case Kind::Unit: return *this;
    case Kind::Leaf: return sub.at(letter());
    case Kind::Mul: return mul(left().graft(sub), right().graft(sub));
    case Kind::Act: return act(left().graft(sub), right().graft(sub));
    }
    return *this;
}

std::string ActTerm::str() const {
    switch (kind()) {
    case Kind::Unit: return "e";
    case Kind::Leaf: return std::to_string(letter());
    case Kind::Mul: return "(" + left().str() + "*" + right().str() + ")";
    case Kind::Act: return "(" + left().str() + ">" + right().str() + ")";
    }
    return {};
}

ActTerm ActTerm::parse(std::string_view s) {
    std::size_t pos = 0;
    auto fail = [&](const std::string &what) -> ActTerm {
        throw Error("bad act term '" + std::string(s) + "' at offset " + std::to_string(pos) + ": " + what);
    };
    std::function<ActTerm()> term = [&]() -> ActTerm {
        if (pos >= s.size()) return fail("unexpected end");
        char c = s[pos];
        if (c == 'e') {
            ++pos;
            return unit();
        }
        if (std::isdigit(static_cast<unsigned char>(c)) && c != '0') {
            Nat v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + static_cast<Nat>(s[pos++] - '0');
            return leaf(v);
        }
        if (c != '(') return fail("unexpected character");
        ++pos;
        ActTerm l = term();
        if (pos >= s.size() || (s[pos] != '*' && s[pos] != '>')) return fail("expected '*' or '>'");
        char op = s[pos++];
        ActTerm r = term();
        if (pos >= s.size() || s[pos] != ')') return fail("expected ')'");
        ++pos;
        return op == '*' ? mul(l, r) : act(l, r);
    };
    ActTerm t = term();
    if (pos != s.size()) fail("trailing input");
    return t;
}

// ---------------------------------------------------------------- OperadOp

Color OperadOp::colorOf(Nat x) const { return colors.at(indexIn(carrier, x) - 1); }

std::string OperadOp::str() const {
    std::string s = operadName(operad) + "{";
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        s += (i ? "," : "") + std::to_string(carrier[i]);
        if (isColored(operad)) s += ":" + std::to_string(colors[i]);
    }
    s += "}";
    if (isColored(operad)) s += "->" + std::to_string(out);
    switch (operad) {
    case OperadId::Lo:
    case OperadId::Lo2:
        s += "[";
        for (std::size_t i = 0; i < order.size(); ++i) s += (i ? " " : "") + std::to_string(order[i]);
        s += "]";
        break;
    case OperadId::BTr: s += tree.str(); break;
    case OperadId::Act: s += term.str(); break;
    default: break;
    }
    return s;
}

bool operator==(const OperadOp &a, const OperadOp &b) {
    if (a.operad != b.operad || a.carrier != b.carrier || a.colors != b.colors || a.out != b.out) return false;
    switch (a.operad) {
    case OperadId::Lo:
    case OperadId::Lo2: return a.order == b.order;
    case OperadId::BTr: return a.tree == b.tree;
    case OperadId::Act: return a.term == b.term;
    default: return true;
    }
}

bool profileAllowed(OperadId id, const std::vector<Color> &inputs, Color out) {
    auto ones = static_cast<Nat>(std::count(inputs.begin(), inputs.end(), 1));
    for (Color c : inputs)
        if (c != 0 && c != 1) return false;
    switch (id) {
    case OperadId::Bot: return inputs.size() == 1 && ones == 0 && out == 0;
    case OperadId::BTr:
    case OperadId::Lo:
    case OperadId::Top: return ones == 0 && out == 0;
    case OperadId::Bot2: return inputs.size() == 1 && inputs[0] == out && (out == 0 || out == 1);
    case OperadId::Act:
    case OperadId::Lo2: return out == 0 ? ones == 0 : (out == 1 && ones == 1);
    case OperadId::Top2: return out == 0 || out == 1;
    }
    return false;
}

namespace {

void checkCarrier(const OperadOp &op) {
    for (std::size_t i = 1; i < op.carrier.size(); ++i)
        if (op.carrier[i - 1] >= op.carrier[i]) throw Error("carrier must be strictly increasing");
    if (op.colors.size() != op.carrier.size()) throw Error("carrier colors missing");
    if (!profileAllowed(op.operad, op.colors, op.out))
        throw Error(operadName(op.operad) + " has no operation of the profile of " + op.str());
}

std::map<Nat, Color> colorMap(const OperadOp &op) {
    std::map<Nat, Color> m;
    for (std::size_t i = 0; i < op.carrier.size(); ++i) m[op.carrier[i]] = op.colors[i];
    return m;
}

BinWord graftWord(const BinWord &w, const std::map<Nat, BinWord> &sub) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return w;
    case BinWord::Kind::Leaf: return sub.at(w.letter());
    case BinWord::Kind::Pair: return BinWord::pair(graftWord(w.left(), sub), graftWord(w.right(), sub));
    }
    return w;
}

BinWord relabelWord(const BinWord &w, const std::map<Nat, Nat> &sigma) {
    switch (w.kind()) {
    case BinWord::Kind::Unit: return w;
    case BinWord::Kind::Leaf: return BinWord::leaf(sigma.at(w.letter()));
    case BinWord::Kind::Pair: return BinWord::pair(relabelWord(w.left(), sigma), relabelWord(w.right(), sigma));
    }
    return w;
}

bool isPermutationOf(std::vector<Nat> word, const FiberedSubset &carrier) {
    std::sort(word.begin(), word.end());
    return word == carrier;
}

} // namespace

void validateOp(const OperadOp &op) {
    checkCarrier(op);
    switch (op.operad) {
    case OperadId::Lo:
        if (!isPermutationOf(op.order, op.carrier)) throw Error("lo payload is not a linear order of the carrier");
        break;
    case OperadId::Lo2:
        if (!isPermutationOf(op.order, op.carrier)) throw Error("lo2 payload is not a linear order of the carrier");
        if (op.out == 1 && (op.order.empty() || op.colorOf(op.order.back()) != 1))
            throw Error("lo2: the color-1 input must come last");
        break;
    case OperadId::BTr:
        if (!isLinear(op.tree, op.carrier) || !isPermutationOf(typeOf(op.tree), op.carrier))
            throw Error("btr payload is not linear over the carrier");
        break;
    case OperadId::Act: {
        if (!isPermutationOf(op.term.leaves(), op.carrier)) throw Error("act payload is not linear over the carrier");
        if (op.term.typeCheck(colorMap(op)) != op.out) throw Error("act payload has the wrong output color");
        break;
    }
    default: break;
    }
}

OperadOp unitOp(OperadId id, Nat element, Color color) {
    OperadOp op;
    op.operad = id;
    op.carrier = {element};
    op.colors = {isColored(id) ? color : 0};
    op.out = op.colors[0];
    switch (id) {
    case OperadId::Lo:
    case OperadId::Lo2: op.order = {element}; break;
    case OperadId::BTr: op.tree = BinWord::leaf(element); break;
    case OperadId::Act: op.term = ActTerm::leaf(element); break;
    default: break;
    }
    validateOp(op);
    return op;
}

OperadOp topOp(OperadId id, FiberedSubset carrier, std::vector<Color> colors, Color out) {
    OperadOp op;
    op.operad = id;
    if (colors.empty()) colors.assign(carrier.size(), 0);
    op.carrier = std::move(carrier);
    op.colors = std::move(colors);
    op.out = out;
    validateOp(op);
    return op;
}

OperadOp loOp(std::vector<Nat> order) {
    OperadOp op;
    op.operad = OperadId::Lo;
    op.carrier = order;
    std::sort(op.carrier.begin(), op.carrier.end());
    op.colors.assign(order.size(), 0);
    op.order = std::move(order);
    validateOp(op);
    return op;
}

OperadOp lo2Op(std::vector<Nat> order, std::vector<Color> colorsInOrder, Color out) {
    OperadOp op;
    op.operad = OperadId::Lo2;
    std::map<Nat, Color> cm;
    for (std::size_t i = 0; i < order.size(); ++i) cm[order.at(i)] = colorsInOrder.at(i);
    for (auto &[x, c] : cm) {
        op.carrier.push_back(x);
        op.colors.push_back(c);
    }
    op.out = out;
    op.order = std::move(order);
    validateOp(op);
    return op;
}

OperadOp btrOp(BinWord w) {
    OperadOp op;
    op.operad = OperadId::BTr;
    op.carrier = typeOf(w);
    std::sort(op.carrier.begin(), op.carrier.end());
    op.colors.assign(op.carrier.size(), 0);
    op.tree = std::move(w);
    validateOp(op);
    return op;
}

OperadOp actOp(ActTerm t, const std::map<Nat, Color> &leafColor) {
    OperadOp op;
    op.operad = OperadId::Act;
    op.carrier = t.leaves();
    std::sort(op.carrier.begin(), op.carrier.end());
    for (Nat x : op.carrier) op.colors.push_back(leafColor.at(x));
    op.out = t.typeCheck(leafColor);
    op.term = std::move(t);
    validateOp(op);
    return op;
}

OperadOp multiply(const OperadOp &outer, const std::vector<OperadOp> &inner) {
    if (inner.size() != outer.carrier.size())
        throw Error("multiply: expected " + std::to_string(outer.carrier.size()) + " inner operations");
    std::map<Nat, Color> cm;
    for (std::size_t k = 0; k < inner.size(); ++k) {
        const OperadOp &in = inner[k];
        if (in.operad != outer.operad)
            throw Error("multiply: operad mismatch (" + operadName(in.operad) + " into " + operadName(outer.operad) + ")");
        if (in.out != outer.colors[k]) throw Error("multiply: color mismatch at input " + std::to_string(outer.carrier[k]));
        for (std::size_t i = 0; i < in.carrier.size(); ++i)
            if (!cm.emplace(in.carrier[i], in.colors[i]).second)
                throw Error("multiply: inner carriers overlap at " + std::to_string(in.carrier[i]));
    }
    OperadOp r;
    r.operad = outer.operad;
    r.out = outer.out;
    for (auto &[x, c] : cm) {
        r.carrier.push_back(x);
        r.colors.push_back(c);
    }
    auto innerAt = [&](Nat x) -> const OperadOp & { return inner[indexIn(outer.carrier, x) - 1]; };
    switch (outer.operad) {
    case OperadId::Bot:
    case OperadId::Bot2:
    case OperadId::Top:
    case OperadId::Top2: break;
    case OperadId::Lo:
    case OperadId::Lo2:
        for (Nat x : outer.order) {
            const auto &o = innerAt(x).order;
            r.order.insert(r.order.end(), o.begin(), o.end());
        }
        break;
    case OperadId::BTr: {
        std::map<Nat, BinWord> sub;
        for (std::size_t k = 0; k < inner.size(); ++k) sub[outer.carrier[k]] = inner[k].tree;
        r.tree = graftWord(outer.tree, sub);
        break;
    }
    case OperadId::Act: {
        std::map<Nat, ActTerm> sub;
        for (std::size_t k = 0; k < inner.size(); ++k) sub[outer.carrier[k]] = inner[k].term;
        r.term = outer.term.graft(sub);
        break;
    }
    }
    validateOp(r);
    return r;
}

OperadOp actBijection(const OperadOp &op, const std::map<Nat, Nat> &sigma) {
    if (sigma.size() != op.carrier.size()) throw Error("actBijection: map does not cover the carrier");
    std::map<Nat, Color> cm;
    for (std::size_t i = 0; i < op.carrier.size(); ++i) {
        auto it = sigma.find(op.carrier[i]);
        if (it == sigma.end()) throw Error("actBijection: map does not cover the carrier");
        if (!cm.emplace(it->second, op.colors[i]).second) throw Error("actBijection: map is not injective");
    }
    OperadOp r;
    r.operad = op.operad;
    r.out = op.out;
    for (auto &[x, c] : cm) {
        r.carrier.push_back(x);
        r.colors.push_back(c);
    }
    for (Nat x : op.order) r.order.push_back(sigma.at(x));
    if (op.operad == OperadId::BTr) r.tree = relabelWord(op.tree, sigma);
    if (op.operad == OperadId::Act) r.term = op.term.relabel(sigma);
    validateOp(r);
    return r;
}

OperadOp recolor(const OperadOp &op, const std::vector<Color> &colors, Color out) {
    OperadOp r = op;
    r.colors = colors;
    r.out = out;
    validateOp(r);
    return r;
}

namespace {

/// Binary trees over exactly the elements of s and exactly k units.
struct TreeGen {
    std::map<std::pair<std::vector<Nat>, Nat>, std::vector<BinWord>> memo;

    const std::vector<BinWord> &trees(const std::vector<Nat> &s, Nat k) {
        auto key = std::make_pair(s, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<BinWord> out;
        if (s.size() + k == 1) {
            out.push_back(k ? BinWord::unit() : BinWord::leaf(s[0]));
        } else if (s.size() + k > 1) {
            Nat n = s.size();
            for (Nat mask = 0; mask < (Nat{1} << n); ++mask) {
                std::vector<Nat> a, b;
                for (Nat i = 0; i < n; ++i) ((mask >> i) & 1 ? a : b).push_back(s[i]);
                for (Nat k1 = 0; k1 <= k; ++k1) {
                    if (a.size() + k1 == 0 || b.size() + (k - k1) == 0) continue;
                    auto l = trees(a, k1);
                    auto &r = trees(b, k - k1);
                    for (auto &x : l)
                        for (auto &y : r) out.push_back(BinWord::pair(x, y));
                }
            }
        }
        std::sort(out.begin(), out.end());
        return memo[key] = std::move(out);
    }
};

/// Typed Act terms over exactly the elements of s and exactly k units, with output color c.
struct ActGen {
    std::map<Nat, Color> color;
    std::map<std::tuple<std::vector<Nat>, Nat, Color>, std::vector<ActTerm>> memo;

    std::vector<ActTerm> terms(const std::vector<Nat> &s, Nat k, Color c) {
        auto key = std::make_tuple(s, k, c);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<ActTerm> out;
        if (s.size() + k == 1) {
            if (k == 1 && c == 0) out.push_back(ActTerm::unit());
            if (k == 0 && color.at(s[0]) == c) out.push_back(ActTerm::leaf(s[0]));
        } else if (s.size() + k > 1) {
            Nat n = s.size();
            for (Nat mask = 0; mask < (Nat{1} << n); ++mask) {
                std::vector<Nat> a, b;
                for (Nat i = 0; i < n; ++i) ((mask >> i) & 1 ? a : b).push_back(s[i]);
                for (Nat k1 = 0; k1 <= k; ++k1) {
                    if (a.size() + k1 == 0 || b.size() + (k - k1) == 0) continue;
                    auto l = terms(a, k1, 0);
                    auto r = terms(b, k - k1, c);
                    for (auto &x : l)
                        for (auto &y : r) out.push_back(c == 0 ? ActTerm::mul(x, y) : ActTerm::act(x, y));
                }
            }
        }
        std::sort(out.begin(), out.end(), [](const ActTerm &x, const ActTerm &y) { return x.str() < y.str(); });
        return memo[key] = out;
    }
};

} // namespace

std::vector<OperadOp> enumerateOps(OperadId id, const FiberedSubset &carrier, Nat bound,
                                   const std::vector<Color> &colorsIn, Color out) {
    std::vector<Color> colors = colorsIn.empty() ? std::vector<Color>(carrier.size(), 0) : colorsIn;
    if (colors.size() != carrier.size()) throw Error("enumerateOps: colors do not match the carrier");
    std::vector<OperadOp> ops;
    if (!profileAllowed(id, colors, out)) return ops;
    OperadOp base;
    base.operad = id;
    base.carrier = carrier;
    base.colors = colors;
    base.out = out;
    switch (id) {
    case OperadId::Bot:
    case OperadId::Bot2:
    case OperadId::Top:
    case OperadId::Top2: ops.push_back(base); break;
    case OperadId::Lo:
    case OperadId::Lo2: {
        std::vector<Nat> w = carrier;
        do {
            base.order = w;
            if (id == OperadId::Lo || out == 0 || base.colorOf(w.back()) == 1) ops.push_back(base);
        } while (std::next_permutation(w.begin(), w.end()));
        break;
    }
    case OperadId::BTr: {
        TreeGen g;
        for (Nat k = 0; k <= bound; ++k)
            for (auto &t : g.trees(carrier, k)) {
                base.tree = t;
                ops.push_back(base);
            }
        break;
    }
    case OperadId::Act: {
        ActGen g;
        for (std::size_t i = 0; i < carrier.size(); ++i) g.color[carrier[i]] = colors[i];
        for (Nat k = 0; k <= bound; ++k)
            for (auto &t : g.terms(carrier, k, out)) {
                base.term = t;
                ops.push_back(base);
            }
        break;
    }
    }
    for (auto &op : ops) validateOp(op);
    return ops;
}

namespace {
int chainIndex(OperadId id) {
    switch (id) {
    case OperadId::Bot:
    case OperadId::Bot2: return 0;
    case OperadId::BTr:
    case OperadId::Act: return 1;
    case OperadId::Lo:
    case OperadId::Lo2: return 2;
    case OperadId::Top:
    case OperadId::Top2: return 3;
    }
    return -1;
}
} // namespace

bool hasMorphism(OperadId from, OperadId to) {
    return isColored(from) == isColored(to) && chainIndex(from) <= chainIndex(to);
}

OperadOp applyMorphism(OperadId to, const OperadOp &op) {
    OperadId from = op.operad;
    if (!hasMorphism(from, to))
        throw Error("no operad morphism " + operadName(from) + " -> " + operadName(to));
    if (from == to) return op;
    OperadOp r;
    r.operad = to;
    r.carrier = op.carrier;
    r.colors = op.colors;
    r.out = op.out;
    int ti = chainIndex(to);
    switch (chainIndex(from)) {
    case 0: {
        Nat x = op.carrier.at(0);
        if (ti == 1) {
            if (to == OperadId::BTr) r.tree = BinWord::leaf(x);
            else r.term = ActTerm::leaf(x);
        } else if (ti == 2) r.order = {x};
        break;
    }
    case 1:
        if (ti == 2) r.order = from == OperadId::BTr ? typeOf(op.tree) : op.term.leaves();
        break;
    default: break;
    }
    validateOp(r);
    return r;
}

} // namespace weights
