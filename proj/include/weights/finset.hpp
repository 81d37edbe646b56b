#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace weights {

/// Raised for any malformed input to an engine operation.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Nat = std::size_t;

/// The set (n] = {1,...,n}.
struct FinSetObj {
    Nat n = 0;
    friend bool operator==(const FinSetObj &, const FinSetObj &) = default;
};

/// A total function (dom] -> (cod]; images are 1-based.
class FinFunction {
public:
    FinFunction() = default;
    FinFunction(Nat dom, Nat cod, std::vector<Nat> images);

    static FinFunction identity(Nat n);
    static FinFunction constant(Nat dom, Nat cod, Nat value);

    Nat dom() const { return dom_; }
    Nat cod() const { return cod_; }
    const std::vector<Nat> &images() const { return images_; }
    Nat operator()(Nat x) const { return images_.at(x - 1); }

    bool isBijection() const;
    /// Inverse of a bijection.
    FinFunction inverse() const;

    std::string str() const;

    friend bool operator==(const FinFunction &, const FinFunction &) = default;
    friend auto operator<=>(const FinFunction &, const FinFunction &) = default;

private:
    Nat dom_ = 0;
    Nat cod_ = 0;
    std::vector<Nat> images_;
};

/// Strictly increasing list of naturals.
using FiberedSubset = std::vector<Nat>;

/// g after f.
FinFunction compose(const FinFunction &f, const FinFunction &g);

struct Pullback {
    FinSetObj apex;
    FinFunction p1;
    FinFunction p2;
};

/// Apex enumerates pairs (x,y) with f(x)=g(y) in lexicographic order.
Pullback pullback(const FinFunction &f, const FinFunction &g);

struct Sum {
    FinSetObj obj;
    FinFunction inl;
    FinFunction inr;
};

Sum sum(FinSetObj a, FinSetObj b);

/// Block sum f+g : (a+b] -> (c+d].
FinFunction sumMap(const FinFunction &f, const FinFunction &g);

FiberedSubset fiber(const FinFunction &f, Nat y);

/// Position of x inside a sorted subset (1-based).
Nat indexIn(const FiberedSubset &s, Nat x);

/// All functions (dom] -> (cod] in lexicographic order of image tables.
std::vector<FinFunction> allFunctions(Nat dom, Nat cod);

/// All permutations of (n] in lexicographic order.
std::vector<FinFunction> allPermutations(Nat n);

} // namespace weights
