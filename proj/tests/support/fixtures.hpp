#pragma once

#include "weights/category_io.hpp"

#include <string>

namespace fixtures {

inline std::string path(const std::string &name) { return std::string(WEIGHTS_FIXTURE_DIR) + "/" + name + ".json"; }

inline weights::CategoryFile load(const std::string &name) { return weights::loadCategoryFile(path(name)); }

inline weights::FinMonoidalCategory monoidal(const std::string &name) { return load(name).monoidal; }

/// The chain 0 <= 1 <= ... <= n-1 as a thin category.
inline weights::FinCategory chain(weights::Nat n) {
    using weights::Nat;
    std::vector<std::string> objs;
    std::vector<weights::FinCategory::Arrow> arrows;
    std::vector<Nat> ids(n);
    std::vector<std::vector<Nat>> at(n, std::vector<Nat>(n));
    for (Nat a = 0; a < n; ++a) objs.push_back(std::to_string(a));
    for (Nat a = 0; a < n; ++a)
        for (Nat b = a; b < n; ++b) {
            at[a][b] = arrows.size();
            if (a == b) ids[a] = arrows.size();
            arrows.push_back({std::to_string(a) + "<=" + std::to_string(b), a, b});
        }
    std::vector<std::array<Nat, 3>> comps;
    for (Nat a = 0; a < n; ++a)
        for (Nat b = a; b < n; ++b)
            for (Nat c = b; c < n; ++c) comps.push_back({at[b][c], at[a][b], at[a][c]});
    return weights::makeCategory(objs, arrows, ids, comps);
}

} // namespace fixtures
