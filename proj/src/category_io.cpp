#include "weights/category_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace weights {

using nlohmann::json;

namespace {

struct Names {
    std::map<std::string, Nat> objects, arrows;

    Nat object(const json &j) const {
        auto s = j.get<std::string>();
        auto it = objects.find(s);
        if (it == objects.end()) throw Error("unknown object '" + s + "'");
        return it->second;
    }
    Nat arrow(const json &j) const {
        auto s = j.get<std::string>();
        auto it = arrows.find(s);
        if (it == arrows.end()) throw Error("unknown morphism '" + s + "'");
        return it->second;
    }
};

const json &field(const json &j, const char *key) {
    if (!j.contains(key)) throw Error(std::string("missing field '") + key + "'");
    return j.at(key);
}

FinCategory readCategory(const json &j, Names &names) {
    std::vector<std::string> objects = field(j, "objects").get<std::vector<std::string>>();
    for (Nat i = 0; i < objects.size(); ++i)
        if (!names.objects.emplace(objects[i], i).second) throw Error("duplicate object '" + objects[i] + "'");
    std::vector<FinCategory::Arrow> arrows;
    for (auto &m : field(j, "morphisms")) {
        std::string id = field(m, "id").get<std::string>();
        if (!names.arrows.emplace(id, arrows.size()).second) throw Error("duplicate morphism '" + id + "'");
        arrows.push_back({id, names.object(field(m, "src")), names.object(field(m, "dst"))});
    }
    std::vector<Nat> identity(objects.size(), npos);
    for (auto &[obj, mor] : field(j, "identities").items()) identity[names.object(json(obj))] = names.arrow(mor);
    for (Nat i = 0; i < identity.size(); ++i)
        if (identity[i] == npos) throw Error("no identity for object '" + objects[i] + "'");
    std::vector<std::array<Nat, 3>> composites;
    for (auto &t : field(j, "composition")) {
        if (t.size() != 3) throw Error("composition entries are [g, f, g o f]");
        composites.push_back({names.arrow(t[0]), names.arrow(t[1]), names.arrow(t[2])});
    }
    return makeCategory(std::move(objects), std::move(arrows), std::move(identity), composites);
}

/// Fills a dense table from [x, y, value] triples, requiring every pair exactly once.
template <class Key, class Val>
std::vector<Nat> readTable(const json &j, Nat rows, Nat cols, Key key, Val val, const std::string &what) {
    std::vector<Nat> t(rows * cols, npos);
    for (auto &e : j) {
        if (e.size() != 3) throw Error(what + " entries are triples");
        Nat x = key(e[0]), y = key(e[1]);
        Nat &slot = t[x * cols + y];
        if (slot != npos) throw Error(what + ": entry given twice");
        slot = val(e[2]);
    }
    for (Nat v : t)
        if (v == npos) throw Error(what + ": table is not total");
    return t;
}

void requireValid(const FinMonoidalCategory &c) {
    auto rep = validateMonoidal(c);
    if (!rep.ok()) throw Error("monoidal structure: " + rep.violations.front());
}

json categoryJson(const FinCategory &c) {
    json j;
    j["objects"] = c.objects;
    j["morphisms"] = json::array();
    for (auto &a : c.arrows) j["morphisms"].push_back({{"id", a.id}, {"src", c.objects[a.src]}, {"dst", c.objects[a.dst]}});
    j["identities"] = json::object();
    for (Nat x = 0; x < c.objectCount(); ++x) j["identities"][c.objects[x]] = c.arrows[c.id(x)].id;
    j["composition"] = json::array();
    for (Nat g = 0; g < c.arrowCount(); ++g)
        for (Nat f = 0; f < c.arrowCount(); ++f)
            if (c.dst(f) == c.src(g) && std::find(c.identity.begin(), c.identity.end(), g) == c.identity.end() &&
                std::find(c.identity.begin(), c.identity.end(), f) == c.identity.end())
                j["composition"].push_back({c.arrows[g].id, c.arrows[f].id, c.arrows[c.compose(g, f)].id});
    return j;
}

} // namespace

CategoryFile parseCategoryFile(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception &e) {
        throw Error(std::string("not valid JSON: ") + e.what());
    }
    try {
        Names names;
        FinMonoidalCategory c;
        c.base = readCategory(j, names);
        Nat n = c.base.objectCount(), m = c.base.arrowCount();
        auto obj = [&](const json &x) { return names.object(x); };
        auto mor = [&](const json &x) { return names.arrow(x); };
        c.tensorObjects = readTable(field(j, "tensor_obj"), n, n, obj, obj, "tensor_obj");
        c.tensorArrows = readTable(field(j, "tensor_mor"), m, m, mor, mor, "tensor_mor");
        c.unit = names.object(field(j, "unit"));
        c.strict = field(j, "strict").get<bool>();
        if (j.contains("associator")) {
            c.alpha.assign(n * n * n, npos);
            for (auto &e : j["associator"]) {
                if (e.size() != 4) throw Error("associator entries are [a, b, c, morphism]");
                c.alpha[(obj(e[0]) * n + obj(e[1])) * n + obj(e[2])] = mor(e[3]);
            }
            for (Nat v : c.alpha)
                if (v == npos) throw Error("associator: table is not total");
        }
        if (j.contains("unitors")) {
            auto side = [&](const char *key) {
                std::vector<Nat> t(n, npos);
                for (auto &e : field(j["unitors"], key)) t[obj(e.at(0))] = mor(e.at(1));
                for (Nat v : t)
                    if (v == npos) throw Error(std::string("unitors.") + key + ": table is not total");
                return t;
            };
            c.lunit = side("left");
            c.runit = side("right");
        }
        if (j.contains("symmetry")) {
            c.sym.assign(n * n, npos);
            for (auto &e : j["symmetry"]) {
                if (e.size() != 3) throw Error("symmetry entries are [a, b, morphism]");
                c.sym[obj(e[0]) * n + obj(e[1])] = mor(e[2]);
            }
            for (Nat v : c.sym)
                if (v == npos) throw Error("symmetry: table is not total");
        }
        requireValid(c);

        CategoryFile file{c, std::nullopt};
        if (j.contains("action")) {
            const json &a = j["action"];
            Names space;
            ActionDatum d{c, readCategory(field(a, "space"), space), {}, {}};
            Nat p = d.space.objectCount(), q = d.space.arrowCount();
            std::vector<Nat> acts(n * p, npos), actm(m * q, npos);
            for (auto &e : field(a, "act_obj")) acts.at(obj(e.at(0)) * p + space.object(e.at(1))) = space.object(e.at(2));
            for (auto &e : field(a, "act_mor")) actm.at(mor(e.at(0)) * q + space.arrow(e.at(1))) = space.arrow(e.at(2));
            for (Nat v : acts)
                if (v == npos) throw Error("act_obj: table is not total");
            for (Nat v : actm)
                if (v == npos) throw Error("act_mor: table is not total");
            d.actObjects = std::move(acts);
            d.actArrows = std::move(actm);
            validateAction(d);
            file.action = std::move(d);
        }
        return file;
    } catch (const json::exception &e) {
        throw Error(std::string("malformed category file: ") + e.what());
    }
}

CategoryFile loadCategoryFile(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parseCategoryFile(ss.str());
}

std::string renderCategoryFile(const CategoryFile &file) {
    const FinMonoidalCategory &c = file.monoidal;
    const FinCategory &C = c.base;
    Nat n = C.objectCount(), m = C.arrowCount();
    json j = categoryJson(C);
    j["tensor_obj"] = json::array();
    for (Nat a = 0; a < n; ++a)
        for (Nat b = 0; b < n; ++b) j["tensor_obj"].push_back({C.objects[a], C.objects[b], C.objects[c.tensor(a, b)]});
    j["tensor_mor"] = json::array();
    for (Nat f = 0; f < m; ++f)
        for (Nat g = 0; g < m; ++g)
            j["tensor_mor"].push_back({C.arrows[f].id, C.arrows[g].id, C.arrows[c.tensorArrow(f, g)].id});
    j["unit"] = C.objects[c.unit];
    j["strict"] = c.strict;
    if (!c.alpha.empty()) {
        j["associator"] = json::array();
        for (Nat a = 0; a < n; ++a)
            for (Nat b = 0; b < n; ++b)
                for (Nat d = 0; d < n; ++d)
                    j["associator"].push_back(
                        {C.objects[a], C.objects[b], C.objects[d], C.arrows[c.alpha[(a * n + b) * n + d]].id});
    }
    if (!c.lunit.empty()) {
        json l = json::array(), r = json::array();
        for (Nat a = 0; a < n; ++a) {
            l.push_back({C.objects[a], C.arrows[c.lunit[a]].id});
            r.push_back({C.objects[a], C.arrows[c.runit[a]].id});
        }
        j["unitors"] = {{"left", l}, {"right", r}};
    }
    if (c.symmetric()) {
        j["symmetry"] = json::array();
        for (Nat a = 0; a < n; ++a)
            for (Nat b = 0; b < n; ++b) j["symmetry"].push_back({C.objects[a], C.objects[b], C.arrows[c.swap(a, b)].id});
    }
    if (file.action) {
        const ActionDatum &d = *file.action;
        const FinCategory &D = d.space;
        json a;
        a["space"] = categoryJson(D);
        a["act_obj"] = json::array();
        for (Nat x = 0; x < n; ++x)
            for (Nat y = 0; y < D.objectCount(); ++y)
                a["act_obj"].push_back({C.objects[x], D.objects[y], D.objects[d.act(x, y)]});
        a["act_mor"] = json::array();
        for (Nat f = 0; f < m; ++f)
            for (Nat g = 0; g < D.arrowCount(); ++g)
                a["act_mor"].push_back({C.arrows[f].id, D.arrows[g].id, D.arrows[d.actArrow(f, g)].id});
        j["action"] = a;
    }
    return j.dump(1);
}

} // namespace weights
