#include "weights/category_io.hpp"
#include "weights/oracles.hpp"
#include "weights/span.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <sstream>

using namespace weights;

namespace {

enum Exit { Ok = 0, Failure = 1, Invalid = 2, NotIso = 3 };

/// Raised for bad input: unreadable files, parse errors, missing structure.
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunReport {
    std::string command;
    std::vector<std::string> inputs;
    std::map<std::string, Nat> counts;
    std::map<std::string, std::string> verdicts;
    Nat depth = 2, bound = 3;
    std::vector<std::string> lines;
    double millis = -1;

    nlohmann::ordered_json json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["inputs"] = inputs;
        j["counts"] = counts;
        j["verdicts"] = verdicts;
        j["truncation"] = {{"depth", depth}, {"bound", bound}};
        j["output"] = lines;
        if (millis >= 0) j["timing_ms"] = millis;
        return j;
    }
};

template <class F> auto asInput(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error &e) {
        throw InvalidInput(e.what());
    }
}

std::string plural(Nat n, const std::string &word) { return std::to_string(n) + " " + word + (n == 1 ? "" : "s"); }

// --- limit -----------------------------------------------------------------------

std::vector<std::string> listing(const std::string &title, const StructureCategory &s, const FinMonoidalCategory &c,
                                 const ActionDatum *action) {
    std::vector<std::string> out{title + ":"};
    for (Nat i = 0; i < s.objects.size(); ++i)
        out.push_back("  [" + std::to_string(i) + "] " + render(c, s.objects[i], action));
    for (auto &a : s.category.arrows) out.push_back("  " + a.id);
    return out;
}

int cmdLimit(RunReport &r, const std::string &file, const std::string &weight, Truncation t) {
    r.inputs = {file, weight};
    CategoryFile f = asInput([&] { return loadCategoryFile(file); });
    WeightTag tag = asInput([&] { return parseWeight(weight); });
    const ActionDatum *action = f.action ? &*f.action : nullptr;
    if (tag == WeightTag::Action && !action) throw InvalidInput("the action weight needs an action block");
    const FinMonoidalCategory &c = tag == WeightTag::Action ? action->acting : f.monoidal;
    if (needsSymmetry(tag) && !c.symmetric()) throw InvalidInput("the " + weight + " weight needs a symmetry");

    StructureCategory oracle = oracleFor(tag, c, action);
    StructureCategory limit = weightedLimit(c, tag, action, t);
    auto diff = compareOverC(oracle, limit);
    r.counts = {{"oracle_objects", oracle.objects.size()},
                {"oracle_homs", oracle.homCount()},
                {"limit_objects", limit.objects.size()},
                {"limit_homs", limit.homCount()}};
    r.verdicts["iso"] = diff ? "no" : "yes";
    r.lines.push_back("oracle: " + std::to_string(oracle.objects.size()) + " objects/" +
                      std::to_string(oracle.homCount()) + " homs; limit: " + std::to_string(limit.objects.size()) +
                      "/" + std::to_string(limit.homCount()) + "; ISO: " + (diff ? "no" : "yes"));
    for (auto &l : listing("oracle", oracle, c, action)) r.lines.push_back(l);
    for (auto &l : listing("limit", limit, c, action)) r.lines.push_back(l);
    if (diff) {
        r.verdicts["counterexample"] = *diff;
        r.lines.push_back("counterexample: " + *diff);
        return NotIso;
    }
    r.lines.push_back("witness: object i and morphism i of the oracle correspond to object i and morphism i of "
                      "the limit, over the same data in C");
    return Ok;
}

// --- theory ----------------------------------------------------------------------

std::string listStr(const std::vector<std::vector<Nat>> &ls) {
    std::string s = "[";
    for (std::size_t i = 0; i < ls.size(); ++i) {
        s += i ? " (" : "(";
        for (std::size_t k = 0; k < ls[i].size(); ++k) s += (k ? "," : "") + std::to_string(ls[i][k]);
        s += ")";
    }
    return s + "]";
}

int cmdTheoryHom(RunReport &r, const std::string &a, const std::string &b, const std::string &weight, Nat bound) {
    r.inputs = {a, b, weight};
    WeightTag tag = asInput([&] { return parseWeight(weight); });
    WeightId w = weightFor(tag);
    WObject dom = asInput([&] { return parseWObject(a); }), cod = asInput([&] { return parseWObject(b); });
    asInput([&] {
        validateWObject(w, dom);
        validateWObject(w, cod);
        return 0;
    });
    auto cells = homW(w, dom, cod, bound);
    r.counts["morphisms"] = cells.size();
    r.lines.push_back(plural(cells.size(), "morphism"));
    for (auto &c : cells)
        r.lines.push_back("  middle " + std::to_string(c.occ.m) + " split " + listStr(c.occ.split) + " merge " +
                          listStr(c.occ.merge));
    return Ok;
}

int cmdTheoryCompose(RunReport &r, const std::string &a, const std::string &b) {
    r.inputs = {a, b};
    MOneCell f = asInput([&] { return parseM(a); });
    MOneCell g = asInput([&] { return parseM(b, f.cod()); });
    MOneCell h = asInput([&] { return composeM(f, g); });
    r.lines.push_back(h.str());
    return Ok;
}

int cmdTheoryTwoCell(RunReport &r, const std::string &a, const std::string &b) {
    r.inputs = {a, b};
    MOneCell f = asInput([&] { return parseM(a); });
    MOneCell g = asInput([&] { return parseM(b, f.dom); });
    bool exists = twoCellM(f, g).has_value();
    r.verdicts["twocell"] = exists ? "exists" : "none";
    r.lines.push_back(exists ? "exists" : "none");
    return Ok;
}

// --- span ------------------------------------------------------------------------

/// One leg "n:i1,i2,..." from an apex of size k = number of images to (n]; for Lo and
/// BTr an optional "@a1 a2 ..." lists the apex in the order used inside each fiber.
FAMorphism parseLeg(OperadId id, const std::string &text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw Error("span leg: expected n:images in '" + text + "'");
    auto at = text.find('@');
    Nat n = std::stoul(text.substr(0, colon));
    std::vector<Nat> images, order;
    std::stringstream is(text.substr(colon + 1, at == std::string::npos ? std::string::npos : at - colon - 1));
    for (std::string item; std::getline(is, item, ',');)
        if (!item.empty()) images.push_back(std::stoul(item));
    if (at != std::string::npos) {
        std::stringstream os(text.substr(at + 1));
        for (Nat x; os >> x;) order.push_back(x);
    } else {
        for (Nat x = 1; x <= images.size(); ++x) order.push_back(x);
    }
    FinFunction f(images.size(), n, images);
    if (!FinFunction(order.size(), images.size(), order).isBijection())
        throw Error("span leg: the order must list every apex element once");
    std::vector<OperadOp> labels;
    for (Nat y = 1; y <= n; ++y) {
        std::vector<Nat> inFiber;
        for (Nat x : order)
            if (f(x) == y) inFiber.push_back(x);
        switch (id) {
        case OperadId::Bot:
            if (inFiber.size() != 1) throw Error("span leg: bot legs are bijections");
            labels.push_back(unitOp(id, inFiber[0]));
            break;
        case OperadId::Lo: labels.push_back(loOp(inFiber)); break;
        case OperadId::BTr: {
            std::vector<BinWord> leaves;
            for (Nat x : inFiber) leaves.push_back(BinWord::leaf(x));
            BinWord w = leaves.empty() ? BinWord::unit() : leaves.back();
            for (std::size_t i = leaves.size() - 1; !leaves.empty() && i-- > 0;) w = BinWord::pair(leaves[i], w);
            labels.push_back(btrOp(w));
            break;
        }
        case OperadId::Top: labels.push_back(topOp(id, fiber(f, y))); break;
        default: throw Error("span: only bot, btr, lo and top are available here");
        }
    }
    return makeFA(id, f, labels);
}

/// "LEFT|RIGHT", each leg as in parseLeg.
SpanMorphism parseSpan(OperadId a, OperadId b, const std::string &text) {
    auto bar = text.find('|');
    if (bar == std::string::npos) throw Error("span: expected LEFT|RIGHT");
    return makeSpan(parseLeg(a, text.substr(0, bar)), parseLeg(b, text.substr(bar + 1)));
}

int cmdSpan(RunReport &r, const std::string &sub, const std::vector<std::string> &args, Nat bound) {
    r.inputs = args;
    if (args.size() < 2) throw InvalidInput("span: give the two operads first");
    OperadId a = asInput([&] { return parseOperad(args[0]); }), b = asInput([&] { return parseOperad(args[1]); });
    auto need = [&](std::size_t k) {
        if (args.size() != k) throw InvalidInput("span " + sub + ": expected " + std::to_string(k) + " arguments");
    };
    if (sub == "canon") {
        need(3);
        SpanMorphism s = asInput([&] { return parseSpan(a, b, args[2]); });
        r.lines.push_back(s.str());
    } else if (sub == "compose") {
        need(4);
        SpanMorphism s1 = asInput([&] { return parseSpan(a, b, args[2]); });
        SpanMorphism s2 = asInput([&] { return parseSpan(a, b, args[3]); });
        SpanMorphism s = asInput([&] { return composeSpan(s1, s2); });
        r.lines.push_back(s.str());
    } else if (sub == "enumerate") {
        need(4);
        Nat n = std::stoul(args[2]), m = std::stoul(args[3]);
        auto spans = asInput([&] { return enumerateSpans(a, b, objectFor(a, n), objectFor(b, m), bound, bound); });
        r.counts["spans"] = spans.size();
        r.lines.push_back(plural(spans.size(), "span"));
        for (auto &s : spans) r.lines.push_back("  " + s.str());
    } else {
        throw InvalidInput("span: unknown subcommand " + sub);
    }
    return Ok;
}

// --- operad and validate ----------------------------------------------------------

int cmdOperad(RunReport &r, const std::string &name, Nat n, Nat bound) {
    r.inputs = {name, std::to_string(n)};
    OperadId id = asInput([&] { return parseOperad(name); });
    if (isColored(id)) throw InvalidInput("operad: colored operads need colors; use an uncolored one");
    FiberedSubset carrier;
    for (Nat x = 1; x <= n; ++x) carrier.push_back(x);
    auto ops = enumerateOps(id, carrier, bound);
    r.counts["operations"] = ops.size();
    r.lines.push_back(plural(ops.size(), "operation"));
    for (auto &op : ops) r.lines.push_back("  " + op.str());
    return Ok;
}

int cmdValidate(RunReport &r, const std::string &file) {
    r.inputs = {file};
    CategoryFile f = asInput([&] { return loadCategoryFile(file); });
    auto &C = f.monoidal.base;
    r.counts = {{"objects", C.objectCount()}, {"morphisms", C.arrowCount()}};
    r.verdicts = {{"strict", f.monoidal.strict ? "yes" : "no"},
                  {"symmetric", f.monoidal.symmetric() ? "yes" : "no"},
                  {"action", f.action ? "yes" : "no"}};
    r.lines.push_back("valid: " + plural(C.objectCount(), "object") + ", " + plural(C.arrowCount(), "morphism") +
                      "; strict: " + r.verdicts["strict"] + "; symmetric: " + r.verdicts["symmetric"] +
                      "; action: " + r.verdicts["action"]);
    return Ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Weighted limits of finite monoidal categories"};
    app.require_subcommand(1);
    RunReport report;
    bool asJson = false, timing = false;
    app.add_option("--depth", report.depth, "truncation depth")->capture_default_str();
    app.add_option("--bound", report.bound, "apex and unit budget")->capture_default_str();
    app.add_flag("--json", asJson, "print the report as JSON");
    app.add_flag("--timing", timing, "include the running time");

    std::string file, weight = "monoid", a, b, sub;
    Nat n = 0;
    std::vector<std::string> rest;

    auto *limit = app.add_subcommand("limit", "weighted limit against the oracle");
    limit->add_option("--weight", weight, "monoid, comonoid, cmonoid, bimonoid or action")->capture_default_str();
    limit->add_option("file", file)->required();

    auto *theory = app.add_subcommand("theory", "hom-sets of W, composites and 2-cells of M");
    theory->require_subcommand(1);
    auto *hom = theory->add_subcommand("hom", "morphisms between objects of W");
    hom->add_option("--weight", weight)->capture_default_str();
    hom->add_option("dom", a)->required();
    hom->add_option("cod", b)->required();
    auto *compose = theory->add_subcommand("compose", "second after first in M");
    compose->add_option("first", a)->required();
    compose->add_option("second", b)->required();
    auto *twocell = theory->add_subcommand("twocell", "is there a 2-cell between two 1-cells of M");
    twocell->add_option("dom", a)->required();
    twocell->add_option("cod", b)->required();

    auto *span = app.add_subcommand("span", "spans: compose, canon or enumerate");
    span->add_option("subcommand", sub)->required();
    span->add_option("args", rest)->required();

    auto *operad = app.add_subcommand("operad", "operations of an operad on (n]");
    operad->add_option("name", a)->required();
    operad->add_option("n", n)->required();

    auto *validate = app.add_subcommand("validate", "load and validate a category file");
    validate->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    auto start = std::chrono::steady_clock::now();
    int code = Ok;
    try {
        Truncation t{report.depth, report.bound};
        if (*limit) {
            report.command = "limit";
            code = cmdLimit(report, file, weight, t);
        } else if (*theory) {
            if (*hom) {
                report.command = "theory hom";
                code = cmdTheoryHom(report, a, b, weight, report.bound);
            } else if (*compose) {
                report.command = "theory compose";
                code = cmdTheoryCompose(report, a, b);
            } else {
                report.command = "theory twocell";
                code = cmdTheoryTwoCell(report, a, b);
            }
        } else if (*span) {
            report.command = "span " + sub;
            code = cmdSpan(report, sub, rest, report.bound);
        } else if (*operad) {
            report.command = "operad";
            code = cmdOperad(report, a, n, report.bound);
        } else {
            report.command = "validate";
            code = cmdValidate(report, file);
        }
    } catch (const InvalidInput &e) {
        report.verdicts["error"] = e.what();
        code = Invalid;
    } catch (const std::exception &e) {
        report.verdicts["error"] = e.what();
        code = Failure;
    }
    if (timing)
        report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (asJson) {
        auto j = report.json();
        j["exit"] = code;
        std::cout << j.dump(2) << "\n";
    } else {
        for (auto &l : report.lines) std::cout << l << "\n";
        if (report.verdicts.count("error")) std::cerr << "error: " << report.verdicts["error"] << "\n";
        if (report.millis >= 0) std::cout << "time: " << report.millis << " ms\n";
    }
    return code;
}
