#include "bkv/classes.hpp"

#include <fstream>
#include <stdexcept>

#include "bkv/check.hpp"
#include "bkv/graph6.hpp"

namespace bkv {

ForbiddenPattern ForbiddenPattern::path(int k) {
    if (k < 2) throw std::invalid_argument("forbidden path needs k >= 2");
    return {"P" + std::to_string(k), Kind::InducedPath, k, make_path(k)};
}

ForbiddenPattern ForbiddenPattern::hole(int k) {
    if (k < 4) throw std::invalid_argument("forbidden hole needs k >= 4");
    return {"C" + std::to_string(k), Kind::Hole, k, make_cycle(k)};
}

ForbiddenPattern ForbiddenPattern::from_catalog(std::string_view key) {
    const PatternEntry* e = find_pattern(key);
    if (!e) throw std::invalid_argument("unknown pattern name: " + std::string(key));
    return {e->name, Kind::General, 0, e->graph};
}

ForbiddenPattern ForbiddenPattern::inline_graph(std::string name, Graph g) {
    if (g.order() < 1) throw std::invalid_argument("forbidden pattern must be nonempty");
    return {std::move(name), Kind::General, 0, std::move(g)};
}

bool ClassSpec::forbids_p6_and_c4() const {
    bool p6 = false, c4 = false;
    for (const auto& f : forbidden) {
        if (f.kind == ForbiddenPattern::Kind::InducedPath && f.k == 6) p6 = true;
        if (f.kind == ForbiddenPattern::Kind::Hole && f.k == 4) c4 = true;
    }
    return p6 && c4;
}

ClassSpec ClassSpec::p6c4() {
    return {"p6c4", {ForbiddenPattern::path(6), ForbiddenPattern::hole(4)}};
}

ClassSpec ClassSpec::p6c4k7() {
    return {"p6c4k7",
            {ForbiddenPattern::path(6), ForbiddenPattern::hole(4),
             ForbiddenPattern::from_catalog("k7")}};
}

ClassSpec ClassSpec::p6c4c5plus() {
    return {"p6c4c5plus",
            {ForbiddenPattern::path(6), ForbiddenPattern::hole(4),
             ForbiddenPattern::from_catalog("c5plus")}};
}

ClassSpec ClassSpec::by_name(const std::string& selector) {
    if (selector == "p6c4") return p6c4();
    if (selector == "p6c4k7") return p6c4k7();
    if (selector == "p6c4c5plus") return p6c4c5plus();
    constexpr std::string_view prefix = "custom:";
    if (selector.rfind(prefix, 0) == 0) return from_file(selector.substr(prefix.size()));
    throw std::invalid_argument("unknown class spec '" + selector +
                                "' (expected p6c4, p6c4k7, p6c4c5plus or custom:<file>)");
}

ClassSpec ClassSpec::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open class spec file: " + path);
    ClassSpec spec;
    spec.name = "custom:" + path;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (line.size() >= 2 && (line[0] == 'P' || line[0] == 'p') &&
            line.find_first_not_of("0123456789", 1) == std::string::npos) {
            spec.forbidden.push_back(ForbiddenPattern::path(std::stoi(line.substr(1))));
            continue;
        }
        if (line.size() >= 2 && (line[0] == 'C' || line[0] == 'c') &&
            line.find_first_not_of("0123456789", 1) == std::string::npos) {
            spec.forbidden.push_back(ForbiddenPattern::hole(std::stoi(line.substr(1))));
            continue;
        }
        if (find_pattern(line)) {
            spec.forbidden.push_back(ForbiddenPattern::from_catalog(line));
            continue;
        }
        spec.forbidden.push_back(ForbiddenPattern::inline_graph("g6:" + line, from_graph6(line)));
    }
    if (spec.forbidden.empty())
        throw std::invalid_argument("class spec file lists no patterns: " + path);
    return spec;
}

namespace {

MembershipResult check_membership(const Graph& g, const ClassSpec& spec,
                                  std::optional<int> anchor) {
    if (spec.forbidden.empty()) throw std::invalid_argument("class spec lists no patterns");
    for (const auto& f : spec.forbidden) {
        bool hit = false;
        // specialized detectors answer the common member case cheaply; the
        // generic engine runs afterwards only to extract a witness
        if (!anchor && f.kind == ForbiddenPattern::Kind::InducedPath)
            hit = has_induced_path(g, f.k);
        else if (!anchor && f.kind == ForbiddenPattern::Kind::Hole)
            hit = has_hole(g, f.k);
        else
            hit = true;  // resolved by the embedding search below

        if (!hit) continue;
        std::optional<EmbeddingWitness> w =
            anchor ? contains_induced_touching(g, f.graph, *anchor)
                   : contains_induced(g, f.graph);
        if (!anchor && (f.kind == ForbiddenPattern::Kind::InducedPath ||
                        f.kind == ForbiddenPattern::Kind::Hole)) {
            if (w.has_value() != hit)
                throw std::logic_error("specialized detector disagrees with embedding engine on " +
                                       f.name);
        }
        if (w) {
            if (!is_valid_embedding(g, f.graph, *w))
                throw std::logic_error("embedding engine produced an invalid witness for " +
                                       f.name);
            return {false, f.name, *w};
        }
    }
    return {};
}

}  // namespace

MembershipResult is_class_member(const Graph& g, const ClassSpec& spec) {
    return check_membership(g, spec, std::nullopt);
}

MembershipResult is_class_member_touching(const Graph& g, const ClassSpec& spec, int anchor) {
    return check_membership(g, spec, anchor);
}

}  // namespace bkv
