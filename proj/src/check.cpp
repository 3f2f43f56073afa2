#include "bkv/check.hpp"

namespace bkv {

namespace {

void note(std::string* why, const std::string& msg) {
    if (why) *why = msg;
}

}  // namespace

bool is_proper_coloring(const Graph& g, const Coloring& c, std::string* why) {
    if (c.order() != g.order()) {
        note(why, "coloring order mismatch");
        return false;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (!c.assigned(v)) {
            note(why, "vertex " + g.label(v) + " is uncolored");
            return false;
        }
        if (c.color(v) < 0 || c.color(v) >= c.palette()) {
            note(why, "vertex " + g.label(v) + " has a color outside the palette");
            return false;
        }
    }
    return is_proper_partial(g, c, why);
}

bool is_proper_partial(const Graph& g, const Coloring& c, std::string* why) {
    if (c.order() != g.order()) {
        note(why, "coloring order mismatch");
        return false;
    }
    for (int u = 0; u < g.order(); ++u) {
        if (!c.assigned(u)) continue;
        for (int v = u + 1; v < g.order(); ++v) {
            if (!c.assigned(v)) continue;
            if (g.adjacent(u, v) && c.color(u) == c.color(v)) {
                note(why, "edge " + g.label(u) + "-" + g.label(v) + " is monochromatic");
                return false;
            }
        }
    }
    return true;
}

bool is_clique(const Graph& g, const VertexList& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0 || vs[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (vs[i] == vs[j]) return false;
            if (!g.adjacent(vs[i], vs[j])) return false;
        }
    }
    return true;
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const EmbeddingWitness& w) {
    if (static_cast<int>(w.size()) != pattern.order()) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] < 0 || w[i] >= host.order()) return false;
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[i] == w[j]) return false;
            if (pattern.adjacent(static_cast<int>(i), static_cast<int>(j)) !=
                host.adjacent(w[i], w[j]))
                return false;
        }
    }
    return true;
}

}  // namespace bkv
