#include "bkv/patterns.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <stdexcept>

namespace bkv {

Graph build_c5_plus() {
    // v1 v2 v3 v4 v5 x y z t1 t2 -> 0..9
    constexpr int v1 = 0, v2 = 1, v3 = 2, v4 = 3, v5 = 4;
    constexpr int x = 5, y = 6, z = 7, t1 = 8, t2 = 9;
    EdgeList e = {
        {v1, v2}, {v2, v3}, {v3, v4}, {v4, v5}, {v5, v1},  // the C5
        {x, y},   {y, z},   {z, x},                        // the C3
        {t1, t2},                                          // the P2
        {x, v1},  {x, v2},  {x, v3},                       // x attachments
        {y, v1},  {y, v2},  {y, v3},                       // y attachments
        {z, v2},                                           // z attachment
        {t1, v4}, {t1, v5}, {t1, z},                       // t1 attachments
        {t2, v1}, {t2, v4}, {t2, v5},                      // t2 attachments
    };
    return Graph::from_edges(10, e).with_labels(
        {"v1", "v2", "v3", "v4", "v5", "x", "y", "z", "t1", "t2"});
}

namespace {

std::string normalize_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        if (c == '_' || c == ' ') continue;
        out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    return out;
}

Graph extract(const Graph& host, std::initializer_list<const char*> labels) {
    VertexList s;
    for (const char* l : labels) {
        int v = host.vertex_by_label(l);
        if (v < 0) throw std::logic_error(std::string("missing label ") + l);
        s.push_back(v);
    }
    return induced_subgraph(host, s);
}

std::vector<PatternEntry> make_catalog() {
    const Graph c5p = build_c5_plus();
    std::vector<PatternEntry> cat;
    auto add = [&](std::string name, Graph g, PatternTier tier, std::string note) {
        cat.push_back({std::move(name), std::move(g), tier, std::move(note)});
    };

    add("c5plus", c5p, PatternTier::Extracted, "the full 10-vertex configuration");
    add("kite+", extract(c5p, {"v4", "v5", "t2", "v1", "v2", "z"}), PatternTier::Extracted,
        "induced on {v4,v5,t2,v1,v2,z} of c5plus");
    add("flag+", extract(c5p, {"x", "y", "v2", "v1", "t2", "v4"}), PatternTier::Extracted,
        "induced on {x,y,v2,v1,t2,v4} of c5plus");
    add("tripod", extract(c5p, {"t1", "v4", "v5", "z", "v3", "v1"}), PatternTier::Extracted,
        "induced on {t1,v4,v5,z,v3,v1} of c5plus");
    add("crown", extract(c5p, {"x", "y", "v1", "z", "v3"}), PatternTier::Extracted,
        "induced on {x,y,v1,z,v3} of c5plus");
    add("hvn", extract(c5p, {"v1", "t2", "v5", "t1", "v4"}), PatternTier::Extracted,
        "induced on {v1,t2,v5,t1,v4} of c5plus");
    add("k5-e", extract(c5p, {"v3", "y", "v2", "x", "v1"}), PatternTier::Extracted,
        "induced on {v3,y,v2,x,v1} of c5plus");
    add("butterfly", extract(c5p, {"x", "v1", "t2", "v2", "v5"}), PatternTier::Extracted,
        "induced on {x,v1,t2,v2,v5} of c5plus");

    add("diamond", Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}),
        PatternTier::Standard, "K4 minus an edge");
    add("bull", Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}}),
        PatternTier::Standard, "triangle with pendant vertices on two of its vertices");
    add("gem", join(make_path(4), make_complete(1)), PatternTier::Standard, "P4 joined to K1");
    add("house", complement(make_path(5)), PatternTier::Standard, "complement of P5");
    add("k7", make_complete(7), PatternTier::Standard, "complete graph on 7 vertices");
    return cat;
}

}  // namespace

const std::vector<PatternEntry>& pattern_catalog() {
    static const std::vector<PatternEntry> cat = make_catalog();
    return cat;
}

const PatternEntry* find_pattern(std::string_view name) {
    const std::string key = normalize_name(name);
    for (const auto& e : pattern_catalog())
        if (normalize_name(e.name) == key) return &e;
    return nullptr;
}

Graph named_pattern(std::string_view name) {
    const PatternEntry* e = find_pattern(name);
    if (!e) throw std::invalid_argument("unknown pattern name: " + std::string(name));
    return e->graph;
}

std::vector<std::string> pattern_names() {
    std::vector<std::string> out;
    for (const auto& e : pattern_catalog()) out.push_back(e.name);
    return out;
}

namespace {

constexpr int kMaxWords = Graph::kMaxOrder / 64;
using Mask = std::array<std::uint64_t, kMaxWords>;

inline bool mask_test(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1u; }
inline void mask_set(Mask& m, int i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void mask_reset(Mask& m, int i) { m[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

// Pattern vertices are assigned in index order and host candidates scanned in
// ascending order, so the first embedding found carries the lexicographically
// smallest host-vertex tuple.
struct EmbedSearch {
    const Graph& host;
    const Graph& pattern;
    int p;
    int words;
    int forced_level = -1;  // pattern vertex pinned to forced_vertex, if any
    int forced_vertex = -1;
    Mask full{};
    std::vector<Mask> cand;
    std::vector<int> assign;
    std::vector<int> pat_degree;

    EmbedSearch(const Graph& h, const Graph& q)
        : host(h), pattern(q), p(q.order()), words(h.words()) {
        cand.resize(static_cast<std::size_t>(p) + 1);
        assign.assign(static_cast<std::size_t>(p), -1);
        pat_degree.reserve(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) pat_degree.push_back(q.degree(i));
        for (int v = 0; v < host.order(); ++v) mask_set(full, v);
    }

    bool run(EmbeddingWitness& out) {
        cand[0] = full;
        if (search(0)) {
            out.assign(assign.begin(), assign.end());
            return true;
        }
        return false;
    }

    bool search(int depth) {
        if (depth == p) return true;
        Mask mask = cand[static_cast<std::size_t>(depth)];
        if (depth == forced_level) {
            if (!mask_test(mask, forced_vertex)) return false;
            mask.fill(0);
            mask_set(mask, forced_vertex);
        }
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = mask[static_cast<std::size_t>(w)];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const int hv = w * 64 + b;
                if (host.degree(hv) < pat_degree[static_cast<std::size_t>(depth)]) continue;
                assign[static_cast<std::size_t>(depth)] = hv;
                if (depth + 1 == p) return true;
                if (propagate(depth) && search(depth + 1)) return true;
                assign[static_cast<std::size_t>(depth)] = -1;
            }
        }
        return false;
    }

    // Candidate mask for pattern vertex depth+1: every host vertex consistent
    // (adjacency and non-adjacency) with all assignments made so far.
    bool propagate(int depth) {
        Mask& next = cand[static_cast<std::size_t>(depth) + 1];
        next = full;
        const int nv = depth + 1;
        for (int d = 0; d <= depth; ++d) {
            const int hv = assign[static_cast<std::size_t>(d)];
            auto arow = host.row(hv);
            const bool adj = pattern.adjacent(d, nv);
            for (int w = 0; w < words; ++w) {
                const std::uint64_t r = arow[static_cast<std::size_t>(w)];
                next[static_cast<std::size_t>(w)] &= adj ? r : ~r;
            }
            mask_reset(next, hv);
        }
        std::uint64_t any = 0;
        for (int w = 0; w < words; ++w) any |= next[static_cast<std::size_t>(w)];
        return any != 0;
    }
};

}  // namespace

std::optional<EmbeddingWitness> contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.order() < 1) throw std::invalid_argument("contains_induced: empty pattern");
    if (pattern.order() > host.order()) return std::nullopt;
    EmbedSearch s(host, pattern);
    EmbeddingWitness w;
    if (s.run(w)) return w;
    return std::nullopt;
}

std::optional<EmbeddingWitness> contains_induced_touching(const Graph& host, const Graph& pattern,
                                                          int anchor) {
    if (pattern.order() < 1) throw std::invalid_argument("contains_induced: empty pattern");
    if (anchor < 0 || anchor >= host.order())
        throw std::out_of_range("anchor vertex out of range");
    if (pattern.order() > host.order()) return std::nullopt;
    // the anchor must play some pattern vertex; try each slot in turn
    EmbedSearch s(host, pattern);
    for (int q = 0; q < pattern.order(); ++q) {
        if (host.degree(anchor) < pattern.degree(q)) continue;
        s.forced_level = q;
        s.forced_vertex = anchor;
        EmbeddingWitness w;
        if (s.run(w)) return w;
    }
    return std::nullopt;
}

namespace {

// DFS over induced path extensions: the next vertex must be adjacent to the
// tail and non-adjacent to every earlier path vertex. `blocked` holds the path
// vertices plus all neighbors of non-tail path vertices.
struct PathSearch {
    const Graph& g;
    int target;
    int words;
    std::vector<Mask> saved;  // per depth

    PathSearch(const Graph& graph, int k) : g(graph), target(k), words(graph.words()) {
        saved.resize(static_cast<std::size_t>(k) + 1);
    }

    bool extend(int tail, int len, Mask& blocked) {
        if (len == target) return true;
        auto trow = g.row(tail);
        Mask& next = saved[static_cast<std::size_t>(len)];
        for (int w = 0; w < words; ++w)
            next[static_cast<std::size_t>(w)] =
                blocked[static_cast<std::size_t>(w)] | trow[static_cast<std::size_t>(w)];
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits =
                trow[static_cast<std::size_t>(w)] & ~blocked[static_cast<std::size_t>(w)];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const int v = w * 64 + b;
                Mask m = next;
                mask_set(m, v);
                if (extend(v, len + 1, m)) return true;
            }
        }
        return false;
    }
};

}  // namespace

bool has_induced_path(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("has_induced_path: k must be >= 2");
    if (k > g.order()) return false;
    PathSearch ps(g, k);
    for (int s = 0; s < g.order(); ++s) {
        Mask blocked{};
        mask_set(blocked, s);
        if (ps.extend(s, 1, blocked)) return true;
    }
    return false;
}

namespace {

// Induced cycle of exactly k vertices; the start is the cycle's minimum vertex.
struct HoleSearch {
    const Graph& g;
    int k;
    int start;
    int words;

    bool extend(int tail, int len, const Mask& blocked) {
        auto trow = g.row(tail);
        auto srow = g.row(start);
        const bool closing = (len + 1 == k);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits =
                trow[static_cast<std::size_t>(w)] & ~blocked[static_cast<std::size_t>(w)];
            // middle vertices must avoid the start; the last one must reach it
            bits &= closing ? srow[static_cast<std::size_t>(w)]
                            : ~srow[static_cast<std::size_t>(w)];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const int v = w * 64 + b;
                if (closing) return true;
                Mask m;
                for (int ww = 0; ww < words; ++ww)
                    m[static_cast<std::size_t>(ww)] = blocked[static_cast<std::size_t>(ww)] |
                                                      trow[static_cast<std::size_t>(ww)];
                mask_set(m, v);
                if (extend(v, len + 1, m)) return true;
            }
        }
        return false;
    }
};

}  // namespace

bool has_hole(const Graph& g, int k) {
    if (k < 4) throw std::invalid_argument("has_hole: k must be >= 4");
    if (k > g.order()) return false;
    for (int s = 0; s + k <= g.order(); ++s) {
        HoleSearch hs{g, k, s, g.words()};
        Mask blocked{};
        for (int v = 0; v <= s; ++v) mask_set(blocked, v);
        auto srow = g.row(s);
        for (int w = 0; w < hs.words; ++w) {
            std::uint64_t bits =
                srow[static_cast<std::size_t>(w)] & ~blocked[static_cast<std::size_t>(w)];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const int v = w * 64 + b;
                Mask m = blocked;
                mask_set(m, v);
                if (hs.extend(v, 2, m)) return true;
            }
        }
    }
    return false;
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    if (a.order() == 0) return true;
    auto da = degree_stats(a).sequence;
    auto db = degree_stats(b).sequence;
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    // an induced embedding between equal-order graphs is an isomorphism
    return contains_induced(a, b).has_value();
}

}  // namespace bkv
