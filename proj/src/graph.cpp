#include "bkv/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bkv {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex index " + std::to_string(v) +
                                " out of range for graph of order " + std::to_string(n_));
}

Graph Graph::edgeless(int n) {
    if (n < 0 || n > kMaxOrder)
        throw std::invalid_argument("graph order must be in [0, " +
                                    std::to_string(kMaxOrder) + "], got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.words_ = n == 0 ? 0 : (n + 63) / 64;
    g.adj_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    return g;
}

Graph Graph::from_edges(int n, const EdgeList& edges) {
    Graph g = edgeless(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        std::uint64_t& wu = g.adj_[static_cast<std::size_t>(u) * g.words_ + (v >> 6)];
        if (!((wu >> (v & 63)) & 1u)) {
            wu |= std::uint64_t{1} << (v & 63);
            g.adj_[static_cast<std::size_t>(v) * g.words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
            ++g.m_;
        }
    }
    return g;
}

int Graph::degree(int v) const {
    auto r = row(v);
    int d = 0;
    for (std::uint64_t w : r) d += __builtin_popcountll(w);
    return d;
}

VertexList Graph::neighbors(int v) const {
    VertexList out;
    out.reserve(static_cast<std::size_t>(degree(v)));
    for_neighbors(v, [&](int w) { out.push_back(w); });
    return out;
}

std::string Graph::label(int v) const {
    check_vertex(v);
    if (!labels_.empty() && !labels_[static_cast<std::size_t>(v)].empty())
        return labels_[static_cast<std::size_t>(v)];
    return std::to_string(v);
}

int Graph::vertex_by_label(std::string_view name) const {
    for (int v = 0; v < n_; ++v)
        if (!labels_.empty() && labels_[static_cast<std::size_t>(v)] == name) return v;
    return -1;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (static_cast<int>(labels.size()) != n_)
        throw std::invalid_argument("label table size must equal graph order");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph make_path(int k) {
    if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
    EdgeList e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(k, e);
}

Graph make_cycle(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    EdgeList e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, e);
}

Graph make_complete(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    EdgeList e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return Graph::from_edges(k, e);
}

Graph make_empty(int k) { return Graph::edgeless(k); }

namespace {

EdgeList all_edges(const Graph& g, int offset = 0) {
    EdgeList e;
    e.reserve(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.order(); ++v)
        g.for_neighbors(v, [&](int w) {
            if (v < w) e.emplace_back(v + offset, w + offset);
        });
    return e;
}

std::vector<std::string> merged_labels(const Graph& g, const Graph& h) {
    if (!g.has_labels() && !h.has_labels()) return {};
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(g.order() + h.order()));
    for (int v = 0; v < g.order(); ++v) out.push_back(g.has_labels() ? g.labels()[v] : "");
    for (int v = 0; v < h.order(); ++v) out.push_back(h.has_labels() ? h.labels()[v] : "");
    return out;
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    EdgeList e = all_edges(g);
    EdgeList eh = all_edges(h, g.order());
    e.insert(e.end(), eh.begin(), eh.end());
    Graph out = Graph::from_edges(g.order() + h.order(), e);
    auto labels = merged_labels(g, h);
    return labels.empty() ? out : out.with_labels(std::move(labels));
}

Graph join(const Graph& g, const Graph& h) {
    EdgeList e = all_edges(g);
    EdgeList eh = all_edges(h, g.order());
    e.insert(e.end(), eh.begin(), eh.end());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) e.emplace_back(u, g.order() + v);
    Graph out = Graph::from_edges(g.order() + h.order(), e);
    auto labels = merged_labels(g, h);
    return labels.empty() ? out : out.with_labels(std::move(labels));
}

Graph complement(const Graph& g) {
    EdgeList e;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    Graph out = Graph::from_edges(g.order(), e);
    return g.has_labels() ? out.with_labels(g.labels()) : out;
}

Graph induced_subgraph(const Graph& g, std::span<const int> s) {
    VertexList keep(s.begin(), s.end());
    std::sort(keep.begin(), keep.end());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= g.order())
            throw std::out_of_range("induced_subgraph: vertex " + std::to_string(keep[i]) +
                                    " out of range");
        if (i > 0 && keep[i] == keep[i - 1])
            throw std::invalid_argument("induced_subgraph: duplicate vertex " +
                                        std::to_string(keep[i]));
    }
    EdgeList e;
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) e.emplace_back(static_cast<int>(i), static_cast<int>(j));
    Graph out = Graph::from_edges(static_cast<int>(keep.size()), e);
    if (g.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(keep.size());
        for (int v : keep) labels.push_back(g.labels()[static_cast<std::size_t>(v)]);
        out = out.with_labels(std::move(labels));
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const VertexList& s) {
    return induced_subgraph(g, std::span<const int>(s.data(), s.size()));
}

Graph remove_vertex(const Graph& g, int v) {
    VertexList keep;
    keep.reserve(static_cast<std::size_t>(g.order() - 1));
    for (int w = 0; w < g.order(); ++w)
        if (w != v) keep.push_back(w);
    return induced_subgraph(g, keep);
}

DegreeStats degree_stats(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("degree_stats: empty graph");
    DegreeStats s;
    s.sequence.reserve(static_cast<std::size_t>(g.order()));
    s.max_degree = 0;
    s.min_degree = g.order();
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        s.sequence.push_back(d);
        s.max_degree = std::max(s.max_degree, d);
        s.min_degree = std::min(s.min_degree, d);
    }
    return s;
}

int component_count(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    int comps = 0;
    VertexList stack;
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        ++comps;
        stack.assign(1, s);
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.for_neighbors(v, [&](int w) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            });
        }
    }
    return comps;
}

}  // namespace bkv
