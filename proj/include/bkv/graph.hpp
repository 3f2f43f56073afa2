#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bkv {

using VertexList = std::vector<int>;
using EdgeList = std::vector<std::pair<int, int>>;

// Simple undirected graph, immutable after construction. Adjacency is stored
// as per-vertex bit rows (one 64-bit word per 64 vertices; a single word for
// n <= 64, which covers all corpus work here). Vertices are dense 0-based
// indices; optional display labels live in a side table.
class Graph {
public:
    static constexpr int kMaxOrder = 512;

    Graph() = default;

    static Graph edgeless(int n);
    static Graph from_edges(int n, const EdgeList& edges);

    int order() const { return n_; }
    int size() const { return m_; }
    int words() const { return words_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }

    int degree(int v) const;

    std::span<const std::uint64_t> row(int v) const {
        check_vertex(v);
        return {adj_.data() + static_cast<std::size_t>(v) * words_,
                static_cast<std::size_t>(words_)};
    }

    VertexList neighbors(int v) const;

    template <typename F>
    void for_neighbors(int v, F&& f) const {
        auto r = row(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(w * 64 + b);
                bits &= bits - 1;
            }
        }
    }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;
    int vertex_by_label(std::string_view name) const;  // -1 when absent
    Graph with_labels(std::vector<std::string> labels) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

Graph make_path(int k);
Graph make_cycle(int k);
Graph make_complete(int k);
Graph make_empty(int k);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

// Vertex order of the result follows ascending order of s; labels carried over.
Graph induced_subgraph(const Graph& g, std::span<const int> s);
Graph induced_subgraph(const Graph& g, const VertexList& s);
Graph remove_vertex(const Graph& g, int v);

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    std::vector<int> sequence;  // by vertex index
};
DegreeStats degree_stats(const Graph& g);

int component_count(const Graph& g);

}  // namespace bkv
