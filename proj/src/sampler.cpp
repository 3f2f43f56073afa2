#include "bkv/sampler.hpp"

#include <random>
#include <stdexcept>

namespace bkv {

namespace {

Graph with_new_vertex(const Graph& g, const VertexList& nbrs) {
    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(g.size() + static_cast<int>(nbrs.size())));
    for (int v = 0; v < g.order(); ++v)
        g.for_neighbors(v, [&](int w) {
            if (v < w) edges.emplace_back(v, w);
        });
    for (int v : nbrs) edges.emplace_back(v, g.order());
    return Graph::from_edges(g.order() + 1, edges);
}

}  // namespace

SampleResult sample_class_members(const SampleOptions& options) {
    if (options.n_min < 1 || options.n_max < options.n_min)
        throw std::invalid_argument("sampler needs 1 <= n_min <= n_max");
    if (options.n_max > 64)
        throw std::invalid_argument("sampler supports n <= 64");
    if (options.min_delta && *options.min_delta >= options.n_max)
        throw std::invalid_argument("min_delta requires n_max > min_delta");

    SampleResult result;
    if (options.count <= 0) return result;

    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double densities[] = {0.15, 0.25, 0.35, 0.5};

    long attempts_left = options.attempts_per_graph * options.count;
    while (static_cast<int>(result.graphs.size()) < options.count) {
        if (attempts_left-- <= 0) {
            result.exhausted = true;
            result.warning = "sampling budget exhausted after " +
                             std::to_string(result.graphs.size()) + " of " +
                             std::to_string(options.count) + " graphs";
            break;
        }

        int low = options.n_min;
        if (options.min_delta) low = std::max(low, *options.min_delta + 1);
        std::uniform_int_distribution<int> pick_n(low, options.n_max);
        const int target_n = pick_n(rng);
        const int grow_n = options.min_delta ? target_n - 1 : target_n;
        const double p = densities[rng() & 3];

        Graph g = make_complete(1);
        bool dead = false;
        for (int idx = 1; idx < grow_n && !dead; ++idx) {
            bool placed = false;
            for (int attempt = 0; attempt < options.attempts_per_vertex; ++attempt) {
                VertexList nbrs;
                for (int v = 0; v < idx; ++v)
                    if (coin(rng) < p) nbrs.push_back(v);
                const Graph cand = with_new_vertex(g, nbrs);
                if (is_class_member_touching(cand, options.spec, idx).member) {
                    g = cand;
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                // an isolated vertex is the fallback; reject the whole attempt if
                // even that creates a forbidden pattern (disconnected patterns)
                const Graph cand = with_new_vertex(g, {});
                if (is_class_member_touching(cand, options.spec, idx).member)
                    g = cand;
                else
                    dead = true;
            }
        }
        if (dead) continue;

        if (options.min_delta) {
            VertexList all(static_cast<std::size_t>(g.order()));
            for (int v = 0; v < g.order(); ++v) all[static_cast<std::size_t>(v)] = v;
            const Graph cand = with_new_vertex(g, all);
            if (!is_class_member_touching(cand, options.spec, g.order()).member) continue;
            g = cand;
        }

        // reject, never repair: full validation before emitting
        if (!is_class_member(g, options.spec).member) continue;
        if (options.min_delta && degree_stats(g).max_degree < *options.min_delta) continue;
        result.graphs.push_back(std::move(g));
    }
    return result;
}

}  // namespace bkv
