// Offline generator for the shipped corpora:
//   gen_small_graphs exhaustive <max_n> <outdir>   all graphs up to isomorphism,
//                                                  one graphs_n<k>.g6 per order
//   gen_small_graphs random <n> <count> <seed> <outfile>
//
// Enumeration adds one vertex at a time to the previous level and dedupes by
// the lexicographically minimum upper-triangle bitstring over all vertex
// orderings (branch-and-bound on the shared prefix).

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bkv/graph.hpp"
#include "bkv/graph6.hpp"

namespace {

struct CanonSearch {
    int n;
    const std::vector<std::uint16_t>& adj;  // row masks
    int total_bits;
    std::uint32_t best;
    std::vector<int> perm;

    CanonSearch(int order, const std::vector<std::uint16_t>& rows)
        : n(order), adj(rows), total_bits(order * (order - 1) / 2) {
        best = total_bits >= 32 ? 0xffffffffu : ((1u << total_bits) - 1);
        perm.assign(static_cast<std::size_t>(n), -1);
    }

    void dfs(int placed, std::uint16_t used, std::uint32_t prefix, int prefix_len) {
        if (placed == n) {
            if (prefix < best) best = prefix;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used & (std::uint16_t{1} << v)) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < placed; ++i)
                col = (col << 1) | ((adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> v) & 1u);
            const std::uint32_t cand = (prefix << placed) | col;
            const int len = prefix_len + placed;
            if (cand > (best >> (total_bits - len))) continue;
            perm[static_cast<std::size_t>(placed)] = v;
            dfs(placed + 1, used | (std::uint16_t{1} << v), cand, len);
        }
    }

    std::uint32_t run() {
        dfs(0, 0, 0, 0);
        return best;
    }
};

std::uint32_t canonical_bits(int n, const std::vector<std::uint16_t>& rows) {
    return CanonSearch(n, rows).run();
}

// Decode the column-major upper-triangle bitstring back into a graph.
bkv::Graph graph_from_bits(int n, std::uint32_t bits) {
    const int total = n * (n - 1) / 2;
    bkv::EdgeList edges;
    int at = total;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --at;
            if ((bits >> at) & 1u) edges.emplace_back(i, j);
        }
    return bkv::Graph::from_edges(n, edges);
}

std::vector<std::uint16_t> rows_from_bits(int n, std::uint32_t bits) {
    std::vector<std::uint16_t> rows(static_cast<std::size_t>(n), 0);
    const int total = n * (n - 1) / 2;
    int at = total;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --at;
            if ((bits >> at) & 1u) {
                rows[static_cast<std::size_t>(i)] |= std::uint16_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint16_t{1} << i;
            }
        }
    return rows;
}

int run_exhaustive(int max_n, const std::string& outdir) {
    if (max_n < 1 || max_n > 9) {
        std::fprintf(stderr, "exhaustive mode supports max_n in 1..9\n");
        return 2;
    }
    std::set<std::uint32_t> level{{0}};  // K1
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) {
            std::set<std::uint32_t> next;
            for (std::uint32_t bits : level) {
                auto rows = rows_from_bits(n - 1, bits);
                rows.push_back(0);
                for (std::uint32_t sub = 0; sub < (1u << (n - 1)); ++sub) {
                    for (int v = 0; v < n - 1; ++v) {
                        if ((sub >> v) & 1u)
                            rows[static_cast<std::size_t>(v)] |= std::uint16_t{1} << (n - 1);
                        else
                            rows[static_cast<std::size_t>(v)] &= static_cast<std::uint16_t>(~(std::uint16_t{1} << (n - 1)));
                    }
                    rows[static_cast<std::size_t>(n - 1)] = static_cast<std::uint16_t>(sub);
                    next.insert(canonical_bits(n, rows));
                }
            }
            level = std::move(next);
        }
        const std::string path = outdir + "/graphs_n" + std::to_string(n) + ".g6";
        std::ofstream out(path);
        if (!out) {
            std::fprintf(stderr, "cannot write %s\n", path.c_str());
            return 1;
        }
        for (std::uint32_t bits : level)
            out << bkv::to_graph6(graph_from_bits(n, bits)) << "\n";
        std::printf("n=%d: %zu graphs -> %s\n", n, level.size(), path.c_str());
    }
    return 0;
}

int run_random(int n, long count, std::uint64_t seed, const std::string& outfile) {
    if (n < 1 || n > 64 || count < 0) {
        std::fprintf(stderr, "random mode needs 1 <= n <= 64 and count >= 0\n");
        return 2;
    }
    std::ofstream out(outfile);
    if (!out) {
        std::fprintf(stderr, "cannot write %s\n", outfile.c_str());
        return 1;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const double densities[] = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    for (long i = 0; i < count; ++i) {
        const double p = densities[rng() & 7];
        bkv::EdgeList edges;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (coin(rng) < p) edges.emplace_back(a, b);
        out << bkv::to_graph6(bkv::Graph::from_edges(n, edges)) << "\n";
    }
    std::printf("wrote %ld random graphs on %d vertices -> %s\n", count, n, outfile.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string mode = argc > 1 ? argv[1] : "";
    if (mode == "exhaustive" && argc == 4)
        return run_exhaustive(std::atoi(argv[2]), argv[3]);
    if (mode == "random" && argc == 6)
        return run_random(std::atoi(argv[2]), std::atol(argv[3]),
                          static_cast<std::uint64_t>(std::atoll(argv[4])), argv[5]);
    std::fprintf(stderr,
                 "usage:\n"
                 "  gen_small_graphs exhaustive <max_n> <outdir>\n"
                 "  gen_small_graphs random <n> <count> <seed> <outfile>\n");
    return 2;
}
