#include "bkv/solve.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

#include "bkv/check.hpp"

namespace bkv {

Coloring::Coloring(int n, int palette) : palette_(palette) {
    if (n < 0 || palette < 0) throw std::invalid_argument("coloring sizes must be nonnegative");
    color_.assign(static_cast<std::size_t>(n), kUnassigned);
}

void Coloring::assign(int v, int c) {
    if (c < 0 || c >= palette_) throw std::invalid_argument("color out of palette");
    color_.at(static_cast<std::size_t>(v)) = c;
}

void Coloring::clear(int v) { color_.at(static_cast<std::size_t>(v)) = kUnassigned; }

bool Coloring::total() const {
    return std::none_of(color_.begin(), color_.end(),
                        [](int c) { return c == kUnassigned; });
}

int Coloring::colors_used() const {
    std::vector<char> seen(static_cast<std::size_t>(palette_), 0);
    int used = 0;
    for (int c : color_)
        if (c != kUnassigned && !seen[static_cast<std::size_t>(c)]) {
            seen[static_cast<std::size_t>(c)] = 1;
            ++used;
        }
    return used;
}

namespace {

struct Deadline {
    std::chrono::steady_clock::time_point at;
    bool unlimited;
    mutable unsigned tick = 0;
    mutable bool expired_flag = false;

    explicit Deadline(const Budget& b)
        : at(std::chrono::steady_clock::now() + b.limit), unlimited(b.is_unlimited) {}

    bool expired() const {
        if (unlimited || expired_flag) return expired_flag;
        if ((++tick & 1023u) == 0 && std::chrono::steady_clock::now() > at)
            expired_flag = true;
        return expired_flag;
    }
};

// Branching order fixed across the module: degree descending, ties by index.
VertexList branching_order(const Graph& g) {
    VertexList order(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = g.degree(a), db = g.degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

constexpr int kMaxWords = Graph::kMaxOrder / 64;
using Mask = std::array<std::uint64_t, kMaxWords>;

inline void mask_set(Mask& m, int i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline void mask_reset(Mask& m, int i) { m[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
inline bool mask_test(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1u; }

struct CliqueSolver {
    int n;
    int words;
    std::vector<Mask> adj;    // reordered
    VertexList order;         // position -> original vertex
    Deadline deadline;
    int best = 0;
    VertexList best_set;      // positions
    VertexList current;       // positions
    std::vector<int> color_buf;
    std::vector<int> vert_buf;

    CliqueSolver(const Graph& g, const Budget& b)
        : n(g.order()), words(g.words()), deadline(b) {
        order = branching_order(g);
        VertexList pos(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(order[i])] = i;
        adj.assign(static_cast<std::size_t>(n), Mask{});
        for (int v = 0; v < n; ++v) {
            const int pv = pos[static_cast<std::size_t>(v)];
            g.for_neighbors(v, [&](int w) {
                mask_set(adj[static_cast<std::size_t>(pv)], pos[static_cast<std::size_t>(w)]);
            });
        }
        color_buf.resize(static_cast<std::size_t>(n));
        vert_buf.resize(static_cast<std::size_t>(n));
    }

    bool popcount(const Mask& m) const {
        for (int w = 0; w < words; ++w)
            if (m[static_cast<std::size_t>(w)]) return true;
        return false;
    }

    // Greedy-colors P; fills vert_buf/color_buf sorted by ascending color.
    int color_sort(const Mask& p, int& count) {
        Mask rest = p;
        count = 0;
        int colors = 0;
        while (popcount(rest)) {
            ++colors;
            Mask q = rest;
            while (true) {
                int v = -1;
                for (int w = 0; w < words && v < 0; ++w)
                    if (q[static_cast<std::size_t>(w)])
                        v = w * 64 + __builtin_ctzll(q[static_cast<std::size_t>(w)]);
                if (v < 0) break;
                mask_reset(rest, v);
                mask_reset(q, v);
                for (int w = 0; w < words; ++w)
                    q[static_cast<std::size_t>(w)] &=
                        ~adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
                vert_buf[static_cast<std::size_t>(count)] = v;
                color_buf[static_cast<std::size_t>(count)] = colors;
                ++count;
            }
        }
        return colors;
    }

    void expand(const Mask& p) {
        if (deadline.expired()) return;
        int count = 0;
        color_sort(p, count);
        // local copies: color_sort reuses the shared buffers in recursive calls
        std::vector<int> verts(vert_buf.begin(), vert_buf.begin() + count);
        std::vector<int> cols(color_buf.begin(), color_buf.begin() + count);
        Mask rest = p;
        for (int i = count - 1; i >= 0; --i) {
            const int size = static_cast<int>(current.size());
            if (size + cols[static_cast<std::size_t>(i)] <= best) return;
            const int v = verts[static_cast<std::size_t>(i)];
            current.push_back(v);
            Mask next;
            for (int w = 0; w < words; ++w)
                next[static_cast<std::size_t>(w)] =
                    rest[static_cast<std::size_t>(w)] &
                    adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            if (popcount(next)) {
                expand(next);
            } else if (static_cast<int>(current.size()) > best) {
                best = static_cast<int>(current.size());
                best_set = current;
            }
            current.pop_back();
            mask_reset(rest, v);
            if (deadline.expired()) return;
        }
    }

    MaxCliqueResult solve() {
        Mask all{};
        for (int i = 0; i < n; ++i) mask_set(all, i);
        expand(all);
        MaxCliqueResult r;
        r.decided = !deadline.expired_flag;
        r.omega = best;
        for (int p : best_set) r.clique.push_back(order[static_cast<std::size_t>(p)]);
        std::sort(r.clique.begin(), r.clique.end());
        return r;
    }
};

}  // namespace

MaxCliqueResult max_clique(const Graph& g, const Budget& budget) {
    if (g.order() == 0) throw std::invalid_argument("max_clique: empty graph");
    CliqueSolver solver(g, budget);
    MaxCliqueResult r = solver.solve();
    if (!is_clique(g, r.clique))
        throw std::logic_error("max_clique produced an invalid certificate");
    return r;
}

namespace {

struct ColorSolver {
    const Graph& g;
    int n;
    int k;
    Deadline deadline;
    std::vector<std::uint64_t> avail;  // per vertex, bit c = color c usable
    std::vector<int> color;
    VertexList order;                  // assignment order over uncolored vertices
    std::uint64_t used_mask = 0;

    ColorSolver(const Graph& graph, int colors, const Budget& b)
        : g(graph), n(graph.order()), k(colors), deadline(b) {
        const std::uint64_t all = k >= 64 ? ~std::uint64_t{0}
                                          : ((std::uint64_t{1} << k) - 1);
        avail.assign(static_cast<std::size_t>(n), all);
        color.assign(static_cast<std::size_t>(n), Coloring::kUnassigned);
    }

    bool place(int v, int c) {
        color[static_cast<std::size_t>(v)] = c;
        used_mask |= std::uint64_t{1} << c;
        bool ok = true;
        g.for_neighbors(v, [&](int w) {
            if (color[static_cast<std::size_t>(w)] == c) ok = false;
            avail[static_cast<std::size_t>(w)] &= ~(std::uint64_t{1} << c);
        });
        return ok;
    }

    ColorableStatus search(std::size_t idx) {
        if (deadline.expired()) return ColorableStatus::Undecided;
        if (idx == order.size()) return ColorableStatus::Colorable;
        const int v = order[idx];
        // fresh colors enter in first-use order; smaller unused colors are
        // interchangeable with larger ones, so only the lowest is tried
        const std::uint64_t unused = ~used_mask & ((k >= 64) ? ~std::uint64_t{0}
                                                             : ((std::uint64_t{1} << k) - 1));
        std::uint64_t allowed = avail[static_cast<std::size_t>(v)] & used_mask;
        if (unused) allowed |= avail[static_cast<std::size_t>(v)] & (unused & -unused);
        while (allowed) {
            const int c = __builtin_ctzll(allowed);
            allowed &= allowed - 1;
            const std::uint64_t saved_used = used_mask;
            std::vector<std::pair<int, std::uint64_t>> trail;
            color[static_cast<std::size_t>(v)] = c;
            used_mask |= std::uint64_t{1} << c;
            bool dead = false;
            g.for_neighbors(v, [&](int w) {
                if (color[static_cast<std::size_t>(w)] != Coloring::kUnassigned) return;
                const std::uint64_t before = avail[static_cast<std::size_t>(w)];
                const std::uint64_t after = before & ~(std::uint64_t{1} << c);
                if (after != before) {
                    trail.emplace_back(w, before);
                    avail[static_cast<std::size_t>(w)] = after;
                    if (after == 0) dead = true;
                }
            });
            if (!dead) {
                const ColorableStatus st = search(idx + 1);
                if (st != ColorableStatus::NotColorable) return st;
            }
            for (auto& [w, before] : trail) avail[static_cast<std::size_t>(w)] = before;
            color[static_cast<std::size_t>(v)] = Coloring::kUnassigned;
            used_mask = saved_used;
        }
        return ColorableStatus::NotColorable;
    }
};

KColorResult solve_with_seed(const Graph& g, int k, const Coloring* partial,
                             const Budget& budget) {
    if (k < 0) throw std::invalid_argument("palette size must be nonnegative");
    if (k > 63) throw std::invalid_argument("palette sizes above 63 are not supported");
    const int n = g.order();
    if (n == 0) return {ColorableStatus::Colorable, Coloring(0, k)};
    if (k == 0) return {ColorableStatus::NotColorable, std::nullopt};

    ColorSolver solver(g, k, budget);
    VertexList precolored;
    if (partial) {
        for (int v = 0; v < n; ++v) {
            if (!partial->assigned(v)) continue;
            const int c = partial->color(v);
            if (c < 0 || c >= k)
                throw std::invalid_argument("partial assignment color out of palette");
            if (!solver.place(v, c)) return {ColorableStatus::NotColorable, std::nullopt};
            precolored.push_back(v);
        }
    } else {
        // seed a maximum clique with distinct colors
        MaxCliqueResult mc = max_clique(g, budget);
        if (!mc.decided) return {ColorableStatus::Undecided, std::nullopt};
        if (mc.omega > k) return {ColorableStatus::NotColorable, std::nullopt};
        int c = 0;
        for (int v : mc.clique) {
            solver.place(v, c++);
            precolored.push_back(v);
        }
    }

    for (int v : branching_order(g))
        if (solver.color[static_cast<std::size_t>(v)] == Coloring::kUnassigned)
            solver.order.push_back(v);

    const ColorableStatus st = solver.search(0);
    if (st != ColorableStatus::Colorable) return {st, std::nullopt};
    Coloring out(n, k);
    for (int v = 0; v < n; ++v) out.assign(v, solver.color[static_cast<std::size_t>(v)]);
    if (!is_proper_coloring(g, out))
        throw std::logic_error("coloring search produced an improper certificate");
    return {ColorableStatus::Colorable, out};
}

}  // namespace

KColorResult is_k_colorable(const Graph& g, int k, const Budget& budget) {
    return solve_with_seed(g, k, nullptr, budget);
}

KColorResult extend_coloring(const Graph& g, int k, const Coloring& partial,
                             const Budget& budget) {
    if (partial.order() != g.order())
        throw std::invalid_argument("partial coloring order mismatch");
    return solve_with_seed(g, k, &partial, budget);
}

Coloring greedy_coloring(const Graph& g, GreedyOrder ord) {
    const int n = g.order();
    const int palette = n == 0 ? 0 : degree_stats(g).max_degree + 1;
    Coloring out(n, palette);
    VertexList order;
    if (ord == GreedyOrder::DegreeDescending) {
        order = branching_order(g);
    } else {
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
    }
    for (int v : order) {
        std::uint64_t taken = 0;
        g.for_neighbors(v, [&](int w) {
            if (out.assigned(w)) taken |= std::uint64_t{1} << out.color(w);
        });
        int c = 0;
        while (taken & (std::uint64_t{1} << c)) ++c;
        out.assign(v, c);
    }
    return out;
}

ChromaticResult chromatic_number(const Graph& g, const Budget& budget) {
    if (g.order() == 0) throw std::invalid_argument("chromatic_number: empty graph");
    const auto start = std::chrono::steady_clock::now();
    // the budget covers the whole call, not each decision subproblem
    auto remaining = [&]() -> std::optional<Budget> {
        if (budget.is_unlimited) return Budget::unlimited();
        const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        if (spent >= budget.limit) return std::nullopt;
        return Budget{budget.limit - spent, false};
    };

    MaxCliqueResult mc = max_clique(g, budget);
    if (!mc.decided) return {};
    Coloring greedy = greedy_coloring(g);
    const int ub = greedy.colors_used();
    const int max_deg = degree_stats(g).max_degree;

    ChromaticResult res;
    for (int k = mc.omega; k < ub; ++k) {
        auto left = remaining();
        if (!left) return {};
        KColorResult kc = is_k_colorable(g, k, *left);
        if (kc.status == ColorableStatus::Undecided) return {};
        if (kc.status == ColorableStatus::Colorable) {
            res = {true, k, std::move(kc.coloring)};
            break;
        }
    }
    if (!res.decided) {
        // greedy colors are downward closed, so they fit a palette of exactly ub
        Coloring cert(g.order(), ub);
        for (int v = 0; v < g.order(); ++v) cert.assign(v, greedy.color(v));
        res = {true, ub, std::move(cert)};
    }

    if (res.chi < mc.omega || res.chi > ub || ub > max_deg + 1)
        throw std::logic_error("chromatic_number violated the sandwich bounds");
    if (!res.cert || res.cert->colors_used() != res.chi || !is_proper_coloring(g, *res.cert))
        throw std::logic_error("chromatic_number produced an invalid certificate");
    return res;
}

}  // namespace bkv
