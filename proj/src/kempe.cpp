#include "bkv/kempe.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "bkv/check.hpp"

namespace bkv::kempe {

namespace {

std::string join_labels(const Graph& g, const VertexList& vs) {
    std::string out;
    for (int v : vs) {
        if (!out.empty()) out += ",";
        out += g.label(v);
    }
    return out;
}

}  // namespace

bool state_valid(const UPhiState& s, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = s.g.order();
    if (s.u < 0 || s.u >= n) return fail("u out of range");
    if (static_cast<int>(s.phi.size()) != n) return fail("phi size mismatch");
    if (s.g.degree(s.u) != 9) return fail("u must have degree 9");

    VertexList nbrs = s.g.neighbors(s.u);
    VertexList roles(s.u_slots.begin(), s.u_slots.end());
    roles.push_back(s.x);
    roles.push_back(s.y);
    VertexList sorted_roles = roles;
    std::sort(sorted_roles.begin(), sorted_roles.end());
    if (std::adjacent_find(sorted_roles.begin(), sorted_roles.end()) != sorted_roles.end())
        return fail("role vertices are not distinct");
    if (sorted_roles != nbrs) return fail("roles do not cover N(u) exactly");

    if (s.phi[static_cast<std::size_t>(s.u)] != 0) return fail("u must be uncolored (phi = 0)");
    for (int v = 0; v < n; ++v) {
        if (v == s.u) continue;
        const int c = s.phi[static_cast<std::size_t>(v)];
        if (c < 1 || c > kPalette)
            return fail("vertex " + s.g.label(v) + " has color outside 1..8");
    }
    for (int i = 0; i < 7; ++i)
        if (s.phi[static_cast<std::size_t>(s.u_slots[static_cast<std::size_t>(i)])] != i + 1)
            return fail("u_" + std::to_string(i + 1) + " is not colored " + std::to_string(i + 1));
    if (s.phi[static_cast<std::size_t>(s.x)] != kPalette ||
        s.phi[static_cast<std::size_t>(s.y)] != kPalette)
        return fail("x and y must both have color 8");

    for (int a = 0; a < n; ++a) {
        if (a == s.u) continue;
        for (int b = a + 1; b < n; ++b) {
            if (b == s.u) continue;
            if (s.g.adjacent(a, b) &&
                s.phi[static_cast<std::size_t>(a)] == s.phi[static_cast<std::size_t>(b)])
                return fail("edge " + s.g.label(a) + "-" + s.g.label(b) + " is monochromatic");
        }
    }
    return true;
}

namespace {

Budget remaining_budget(std::chrono::steady_clock::time_point start, const Budget& budget,
                        bool* exhausted) {
    if (budget.is_unlimited) return Budget::unlimited();
    const auto spent = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    if (spent >= budget.limit) {
        *exhausted = true;
        return Budget{std::chrono::milliseconds{0}, false};
    }
    return Budget{budget.limit - spent, false};
}

}  // namespace

EnumeratedStates enumerate_u_phi(const Graph& g, int max_states, const Budget& budget) {
    EnumeratedStates out;
    const auto start = std::chrono::steady_clock::now();
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) != 9) continue;
        const VertexList nbrs = g.neighbors(u);

        // index mapping into G minus u
        VertexList keep;
        keep.reserve(static_cast<std::size_t>(n - 1));
        for (int v = 0; v < n; ++v)
            if (v != u) keep.push_back(v);
        const Graph rest = induced_subgraph(g, keep);
        auto to_rest = [&](int v) { return v < u ? v : v - 1; };

        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                if (g.adjacent(nbrs[i], nbrs[j])) continue;  // the pair must share a color
                bool exhausted = false;
                const Budget left = remaining_budget(start, budget, &exhausted);
                if (exhausted) {
                    out.undecided = true;
                    return out;
                }
                Coloring partial(rest.order(), kPalette);
                int next = 0;
                std::array<int, 7> slots{};
                for (std::size_t t = 0; t < nbrs.size(); ++t) {
                    if (t == i || t == j) continue;
                    slots[static_cast<std::size_t>(next)] = nbrs[t];
                    partial.assign(to_rest(nbrs[t]), next);  // 0-based color = slot index
                    ++next;
                }
                partial.assign(to_rest(nbrs[i]), kPalette - 1);
                partial.assign(to_rest(nbrs[j]), kPalette - 1);

                KColorResult kc = extend_coloring(rest, kPalette, partial, left);
                if (kc.status == ColorableStatus::Undecided) {
                    out.undecided = true;
                    continue;
                }
                if (kc.status != ColorableStatus::Colorable) continue;

                UPhiState st;
                st.g = g;
                st.u = u;
                st.u_slots = slots;
                st.x = nbrs[i];
                st.y = nbrs[j];
                st.phi.assign(static_cast<std::size_t>(n), 0);
                for (int v = 0; v < n; ++v)
                    if (v != u)
                        st.phi[static_cast<std::size_t>(v)] = kc.coloring->color(to_rest(v)) + 1;
                std::string why;
                if (!state_valid(st, &why))
                    throw std::logic_error("enumerate_u_phi built an invalid state: " + why);
                out.states.push_back(std::move(st));
                if (static_cast<int>(out.states.size()) >= max_states) return out;
            }
        }
    }
    return out;
}

FindUPhiResult find_u_phi(const Graph& g, const Budget& budget) {
    EnumeratedStates e = enumerate_u_phi(g, 1, budget);
    if (!e.states.empty()) return {FindStatus::Found, std::move(e.states.front())};
    if (e.undecided) return {FindStatus::Undecided, std::nullopt};
    return {FindStatus::NoneExists, std::nullopt};
}

namespace {

ColorProfile profile_from_counts(std::vector<int> counts, int own_color, int palette,
                                 int first_color) {
    ColorProfile p;
    p.multiplicity = std::move(counts);
    for (int c = first_color; c < static_cast<int>(p.multiplicity.size()); ++c) {
        const int m = p.multiplicity[static_cast<std::size_t>(c)];
        p.degree_counted += m;
        if (m == 0 && c != own_color) p.missing.push_back(c);
        if (m == 1) p.unique_colors.push_back(c);
        if (m >= 2) p.repeat_colors.push_back(c);
    }
    (void)palette;
    p.no_missing = p.missing.empty();
    return p;
}

}  // namespace

ColorProfile color_profile(const UPhiState& s, int v) {
    if (v < 0 || v >= s.g.order()) throw std::out_of_range("color_profile: vertex out of range");
    std::vector<int> counts(static_cast<std::size_t>(kPalette) + 1, 0);
    s.g.for_neighbors(v, [&](int w) {
        if (w == s.u) return;  // evaluated in G minus u
        ++counts[static_cast<std::size_t>(s.phi[static_cast<std::size_t>(w)])];
    });
    const int own = v == s.u ? 0 : s.phi[static_cast<std::size_t>(v)];
    return profile_from_counts(std::move(counts), own, kPalette, 1);
}

ColorProfile color_profile(const Graph& g, const Coloring& c, int v) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("color_profile: vertex out of range");
    if (c.order() != g.order()) throw std::invalid_argument("coloring order mismatch");
    std::vector<int> counts(static_cast<std::size_t>(c.palette()), 0);
    g.for_neighbors(v, [&](int w) {
        if (!c.assigned(w))
            throw std::invalid_argument("color_profile: neighbor " + g.label(w) +
                                        " is uncolored");
        ++counts[static_cast<std::size_t>(c.color(w))];
    });
    const int own = c.assigned(v) ? c.color(v) : -1;
    return profile_from_counts(std::move(counts), own, c.palette(), 0);
}

VertexList kempe_component(const Graph& g, const Coloring& c, int v, int i, int j) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("kempe_component: vertex out of range");
    std::string why;
    if (!is_proper_partial(g, c, &why))
        throw std::invalid_argument("kempe_component: coloring is not proper: " + why);
    if (!c.assigned(v) || (c.color(v) != i && c.color(v) != j))
        throw std::invalid_argument("kempe_component: v must be colored i or j");

    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    VertexList stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    VertexList comp;
    while (!stack.empty()) {
        const int a = stack.back();
        stack.pop_back();
        comp.push_back(a);
        g.for_neighbors(a, [&](int b) {
            if (seen[static_cast<std::size_t>(b)] || !c.assigned(b)) return;
            if (c.color(b) != i && c.color(b) != j) return;
            seen[static_cast<std::size_t>(b)] = 1;
            stack.push_back(b);
        });
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

Coloring kempe_interchange(const Graph& g, const Coloring& c, const VertexList& component,
                           int i, int j) {
    std::vector<char> in_comp(static_cast<std::size_t>(g.order()), 0);
    for (int v : component) {
        if (v < 0 || v >= g.order())
            throw std::out_of_range("kempe_interchange: component vertex out of range");
        if (!c.assigned(v) || (c.color(v) != i && c.color(v) != j))
            throw std::invalid_argument("kempe_interchange: component vertex " + g.label(v) +
                                        " is not colored i or j");
        in_comp[static_cast<std::size_t>(v)] = 1;
    }
    for (int v : component) {
        bool closed = true;
        g.for_neighbors(v, [&](int w) {
            if (!c.assigned(w)) return;
            if ((c.color(w) == i || c.color(w) == j) && !in_comp[static_cast<std::size_t>(w)])
                closed = false;
        });
        if (!closed)
            throw std::invalid_argument(
                "kempe_interchange: component is not closed under {i,j}-adjacency at " +
                g.label(v));
    }

    Coloring out = c;
    for (int v : component) out.assign(v, out.color(v) == i ? j : i);

    std::string why;
    if (!is_proper_partial(g, out, &why))
        throw std::logic_error("kempe_interchange broke properness: " + why);
    Coloring back = out;
    for (int v : component) back.assign(v, back.color(v) == i ? j : i);
    if (!(back == c)) throw std::logic_error("kempe_interchange is not an involution");
    return out;
}

namespace {

void check_pair_preconditions(const UPhiState& s, int i, int j) {
    if (i < 1 || i > 7 || j < 1 || j > 7 || i == j)
        throw std::invalid_argument("slot indices must be distinct values in 1..7");
    const int ui = s.u_slots[static_cast<std::size_t>(i - 1)];
    const int uj = s.u_slots[static_cast<std::size_t>(j - 1)];
    if (s.g.adjacent(ui, uj))
        throw std::invalid_argument("u_" + std::to_string(i) + " and u_" + std::to_string(j) +
                                    " are adjacent");
}

}  // namespace

std::optional<VertexList> find_alternating_path(const UPhiState& s, int i, int j) {
    check_pair_preconditions(s, i, j);
    const int ui = s.u_slots[static_cast<std::size_t>(i - 1)];
    const int uj = s.u_slots[static_cast<std::size_t>(j - 1)];

    // BFS over the {i,j}-colored subgraph of G minus u; the shortest path is
    // chordless there, and any chord in g between {i,j}-colored vertices would
    // lie in that subgraph, so the path is induced in g
    std::vector<int> prev(static_cast<std::size_t>(s.g.order()), -2);
    std::deque<int> queue{ui};
    prev[static_cast<std::size_t>(ui)] = -1;
    while (!queue.empty()) {
        const int a = queue.front();
        queue.pop_front();
        if (a == uj) break;
        s.g.for_neighbors(a, [&](int b) {
            if (b == s.u || prev[static_cast<std::size_t>(b)] != -2) return;
            const int c = s.phi[static_cast<std::size_t>(b)];
            if (c != i && c != j) return;
            prev[static_cast<std::size_t>(b)] = a;
            queue.push_back(b);
        });
    }
    if (prev[static_cast<std::size_t>(uj)] == -2) return std::nullopt;

    VertexList path;
    for (int v = uj; v != -1; v = prev[static_cast<std::size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());

    for (std::size_t a = 0; a < path.size(); ++a)
        for (std::size_t b = a + 1; b < path.size(); ++b)
            if (s.g.adjacent(path[a], path[b]) != (b == a + 1))
                throw std::logic_error("alternating path is not induced");
    return path;
}

bool exists_alternating_path(const UPhiState& s, int i, int j) {
    return find_alternating_path(s, i, j).has_value();
}

namespace {

Coloring phi_to_coloring(const std::vector<int>& phi) {
    Coloring c(static_cast<int>(phi.size()), kPalette);
    for (std::size_t v = 0; v < phi.size(); ++v)
        if (phi[v] != 0) c.assign(static_cast<int>(v), phi[v] - 1);
    return c;
}

struct ExtendSearch {
    long nodes_left;

    std::optional<Coloring> run(const UPhiState& s, int depth) {
        if (nodes_left-- <= 0) return std::nullopt;

        // pathless pair: interchange u_i's component, then i is free at u
        for (int i = 1; i <= 7; ++i) {
            for (int j = i + 1; j <= 7; ++j) {
                const int ui = s.u_slots[static_cast<std::size_t>(i - 1)];
                const int uj = s.u_slots[static_cast<std::size_t>(j - 1)];
                if (s.g.adjacent(ui, uj)) continue;
                if (exists_alternating_path(s, i, j)) continue;

                Coloring c = phi_to_coloring(s.phi);
                const VertexList comp = kempe_component(s.g, c, ui, i - 1, j - 1);
                Coloring swapped = kempe_interchange(s.g, c, comp, i - 1, j - 1);
                swapped.assign(s.u, i - 1);
                std::string why;
                if (!is_proper_coloring(s.g, swapped, &why))
                    throw std::logic_error("extension produced an improper coloring: " + why);
                return swapped;
            }
        }
        if (depth <= 0) return std::nullopt;

        // recolor an internal path vertex to one of its missing colors
        for (int i = 1; i <= 7; ++i) {
            for (int j = i + 1; j <= 7; ++j) {
                const int ui = s.u_slots[static_cast<std::size_t>(i - 1)];
                const int uj = s.u_slots[static_cast<std::size_t>(j - 1)];
                if (s.g.adjacent(ui, uj)) continue;
                auto path = find_alternating_path(s, i, j);
                if (!path) continue;
                for (std::size_t t = 1; t + 1 < path->size(); ++t) {
                    const int v = (*path)[t];
                    const ColorProfile prof = color_profile(s, v);
                    for (int r : prof.missing) {
                        UPhiState next = s;
                        next.phi[static_cast<std::size_t>(v)] = r;
                        std::string why;
                        if (!state_valid(next, &why))
                            throw std::logic_error("recoloring move broke the state: " + why);
                        if (auto done = run(next, depth - 1)) return done;
                        if (nodes_left <= 0) return std::nullopt;
                    }
                }
            }
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<Coloring> try_extend_to_u(const UPhiState& s, int depth, long max_nodes) {
    std::string why;
    if (!state_valid(s, &why)) throw std::invalid_argument("try_extend_to_u: invalid state: " + why);
    ExtendSearch search{max_nodes};
    return search.run(s, depth);
}

LemmaReport lemma_predicates(const UPhiState& s) {
    std::string why;
    if (!state_valid(s, &why)) throw std::invalid_argument("lemma_predicates: invalid state: " + why);

    LemmaReport rep;
    auto add = [&](std::string clause, bool pass, std::string detail) {
        rep.outcomes.push_back({std::move(clause), pass, std::move(detail)});
    };

    std::array<ColorProfile, 7> prof;
    for (int i = 0; i < 7; ++i)
        prof[static_cast<std::size_t>(i)] =
            color_profile(s, s.u_slots[static_cast<std::size_t>(i)]);

    {
        std::string bad;
        for (int i = 0; i < 7; ++i)
            if (!prof[static_cast<std::size_t>(i)].no_missing)
                bad += (bad.empty() ? "u_" : ", u_") + std::to_string(i + 1);
        add("no-missing-colors", bad.empty(),
            bad.empty() ? "every u_i sees all other colors" : bad + " have missing colors");
    }
    {
        std::string bad;
        for (int i = 0; i < 7; ++i)
            if (prof[static_cast<std::size_t>(i)].repeat_colors.size() > 1)
                bad += (bad.empty() ? "u_" : ", u_") + std::to_string(i + 1);
        add("at-most-one-repeat", bad.empty(),
            bad.empty() ? "every u_i has at most one repeat color" : bad + " repeat twice or more");
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 0; i < 7 && ok; ++i) {
            for (int j = i + 1; j < 7 && ok; ++j) {
                const int ui = s.u_slots[static_cast<std::size_t>(i)];
                const int uj = s.u_slots[static_cast<std::size_t>(j)];
                if (s.g.adjacent(ui, uj)) continue;
                int common = 0;
                for (int t = 0; t < 7; ++t) {
                    const int ut = s.u_slots[static_cast<std::size_t>(t)];
                    if (ut != ui && ut != uj && s.g.adjacent(ui, ut) && s.g.adjacent(uj, ut))
                        ++common;
                }
                if (common > 2) {
                    ok = false;
                    detail = "u_" + std::to_string(i + 1) + ", u_" + std::to_string(j + 1) +
                             " share " + std::to_string(common) + " neighbors inside [u_7]";
                }
            }
        }
        add("common-neighbor-cap", ok, ok ? "<= 2 for every nonadjacent pair" : detail);
    }
    {
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= 7 && ok; ++i) {
            for (int j = i + 1; j <= 7 && ok; ++j) {
                const int ui = s.u_slots[static_cast<std::size_t>(i - 1)];
                const int uj = s.u_slots[static_cast<std::size_t>(j - 1)];
                if (s.g.adjacent(ui, uj)) continue;
                // reachability through internal vertices that have no missing colors
                std::vector<char> seen(static_cast<std::size_t>(s.g.order()), 0);
                VertexList stack{ui};
                seen[static_cast<std::size_t>(ui)] = 1;
                bool reached = false;
                while (!stack.empty() && !reached) {
                    const int a = stack.back();
                    stack.pop_back();
                    s.g.for_neighbors(a, [&](int b) {
                        if (b == s.u || seen[static_cast<std::size_t>(b)]) return;
                        const int c = s.phi[static_cast<std::size_t>(b)];
                        if (c != i && c != j) return;
                        if (b == uj) {
                            reached = true;
                            return;
                        }
                        if (!color_profile(s, b).no_missing) return;
                        seen[static_cast<std::size_t>(b)] = 1;
                        stack.push_back(b);
                    });
                }
                if (!reached) {
                    ok = false;
                    detail = "no (" + std::to_string(i) + "," + std::to_string(j) + ")-u_" +
                             std::to_string(i) + "u_" + std::to_string(j) +
                             "-path with missing-color-free internals";
                }
            }
        }
        add("alternating-paths", ok, ok ? "paths exist for every nonadjacent pair" : detail);
    }
    {
        bool ok = true;
        std::string detail;
        std::vector<char> in_n_of_u(static_cast<std::size_t>(s.g.order()), 0);
        s.g.for_neighbors(s.u, [&](int w) { in_n_of_u[static_cast<std::size_t>(w)] = 1; });
        std::vector<char> in_u7(static_cast<std::size_t>(s.g.order()), 0);
        for (int t : s.u_slots) in_u7[static_cast<std::size_t>(t)] = 1;
        for (int v = 0; v < s.g.order() && ok; ++v) {
            if (v == s.u) continue;
            const ColorProfile p = color_profile(s, v);
            if (!p.no_missing) continue;
            int maxmult = 0;
            for (int c = 1; c <= kPalette; ++c)
                maxmult = std::max(maxmult, p.multiplicity[static_cast<std::size_t>(c)]);
            if (in_u7[static_cast<std::size_t>(v)] && maxmult >= 3) {
                ok = false;
                detail = s.g.label(v) + " in [u_7] has " + std::to_string(maxmult) +
                         " same-colored neighbors";
            } else if (!in_n_of_u[static_cast<std::size_t>(v)]) {
                if (p.repeat_colors.size() >= 3) {
                    ok = false;
                    detail = s.g.label(v) + " outside N(u) has three repeat colors";
                } else if (maxmult >= 4) {
                    ok = false;
                    detail = s.g.label(v) + " outside N(u) has " + std::to_string(maxmult) +
                             " same-colored neighbors";
                }
            }
        }
        add("degree-counting", ok, ok ? "multiplicity caps hold" : detail);
    }
    {
        bool cond_i = true;
        for (int i = 0; i < 7; ++i) {
            int nonadj = 0;
            for (int k = 0; k < 7; ++k)
                if (k != i && !s.g.adjacent(s.u_slots[static_cast<std::size_t>(i)],
                                            s.u_slots[static_cast<std::size_t>(k)]))
                    ++nonadj;
            if (nonadj > 2) cond_i = false;
        }
        int covered = 0;
        for (int t : s.u_slots)
            if (s.g.adjacent(s.x, t) || s.g.adjacent(s.y, t)) ++covered;
        const bool cond_ii = covered >= 5;
        add("neighborhood-conditions", !(cond_i && cond_ii),
            std::string("(i) ") + (cond_i ? "holds" : "fails") + ", (ii) " +
                (cond_ii ? "holds" : "fails") + ", |(N(x) u N(y)) n [u_7]| = " +
                std::to_string(covered));
    }
    {
        int best = 7;
        for (int i = 0; i < 7; ++i) {
            int inside = 0;
            for (int k = 0; k < 7; ++k)
                if (k != i && s.g.adjacent(s.u_slots[static_cast<std::size_t>(i)],
                                           s.u_slots[static_cast<std::size_t>(k)]))
                    ++inside;
            best = std::min(best, inside);
        }
        add("u7-incidence-cap", best <= 3,
            "min over i of |N(u_i) n [u_7]| = " + std::to_string(best));
    }
    return rep;
}

bool LemmaReport::violated(bool include_u7_cap) const {
    for (const auto& o : outcomes) {
        if (o.clause == "u7-incidence-cap" && !include_u7_cap) continue;
        if (!o.pass) return true;
    }
    return false;
}

const PredicateOutcome* LemmaReport::find(const std::string& clause) const {
    for (const auto& o : outcomes)
        if (o.clause == clause) return &o;
    return nullptr;
}

}  // namespace bkv::kempe
