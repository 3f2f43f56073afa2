#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bkv/graph.hpp"
#include "bkv/solve.hpp"

// The recoloring machinery around a distinguished degree-9 vertex u: an
// 8-coloring phi of G minus u giving u's neighbors the colors 1..7 once each
// and 8 exactly twice. State-facing colors are 1-based (palette 1..8); the
// 0-based solver palette is translated at this boundary.
namespace bkv::kempe {

constexpr int kPalette = 8;

struct UPhiState {
    Graph g;
    int u = -1;
    std::array<int, 7> u_slots{};  // u_slots[i] plays u_{i+1}, phi(u_{i+1}) = i+1
    int x = -1, y = -1;            // the two neighbors sharing color 8
    std::vector<int> phi;          // 1-based; phi[u] == 0, all others in 1..8
};

bool state_valid(const UPhiState& s, std::string* why = nullptr);

enum class FindStatus { Found, NoneExists, Undecided };

struct FindUPhiResult {
    FindStatus status = FindStatus::NoneExists;
    std::optional<UPhiState> state;
};

// Degree-9 vertices are scanned in index order and shared pairs in
// lexicographic order; the first valid state wins.
FindUPhiResult find_u_phi(const Graph& g, const Budget& budget = {});

struct EnumeratedStates {
    std::vector<UPhiState> states;
    bool undecided = false;  // some subproblem hit the budget
};
EnumeratedStates enumerate_u_phi(const Graph& g, int max_states, const Budget& budget = {});

struct ColorProfile {
    std::vector<int> multiplicity;   // index by color; [0] unused in 1-based contexts
    std::vector<int> missing;        // palette colors absent from N(v), own color excluded
    std::vector<int> unique_colors;  // present exactly once
    std::vector<int> repeat_colors;  // present more than once
    bool no_missing = false;
    int degree_counted = 0;
};

// Evaluated in G minus u; v may be u itself (all its neighbors are colored).
ColorProfile color_profile(const UPhiState& s, int v);

// General form over a solver coloring (0-based colors). Throws when a
// neighbor of v is uncolored.
ColorProfile color_profile(const Graph& g, const Coloring& c, int v);

// Connected component of the {i,j}-colored induced subgraph containing v
// (0-based colors, proper coloring required).
VertexList kempe_component(const Graph& g, const Coloring& c, int v, int i, int j);

// Swaps i and j inside a full Kempe component; rejects components that are not
// closed under {i,j}-adjacency. Properness and involution are asserted.
Coloring kempe_interchange(const Graph& g, const Coloring& c, const VertexList& component,
                           int i, int j);

// i, j are 1-based slot indices in [7] with u_i nonadjacent to u_j. The path is
// the shortest alternating connection inside the (i,j) component, hence
// induced; nullopt when u_i and u_j sit in different components.
std::optional<VertexList> find_alternating_path(const UPhiState& s, int i, int j);
bool exists_alternating_path(const UPhiState& s, int i, int j);

// Bounded deterministic move search: recolor an internal alternating-path
// vertex to one of its missing colors, or interchange a pathless pair's
// component and give u the freed color. Sound only; a returned coloring is a
// verified proper 8-coloring of all of g.
std::optional<Coloring> try_extend_to_u(const UPhiState& s, int depth = 4,
                                        long max_nodes = 20000);

struct PredicateOutcome {
    std::string clause;
    bool pass = false;
    std::string detail;
};

struct LemmaReport {
    std::vector<PredicateOutcome> outcomes;
    // true when some conclusion that must hold in a minimal counterexample
    // fails on this state; the u7 incidence cap only binds for (P6,C4)-free
    // hosts and is included on request
    bool violated(bool include_u7_cap) const;
    const PredicateOutcome* find(const std::string& clause) const;
};

LemmaReport lemma_predicates(const UPhiState& s);

}  // namespace bkv::kempe
