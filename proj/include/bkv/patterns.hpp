#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bkv/graph.hpp"

namespace bkv {

// The 10-vertex configuration: an induced C5 v1..v5 augmented with a triangle
// xyz and an edge t1t2, attached as
//   x,y ~ v1,v2,v3;  z ~ v2;  t1 ~ v4,v5,z;  t2 ~ v1,v4,v5.
// Vertex order (and labels): v1 v2 v3 v4 v5 x y z t1 t2.
Graph build_c5_plus();

enum class PatternTier {
    Extracted,  // reproducible as an induced subgraph of build_c5_plus()
    Standard,   // standard literature definition
};

struct PatternEntry {
    std::string name;
    Graph graph;
    PatternTier tier;
    std::string note;  // construction provenance
};

const std::vector<PatternEntry>& pattern_catalog();
const PatternEntry* find_pattern(std::string_view name);  // nullptr when unknown
Graph named_pattern(std::string_view name);               // throws std::invalid_argument
std::vector<std::string> pattern_names();

// Injective map pattern vertex -> host vertex preserving both adjacency and
// non-adjacency. witness[i] is the host vertex for pattern vertex i.
using EmbeddingWitness = std::vector<int>;

// Exhaustive backtracking search; returns the witness whose host-vertex tuple
// is lexicographically smallest, or nullopt when no induced copy exists.
std::optional<EmbeddingWitness> contains_induced(const Graph& host, const Graph& pattern);

// Same search restricted to embeddings whose image includes `anchor`.
std::optional<EmbeddingWitness> contains_induced_touching(const Graph& host, const Graph& pattern,
                                                          int anchor);

// Specialized detectors (existence only). k >= 2 for paths, k >= 4 for holes;
// a hole is an induced cycle of exactly k vertices.
bool has_induced_path(const Graph& g, int k);
bool has_hole(const Graph& g, int k);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace bkv
