#pragma once

#include <string>

#include "bkv/graph.hpp"
#include "bkv/patterns.hpp"
#include "bkv/solve.hpp"

// Certificate re-validation. These are dumb pairwise / edge scans kept apart
// from the solver and search code paths on purpose.
namespace bkv {

bool is_proper_coloring(const Graph& g, const Coloring& c, std::string* why = nullptr);
bool is_proper_partial(const Graph& g, const Coloring& c, std::string* why = nullptr);
bool is_clique(const Graph& g, const VertexList& vs);
bool is_valid_embedding(const Graph& host, const Graph& pattern, const EmbeddingWitness& w);

}  // namespace bkv
