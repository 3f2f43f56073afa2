#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bkv/classes.hpp"
#include "bkv/graph.hpp"

namespace bkv {

struct SampleOptions {
    ClassSpec spec = ClassSpec::p6c4c5plus();
    int n_min = 4;
    int n_max = 16;
    int count = 0;
    std::uint64_t seed = 1;
    // minimum maximum-degree requirement; when set the sampler grows an
    // (n-1)-vertex member and attaches a dominating vertex
    std::optional<int> min_delta;
    int attempts_per_vertex = 64;
    long attempts_per_graph = 400;
};

struct SampleResult {
    std::vector<Graph> graphs;
    bool exhausted = false;  // budget ran out before `count` graphs were emitted
    std::string warning;
};

// Incremental growth with rejection: each new vertex draws a random neighbor
// set and is rejected when a forbidden pattern touching it appears. Emitted
// graphs are re-validated in full; deterministic for a fixed seed.
SampleResult sample_class_members(const SampleOptions& options);

}  // namespace bkv
