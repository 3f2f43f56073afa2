#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bkv/graph.hpp"
#include "bkv/patterns.hpp"

namespace bkv {

// One forbidden configuration of a hereditary class. Path and hole entries are
// detected with the specialized searches; everything else runs through the
// generic induced-embedding engine.
struct ForbiddenPattern {
    enum class Kind { InducedPath, Hole, General };

    std::string name;
    Kind kind = Kind::General;
    int k = 0;  // for paths/holes
    Graph graph;

    static ForbiddenPattern path(int k);
    static ForbiddenPattern hole(int k);
    static ForbiddenPattern from_catalog(std::string_view key);  // throws on unknown key
    static ForbiddenPattern inline_graph(std::string name, Graph g);
};

struct ClassSpec {
    std::string name;
    std::vector<ForbiddenPattern> forbidden;  // checked in order

    bool forbids_p6_and_c4() const;

    static ClassSpec p6c4();
    static ClassSpec p6c4k7();
    static ClassSpec p6c4c5plus();
    // "p6c4" | "p6c4k7" | "p6c4c5plus" | "custom:<file>"; a custom file holds one
    // catalog key or graph6 record per line ('#' comments allowed).
    static ClassSpec by_name(const std::string& selector);
    static ClassSpec from_file(const std::string& path);
};

struct MembershipResult {
    bool member = true;
    std::string violated;       // pattern name when member == false
    EmbeddingWitness witness;   // validated induced embedding of the violated pattern
};

MembershipResult is_class_member(const Graph& g, const ClassSpec& spec);

// Restricted variant used by the incremental sampler: only embeddings whose
// image contains `anchor` are searched.
MembershipResult is_class_member_touching(const Graph& g, const ClassSpec& spec, int anchor);

}  // namespace bkv
