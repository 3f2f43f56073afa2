#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "bkv/check.hpp"
#include "bkv/classes.hpp"
#include "bkv/patterns.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace bkv;

TEST_CASE("the c5plus configuration matches its definition") {
    const Graph g = build_c5_plus();
    CHECK(g.order() == 10);
    CHECK(g.size() == 22);

    auto seq = degree_stats(g).sequence;
    std::sort(seq.rbegin(), seq.rend());
    CHECK(seq == std::vector<int>{5, 5, 5, 5, 4, 4, 4, 4, 4, 4});

    const int v2 = g.vertex_by_label("v2");
    CHECK(g.degree(v2) == 5);
    for (const char* l : {"v1", "v3", "x", "y", "z"})
        CHECK(g.adjacent(v2, g.vertex_by_label(l)));

    // attachment clauses, read off one by one
    const auto at = [&](const char* l) { return g.vertex_by_label(l); };
    CHECK(g.adjacent(at("t1"), at("z")));
    CHECK_FALSE(g.adjacent(at("t2"), at("x")));
    CHECK_FALSE(g.adjacent(at("t2"), at("y")));
    CHECK_FALSE(g.adjacent(at("t2"), at("z")));
    CHECK(g.adjacent(at("t2"), at("v1")));
    CHECK_FALSE(g.adjacent(at("t1"), at("v1")));
}

TEST_CASE("the seven extracted configurations have the derived shapes") {
    // name -> (order, size, degree sequence descending)
    const std::map<std::string, std::tuple<int, int, std::vector<int>>> expected = {
        {"kite+", {6, 7, {3, 3, 3, 2, 2, 1}}},  {"flag+", {6, 8, {4, 3, 3, 3, 2, 1}}},
        {"tripod", {6, 6, {3, 3, 3, 1, 1, 1}}}, {"crown", {5, 7, {4, 4, 2, 2, 2}}},
        {"hvn", {5, 8, {4, 4, 3, 3, 2}}},       {"k5-e", {5, 9, {4, 4, 4, 3, 3}}},
        {"butterfly", {5, 6, {4, 2, 2, 2, 2}}},
    };
    for (const auto& [name, shape] : expected) {
        const Graph g = named_pattern(name);
        CHECK(g.order() == std::get<0>(shape));
        CHECK(g.size() == std::get<1>(shape));
        auto seq = degree_stats(g).sequence;
        std::sort(seq.rbegin(), seq.rend());
        CHECK(seq == std::get<2>(shape));
    }
}

TEST_CASE("kite+ adjacency read off the defining clauses") {
    // v4,v5,t2 form a triangle, v1 sees v5,t2,v2, v2 sees z: check directly
    const Graph g = named_pattern("kite+");
    const auto at = [&](const char* l) { return g.vertex_by_label(l); };
    CHECK(g.adjacent(at("v4"), at("v5")));
    CHECK(g.adjacent(at("v4"), at("t2")));
    CHECK(g.adjacent(at("v5"), at("t2")));
    CHECK(g.adjacent(at("v1"), at("v5")));
    CHECK(g.adjacent(at("v1"), at("t2")));
    CHECK(g.adjacent(at("v1"), at("v2")));
    CHECK(g.adjacent(at("v2"), at("z")));
    CHECK_FALSE(g.adjacent(at("v4"), at("v1")));
}

TEST_CASE("k5-e misses exactly the v1v3 pair") {
    const Graph g = named_pattern("k5-e");
    CHECK(g.order() == 5);
    CHECK(g.size() == 9);
    const int a = g.vertex_by_label("v1");
    const int b = g.vertex_by_label("v3");
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            CHECK(g.adjacent(u, v) == !((u == a && v == b) || (u == b && v == a)));
}

TEST_CASE("external-standard entries match their literature definitions") {
    CHECK(is_isomorphic(named_pattern("diamond"),
                        Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}})));
    CHECK(is_isomorphic(named_pattern("gem"), join(make_complete(1), make_path(4))));
    CHECK(is_isomorphic(named_pattern("house"), complement(make_path(5))));
    const Graph bull = named_pattern("bull");
    CHECK(bull.order() == 5);
    CHECK(bull.size() == 5);
    auto seq = degree_stats(bull).sequence;
    std::sort(seq.rbegin(), seq.rend());
    CHECK(seq == std::vector<int>{3, 3, 2, 1, 1});
    CHECK(named_pattern("k7") == make_complete(7));
}

TEST_CASE("catalog lookups normalize names and reject unknowns") {
    CHECK(find_pattern("K5-E") != nullptr);
    CHECK(find_pattern("HVN") != nullptr);
    CHECK(find_pattern("C5PLUS") != nullptr);
    CHECK(find_pattern("nosuch") == nullptr);
    CHECK_THROWS_AS(named_pattern("nosuch"), std::invalid_argument);
    CHECK(pattern_names().size() == 13);
}

TEST_CASE("every extracted entry embeds into c5plus, witnesses validate") {
    const Graph host = build_c5_plus();
    for (const auto& e : pattern_catalog()) {
        if (e.tier != PatternTier::Extracted) continue;
        const auto w = contains_induced(host, e.graph);
        REQUIRE_MESSAGE(w.has_value(), e.name);
        CHECK(is_valid_embedding(host, e.graph, *w));
    }
}

TEST_CASE("diamond, bull and P5 embed into c5plus (subclass containments)") {
    const Graph host = build_c5_plus();
    for (const char* name : {"diamond", "bull"}) {
        const auto w = contains_induced(host, named_pattern(name));
        REQUIRE_MESSAGE(w.has_value(), name);
        CHECK(is_valid_embedding(host, named_pattern(name), *w));
    }
    CHECK(contains_induced(host, make_path(5)).has_value());
}

TEST_CASE("gem and house are provably not induced in c5plus") {
    // house contains an induced C4 while c5plus is C4-free; a gem needs an
    // induced P4 inside a closed neighborhood and no vertex of c5plus has one.
    // Both directions are confirmed by brute force over all vertex subsets.
    const Graph host = build_c5_plus();
    CHECK_FALSE(contains_induced(host, named_pattern("gem")).has_value());
    CHECK_FALSE(contains_induced(host, named_pattern("house")).has_value());
    CHECK_FALSE(oracle::contains_induced_brute(host, named_pattern("gem")));
    CHECK_FALSE(oracle::contains_induced_brute(host, named_pattern("house")));
    CHECK(contains_induced(named_pattern("house"), make_cycle(4)).has_value());
}

TEST_CASE("c5plus is C4-free and P6-free, brute-force confirmed") {
    const Graph host = build_c5_plus();
    CHECK_FALSE(has_hole(host, 4));
    CHECK_FALSE(has_induced_path(host, 6));
    CHECK_FALSE(oracle::contains_induced_brute(host, make_cycle(4)));
    CHECK_FALSE(oracle::contains_induced_brute(host, make_path(6)));
}

TEST_CASE("embedding search facts on small hosts") {
    const Graph host = build_c5_plus();
    const auto w = contains_induced(host, make_cycle(5));
    REQUIRE(w.has_value());
    CHECK(*w == EmbeddingWitness{0, 1, 2, 3, 4});  // v1..v5, the defining hole

    CHECK_FALSE(contains_induced(make_complete(7), make_complete(8)).has_value());
    CHECK_THROWS_AS(contains_induced(host, Graph()), std::invalid_argument);
}

TEST_CASE("a graph embeds into itself with the identity witness") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const auto w = contains_induced(g, g);
        REQUIRE(w.has_value());
        for (int v = 0; v < n; ++v) CHECK((*w)[static_cast<std::size_t>(v)] == v);
    }
}

TEST_CASE("witness choice is the lexicographically smallest host tuple") {
    // two disjoint triangles: the first triangle wins
    const Graph host = disjoint_union(make_complete(3), make_complete(3));
    const auto w = contains_induced(host, make_complete(3));
    REQUIRE(w.has_value());
    CHECK(*w == EmbeddingWitness{0, 1, 2});
}

TEST_CASE("monotonicity: patterns found in an induced subgraph appear in the host") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 5 + static_cast<int>(rng() % 5);
        const Graph g = oracle::random_graph(n, 0.45, rng);
        VertexList keep;
        for (int v = 0; v < n; ++v)
            if (rng() & 1) keep.push_back(v);
        if (keep.size() < 3) continue;
        const Graph h = induced_subgraph(g, keep);
        const Graph pat = oracle::random_graph(3, 0.5, rng);
        if (contains_induced(h, pat)) CHECK(contains_induced(g, pat).has_value());
    }
}

TEST_CASE("specialized path and hole detectors on the named examples") {
    CHECK(has_hole(make_cycle(5), 5));
    CHECK_FALSE(has_hole(make_cycle(5), 4));
    CHECK_FALSE(has_induced_path(make_complete(7), 3));
    CHECK(has_induced_path(make_path(6), 6));
    CHECK_THROWS_AS(has_hole(make_cycle(5), 3), std::invalid_argument);
    CHECK_THROWS_AS(has_induced_path(make_path(3), 1), std::invalid_argument);
}

TEST_CASE("specialized detectors agree with the generic engine on random graphs") {
    std::mt19937_64 rng(31);
    const Graph p6 = make_path(6);
    const Graph c4 = make_cycle(4);
    const Graph c5 = make_cycle(5);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6);
        const Graph g = oracle::random_graph(n, 0.2 + 0.1 * static_cast<double>(rng() % 6), rng);
        CHECK(has_induced_path(g, 6) == contains_induced(g, p6).has_value());
        CHECK(has_hole(g, 4) == contains_induced(g, c4).has_value());
        CHECK(has_hole(g, 5) == contains_induced(g, c5).has_value());
    }
}

TEST_CASE("generic engine agrees with the subset brute force on small graphs") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 80; ++trial) {
        const Graph g = oracle::random_graph(6, 0.5, rng);
        const Graph pat = oracle::random_graph(2 + static_cast<int>(rng() % 3), 0.5, rng);
        CHECK(contains_induced(g, pat).has_value() == oracle::contains_induced_brute(g, pat));
    }
}

TEST_CASE("anchored search only reports embeddings through the anchor") {
    const Graph host = disjoint_union(make_complete(3), make_cycle(4));
    const Graph tri = make_complete(3);
    for (int anchor = 0; anchor < 3; ++anchor) {
        const auto w = contains_induced_touching(host, tri, anchor);
        REQUIRE(w.has_value());
        CHECK(std::find(w->begin(), w->end(), anchor) != w->end());
        CHECK(is_valid_embedding(host, tri, *w));
    }
    for (int anchor = 3; anchor < 7; ++anchor)
        CHECK_FALSE(contains_induced_touching(host, tri, anchor).has_value());
}

TEST_CASE("class membership returns validating witnesses") {
    const ClassSpec spec = ClassSpec::p6c4c5plus();
    CHECK(is_class_member(make_cycle(5), spec).member);

    const MembershipResult r = is_class_member(make_cycle(4), spec);
    CHECK_FALSE(r.member);
    CHECK(r.violated == "C4");
    CHECK(r.witness == EmbeddingWitness{0, 1, 2, 3});

    const MembershipResult rp = is_class_member(make_path(7), spec);
    CHECK_FALSE(rp.member);
    CHECK(rp.violated == "P6");

    CHECK_FALSE(is_class_member(build_c5_plus(), spec).member);
    CHECK(is_class_member(build_c5_plus(), ClassSpec::p6c4()).member);
    CHECK_FALSE(is_class_member(make_complete(9), ClassSpec::p6c4k7()).member);
}

TEST_CASE("class spec selectors resolve") {
    CHECK(ClassSpec::by_name("p6c4").forbidden.size() == 2);
    CHECK(ClassSpec::by_name("p6c4k7").forbidden.size() == 3);
    CHECK(ClassSpec::by_name("p6c4c5plus").forbids_p6_and_c4());
    CHECK_THROWS_AS(ClassSpec::by_name("bogus"), std::invalid_argument);
}
