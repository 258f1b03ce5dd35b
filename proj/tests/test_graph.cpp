#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "grsc/graph.hpp"
#include "grsc/orbits.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace grsc;

TEST_CASE("single edge parses to two darts") {
    LabelledGraph g = parse_graph("alphabet a\nvertices 2\nedge 0 1 a\n");
    CHECK(g.n_vertices == 2);
    CHECK(g.edges.size() == 1);
    CHECK(g.n_darts() == 2);
    CHECK(g.dart_tail(0) == 0);
    CHECK(g.dart_head(0) == 1);
    CHECK(g.dart_tail(1) == 1);
    CHECK(g.dart_letter(1).negative);
}

TEST_CASE("fixture fix1 parses with 14 darts") {
    LabelledGraph g = fixture_graph("fix1.lgf");
    CHECK(g.n_vertices == 7);
    CHECK(g.n_darts() == 14);
    CHECK(validate_reduced(g).empty());
}

TEST_CASE("vertex index out of range is a parse error") {
    CHECK_THROWS(parse_graph("alphabet a\nvertices 2\nedge 0 5 a\n"));
}

TEST_CASE("repeated outgoing letter is a violation") {
    LabelledGraph g = parse_graph("alphabet a\nvertices 3\nedge 0 1 a\nedge 0 2 a\n");
    auto v = validate_reduced(g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].vertex == 0);
    CHECK(v[0].letter.code() == Letter{0, false}.code());
}

TEST_CASE("two edges arriving with one letter is a violation") {
    LabelledGraph g = parse_graph("alphabet a\nvertices 3\nedge 1 0 a\nedge 2 0 a\n");
    CHECK(!validate_reduced(g).empty());
}

TEST_CASE("fix6 is reduced") {
    CHECK(validate_reduced(fixture_graph("fix6.lgf")).empty());
}

TEST_CASE("dart involution") {
    for (const char* name : {"fix1.lgf", "fix2.lgf", "fix4.lgf", "fix5.lgf", "fix6.lgf"}) {
        LabelledGraph g = fixture_graph(name);
        for (int d = 0; d < g.n_darts(); ++d) {
            int r = LabelledGraph::dart_reverse(d);
            CHECK(LabelledGraph::dart_reverse(r) == d);
            CHECK(g.dart_tail(d) == g.dart_head(r));
            CHECK(g.dart_letter(d).inverse().code() == g.dart_letter(r).code());
        }
    }
}

TEST_CASE("component counts") {
    CHECK(components(fixture_graph("fix1.lgf")).count() == 1);
    CHECK(components(fixture_graph("fix3.lgf")).count() == 2);
    LabelledGraph empty;
    CHECK(components(empty).count() == 0);
}

TEST_CASE("isolated vertices form components") {
    LabelledGraph g = parse_graph("alphabet a\nvertices 3\nedge 0 1 a\n");
    Components c = components(g);
    CHECK(c.count() == 2);
    CHECK(c.comp_of[2] != c.comp_of[0]);
}

TEST_CASE("orbit structure of the fixtures") {
    {
        LabelledGraph g = fixture_graph("fix1.lgf");
        OrbitTable t = aut_orbits(g);
        CHECK(t.orbits().size() == 1);
    }
    {
        LabelledGraph g = fixture_graph("fix3.lgf");
        OrbitTable t = aut_orbits(g);
        CHECK(t.orbits().size() == 1);  // rotations plus the component swap
    }
    {
        LabelledGraph g = fixture_graph("fix6.lgf");
        OrbitTable t = aut_orbits(g);
        CHECK(int(t.orbits().size()) == g.n_vertices);  // the pendant edge breaks all symmetry
    }
}

TEST_CASE("orbits agree with the permutation brute force") {
    for (const char* name : {"fix1.lgf", "fix2.lgf", "fix4.lgf", "fix6.lgf"}) {
        LabelledGraph g = fixture_graph(name);
        OrbitTable t = aut_orbits(g);
        auto orbits = oracle::vertex_orbits(g, oracle::automorphisms(g));
        for (int u = 0; u < g.n_vertices; ++u)
            for (int v = 0; v < g.n_vertices; ++v)
                CHECK(t.same_orbit(u, v) == (orbits[u] == orbits[v]));
    }
}

TEST_CASE("orbit relation is an equivalence and witnesses preserve darts") {
    LabelledGraph g = fixture_graph("fix3.lgf");
    OrbitTable t = aut_orbits(g);
    for (int u = 0; u < g.n_vertices; ++u) CHECK(t.same_orbit(u, u));
    for (int u = 0; u < g.n_vertices; ++u)
        for (int v = 0; v < g.n_vertices; ++v) CHECK(t.same_orbit(u, v) == t.same_orbit(v, u));
    for (const auto& w : t.witnesses) {
        for (const auto& e : g.edges) {
            if (w.map[e.tail] < 0) continue;
            REQUIRE(w.map[e.head] >= 0);
            bool found = false;
            for (const auto& f : g.edges)
                if (f.tail == w.map[e.tail] && f.head == w.map[e.head] &&
                    f.letter.code() == e.letter.code())
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("aut order of the fixtures") {
    {
        LabelledGraph g = fixture_graph("fix1.lgf");
        Components c = components(g);
        OrbitTable t = aut_orbits(g);
        CHECK(aut_order(g, t, c, 0) == 7);
    }
    {
        LabelledGraph g = fixture_graph("fix5.lgf");
        Components c = components(g);
        OrbitTable t = aut_orbits(g);
        CHECK(aut_order(g, t, c, 0) == 1);
        CHECK(aut_order(g, t, c, 1) == 1);
    }
}

TEST_CASE("serialize then parse is the identity") {
    for (const char* name : {"fix1.lgf", "fix2.lgf", "fix5.lgf", "fix6.lgf"}) {
        LabelledGraph g = fixture_graph(name);
        LabelledGraph h = parse_graph(serialize_graph(g));
        CHECK(g.n_vertices == h.n_vertices);
        REQUIRE(g.edges.size() == h.edges.size());
        for (size_t i = 0; i < g.edges.size(); ++i) {
            CHECK(g.edges[i].tail == h.edges[i].tail);
            CHECK(g.edges[i].head == h.edges[i].head);
            CHECK(g.edges[i].letter.code() == h.edges[i].letter.code());
        }
    }
}

TEST_CASE("word parsing and formatting round trip") {
    LabelledGraph g = fixture_graph("fix2.lgf");
    Word w = wd(g, "a b -a -b c d -c -d");
    CHECK(w.size() == 8);
    CHECK(format_word(g.alphabet, w) == "a b -a -b c d -c -d");
    CHECK(free_reduce(wd(g, "a -a")).empty());
    CHECK(free_reduce(wd(g, "a b -b -a")).empty());
    CHECK(format_word(g.alphabet, free_reduce(wd(g, "a b -a"))) == "a b -a");
}

TEST_CASE("walks agree with the edge-scanning oracle") {
    LabelledGraph g = fixture_graph("fix4.lgf");
    Word w = wd(g, "a b a b");
    CHECK(oracle::readable_starts(g, w) == std::vector<int>{0, 2});
    for (int v = 0; v < g.n_vertices; ++v)
        CHECK(g.readable_from(v, w) == (oracle::follow_word(g, v, w) >= 0));
    auto darts = g.walk(0, w);
    REQUIRE(darts.has_value());
    CHECK(darts->size() == 4);
    CHECK(g.dart_head(darts->back()) == oracle::follow_word(g, 0, w));
}
