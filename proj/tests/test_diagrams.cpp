#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "grsc/cancellation.hpp"
#include "grsc/diagram.hpp"
#include "grsc/diagram_gen.hpp"
#include "grsc/diagram_ops.hpp"
#include "grsc/fill.hpp"
#include "grsc/orbits.hpp"
#include "grsc/strebel.hpp"
#include "helpers.hpp"

using namespace grsc;

TEST_CASE("triangle fixture parses, validates, classifies") {
    Diagram d = load_diagram_file(fixture_path("triangle1.dgf"));
    CHECK(d.n_vertices == 3);
    CHECK(d.n_edges() == 3);
    CHECK(d.n_sides() == 3);
    ValidationReport r = validate_diagram(d);
    CHECK(r.ok);
    CHECK(r.three_seven);
    REQUIRE(r.ngon.has_value());
    CHECK(*r.ngon);
    CHECK(is_simple(d));
    CHECK(classify_strebel(d) == StrebelForm::I2);
}

TEST_CASE("serialize then parse preserves the structure") {
    Diagram d = load_diagram_file(fixture_path("triangle1.dgf"));
    Diagram e = parse_diagram_string(serialize_diagram(d));
    CHECK(e.n_vertices == d.n_vertices);
    CHECK(e.n_edges() == d.n_edges());
    CHECK(e.faces == d.faces);
    CHECK(e.boundary == d.boundary);
    CHECK(e.side_starts == d.side_starts);
}

TEST_CASE("analysis of the one-face triangle") {
    Diagram d = load_diagram_file(fixture_path("triangle1.dgf"));
    DiagramAnalysis a = analyze(d);
    CHECK(a.connected);
    CHECK(a.rotation_ok);
    CHECK(a.euler_ok);
    REQUIRE(a.arcs.size() == 1);
    CHECK(a.arcs[0].exterior);
    CHECK(a.arcs[0].closed);
    CHECK(a.interior_degree[0] == 0);
    CHECK(a.exterior_degree[0] == 1);
    auto [i, e] = degrees(d, 0);
    CHECK(i == 0);
    CHECK(e == 1);
}

TEST_CASE("subdividing an edge keeps the diagram valid") {
    Diagram d = load_diagram_file(fixture_path("triangle1.dgf"));
    int v = subdivide_edge(d, 0);
    CHECK(v == 3);
    CHECK(d.n_vertices == 4);
    CHECK(d.n_edges() == 4);
    ValidationReport r = validate_diagram(d);
    CHECK(r.ok);
    CHECK(d.faces[0].size() == 4);
    CHECK(d.boundary.size() == 4);
}

TEST_CASE("bigon shapes are ladders") {
    int n = 0;
    generate_polygons(2, 5, [&](const Diagram& d) {
        ++n;
        ValidationReport r = validate_diagram(d);
        CHECK(r.ok);
        CHECK(r.three_seven);
        CHECK(*r.ngon);
        CHECK(classify_strebel(d) == StrebelForm::I1);
    });
    CHECK(n >= 3);  // lollipop, circle, theta at least
}

TEST_CASE("small triangles classify without surprises") {
    std::map<StrebelForm, int> seen;
    generate_polygons(3, 6, [&](const Diagram& d) {
        ValidationReport r = validate_diagram(d);
        CHECK(r.ok);
        CHECK(*r.ngon);
        seen[classify_strebel(d)]++;
    });
    CHECK(seen.count(StrebelForm::I1) == 0);  // triangles are never pure bigon ladders
    CHECK(seen[StrebelForm::I2] > 0);
    CHECK(seen[StrebelForm::I3] > 0);
}

TEST_CASE("classification rejects non-polygons") {
    Diagram d = load_diagram_file(fixture_path("triangle1.dgf"));
    d.side_starts.clear();
    CHECK_THROWS_AS(classify_strebel(d), std::invalid_argument);
}

TEST_CASE("generated maps are sound") {
    int count = 0;
    for (const Diagram& d : generate_maps(5)) {
        ++count;
        DiagramAnalysis a = analyze(d);
        CHECK(a.connected);
        CHECK(a.rotation_ok);
        CHECK(a.euler_ok);
        CHECK(is_simple(d));
        for (size_t f = 0; f < d.faces.size(); ++f)
            if (a.face_interior[f]) CHECK(d.faces[f].size() >= 7);
        for (int v = 0; v < d.n_vertices; ++v) CHECK(a.valence[v] >= 3);
    }
    CHECK(count == 69);  // one theta, then 3, 11, 54 per face count
}

TEST_CASE("generated quadrangles are simple, valid, non-degenerate") {
    int n = 0;
    generate_quadrangles(6, [&](const Diagram& d) {
        ++n;
        CHECK(d.n_sides() == 4);
        ValidationReport r = validate_diagram(d);
        CHECK(r.ok);
        CHECK(r.three_seven);
        CHECK(*r.ngon);
        CHECK(is_simple(d));
        CHECK(!is_degenerate(d).has_value());
    });
    CHECK(n > 0);
}

TEST_CASE("crossing paths on small quadrangles") {
    generate_quadrangles(6, [&](const Diagram& d) {
        if (!reduce_polygon(d).empty()) return;  // only irreducible quads carry the law
        CrossingPath p = quad_crossing_path(d);
        CHECK(p.arcs.size() <= 6);
        CHECK(!p.arcs.empty());
        DiagramAnalysis a = analyze(d);
        for (int arc : p.arcs) {
            REQUIRE(arc >= 0);
            REQUIRE(arc < int(a.arcs.size()));
            CHECK(!a.arcs[arc].exterior);
        }
    });
}

TEST_CASE("crossing path wants a quadrangle") {
    Diagram d = load_diagram_file(fixture_path("triangle1.dgf"));
    CHECK_THROWS_AS(quad_crossing_path(d), std::invalid_argument);
}

TEST_CASE("the one-face triangle is degenerate but irreducible") {
    Diagram d = load_diagram_file(fixture_path("triangle1.dgf"));
    CHECK(is_degenerate(d).has_value());
    CHECK(reduce_polygon(d).empty());
}

TEST_CASE("filling relator powers") {
    LabelledGraph g = fixture_graph("fix1.lgf");
    Presentation p = presentation(g);
    {
        Diagram d = fill_word(p, wd(g, "a a a a a a a"));
        CHECK(d.faces.size() == 1);
        CHECK(format_word(d.alphabet, boundary_word(d)) == "a a a a a a a");
        DiagramAnalysis a = analyze(d);
        CHECK(a.euler_ok);
        CHECK(a.connected);
    }
    {
        Diagram d = fill_word(p, Word(14, Letter{0, false}));
        CHECK(d.faces.size() == 2);
        CHECK(boundary_word(d).size() == 14);
    }
    {
        Diagram d = fill_word(p, {});
        CHECK(d.faces.empty());
        CHECK(d.n_vertices == 1);
        CHECK(d.boundary.empty());
    }
}

TEST_CASE("filling the commutator-style relator") {
    LabelledGraph g = fixture_graph("fix2.lgf");
    Presentation p = presentation(g);
    Word w = wd(g, "a b -a -b c d -c -d");
    Diagram d = fill_word(p, w);
    CHECK(d.faces.size() == 1);
    CHECK(format_word(d.alphabet, boundary_word(d)) == format_word(g.alphabet, w));
    ValidationReport r = validate_diagram(d);
    CHECK(r.ok);
}

TEST_CASE("filling a conjugated relator keeps the exact boundary") {
    LabelledGraph g = fixture_graph("fix2.lgf");
    Presentation p = presentation(g);
    Word w = wd(g, "c a b -a -b c d -c -d -c");
    Diagram d = fill_word(p, w);
    CHECK(format_word(d.alphabet, boundary_word(d)) == format_word(g.alphabet, w));
    DiagramAnalysis a = analyze(d);
    CHECK(a.euler_ok);
}

TEST_CASE("non-trivial words cannot be filled") {
    LabelledGraph g = fixture_graph("fix1.lgf");
    Presentation p = presentation(g);
    CHECK_THROWS_AS(fill_word(p, wd(g, "a a")), std::invalid_argument);
}

TEST_CASE("interior arc piece audit") {
    // a two-face diagram whose single interior arc reads one letter a
    auto theta_reading_a = [](const Alphabet& alphabet) {
        Diagram d;
        d.alphabet = alphabet;
        d.n_vertices = 2;
        d.edges = {{0, 1}, {1, 0}, {0, 1}};
        d.letter = {0, -1, -1};  // only the interior edge is labelled
        d.faces = {{0, 2}, {1, 4}};
        d.boundary = {3, 5};
        return d;
    };
    {
        // in the distinct-label two-cycle graph, "a" is a piece
        LabelledGraph g = fixture_graph("fix5.lgf");
        OrbitTable t = aut_orbits(g);
        CHECK(non_piece_arcs(theta_reading_a(g.alphabet), g, t).empty());
    }
    {
        // in the rotation cycle every start is equivalent, so "a" is not
        LabelledGraph g = fixture_graph("fix1.lgf");
        OrbitTable t = aut_orbits(g);
        CHECK(non_piece_arcs(theta_reading_a(g.alphabet), g, t).size() == 1);
    }
}
