#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "grsc/letter_word.hpp"

namespace grsc {

// Combinatorial planar disc complex: inner faces as dart circuits plus the
// outer boundary circuit. Every dart lies in exactly one circuit, all circuits
// keep their region on the left, so the vertex rotation is phi o alpha.
// Edge e owns darts 2e (tail->head) and 2e+1 (head->tail). Letters are
// optional; dart 2e reads the stored letter, 2e+1 its inverse.
struct Diagram {
    struct Edge {
        int tail = 0;
        int head = 0;
    };
    int n_vertices = 0;
    std::vector<Edge> edges;
    std::vector<int> letter;  // per edge, letter code of dart 2e; -1 unlabelled
    std::vector<std::vector<int>> faces;  // inner face dart circuits
    std::vector<int> boundary;            // outer circuit darts
    std::vector<int> side_starts;  // indices into boundary where sides begin; empty = unsided
    Alphabet alphabet;             // referenced by letter codes when labelled

    int n_edges() const { return int(edges.size()); }
    int n_darts() const { return int(edges.size()) * 2; }
    int dart_tail(int d) const { return d % 2 == 0 ? edges[d / 2].tail : edges[d / 2].head; }
    int dart_head(int d) const { return d % 2 == 0 ? edges[d / 2].head : edges[d / 2].tail; }
    static int dart_reverse(int d) { return d ^ 1; }
    bool labelled(int d) const { return letter[d / 2] >= 0; }
    Letter dart_letter(int d) const {
        int c = letter[d / 2] ^ (d % 2);
        return Letter{uint16_t(c / 2), c % 2 == 1};
    }
    int n_sides() const { return int(side_starts.size()); }
    // darts of side i in boundary order
    std::vector<int> side(int i) const;
};

// Maximal edge path through valence-2 vertices; a closed cycle of valence-2
// vertices counts as a single arc with no endpoints.
struct DiagramArc {
    std::vector<int> darts;  // one orientation of the arc
    bool exterior = false;
    bool closed = false;
};

struct DiagramAnalysis {
    std::vector<int> valence;            // edge ends per vertex
    std::vector<char> on_boundary;       // vertex flags
    std::vector<char> edge_exterior;     // edge has a dart on the outer circuit
    std::vector<DiagramArc> arcs;
    std::vector<int> arc_of_edge;        // arc index per edge
    std::vector<std::vector<int>> face_arcs;  // distinct arc indices per face
    std::vector<int> interior_degree;    // i(face)
    std::vector<int> exterior_degree;    // e(face)
    std::vector<char> face_interior;     // all arcs interior
    bool connected = false;
    bool rotation_ok = false;  // circuits define a consistent vertex rotation
    bool euler_ok = false;     // V - E + F_inner = 1
};

// Throws std::invalid_argument on malformed circuits (bad dart ids, broken
// chaining, darts missing or repeated across circuits).
DiagramAnalysis analyze(const Diagram& d);

struct ValidationReport {
    std::vector<std::string> violations;  // planarity, Euler, incidence
    bool ok = false;                      // no violations
    bool three_seven = false;             // (3,7) conditions hold
    // set when sides are present: every e = 1 boundary face whose exterior
    // arc stays inside a single side has interior degree >= 4, and each side
    // is a nonempty reduced path
    std::optional<bool> ngon = std::nullopt;
};

ValidationReport validate_diagram(const Diagram& d);

// side index covering each boundary position (all zero when unsided)
std::vector<int> side_of_position(const Diagram& d);

// puts a midpoint on an edge: the near half keeps the edge id, the far half
// is appended as a new edge, circuits and side offsets follow; returns the
// new vertex. Any letter on the edge is dropped.
int subdivide_edge(Diagram& d, int edge);

// (interior, exterior) arc counts of one face; throws on unknown face
std::pair<int, int> degrees(const Diagram& d, int face);

// boundary circuit visits no vertex twice
bool is_simple(const Diagram& d);

// word along the boundary circuit; throws if any boundary dart is unlabelled
Word boundary_word(const Diagram& d);

Diagram parse_diagram(std::istream& in);
Diagram parse_diagram_string(const std::string& text);
std::string serialize_diagram(const Diagram& d);
Diagram load_diagram_file(const std::string& path);

}  // namespace grsc
