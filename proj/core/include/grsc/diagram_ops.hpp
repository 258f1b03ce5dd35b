#pragma once

#include <optional>
#include <vector>

#include "grsc/diagram.hpp"

namespace grsc {

// junction whose two incident sides merge into one while the diagram stays a
// combinatorial polygon; vertex is the shared endpoint (end of side `side`)
struct DegenerateVertex {
    int side = -1;
    int vertex = -1;
};

// first degenerate junction in side order, if any; throws when d is not a
// combinatorial polygon
std::optional<DegenerateVertex> is_degenerate(const Diagram& d);

struct Reduction {
    enum class Kind { vertex, face };
    Kind kind = Kind::vertex;
    int vertex = -1;          // cut vertex for Kind::vertex
    int face = -1;            // split face for Kind::face
    int arc_a = -1, arc_b = -1;  // its two exterior arcs for Kind::face
    Diagram part1, part2;
};

// every available vertex reduction (cut vertex lying in exactly two boundary
// faces) and face reduction (boundary face whose removal along two of its
// exterior arcs separates the diagram, both halves holding a distinguished
// vertex); empty result means irreducible. Throws when d is not a
// combinatorial polygon.
std::vector<Reduction> reduce_polygon(const Diagram& d);

struct CrossingPath {
    int side_a = 0;
    int side_b = 2;
    std::vector<int> arcs;  // arc indices into analyze(d).arcs
};

// shortest chain of interior arcs joining two opposite sides of a simple,
// non-degenerate, irreducible quadrangle. Throws std::invalid_argument on a
// precondition failure and std::runtime_error if no chain of at most 6 arcs
// exists (which would contradict the classification this search relies on).
CrossingPath quad_crossing_path(const Diagram& d);

}  // namespace grsc
