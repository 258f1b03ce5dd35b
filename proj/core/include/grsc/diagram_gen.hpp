#pragma once

#include <functional>
#include <vector>

#include "grsc/diagram.hpp"

namespace grsc {

// Exhaustive corpus of disc diagrams at arc resolution: one edge per arc,
// every vertex of valence at least 3, every interior face with at least 7
// arcs, between 2 and max_faces faces. Unlabelled, no sides. Deduplicated up
// to orientation preserving or reversing isomorphism fixing the outer face.
// Deterministic order.
std::vector<Diagram> generate_maps(int max_faces);

// Every combinatorial n-gon with at most max_faces faces, up to isomorphism
// and rotation of the side ordering: corner vertices are planted on the arc
// skeletons in all admissible ways, arcs carrying the corners are subdivided,
// and the result is handed to the sink fully assembled (sides set, unlabelled,
// already satisfying the polygon conditions). Includes the one face polygon.
void generate_polygons(int n, int max_faces, const std::function<void(const Diagram&)>& sink);

// The simple non-degenerate combinatorial quadrangles with at most max_faces
// faces. Every valid quadrangle that is non-degenerate arises from exactly one
// arc skeleton with exactly four constrained pocket faces, so this is far
// cheaper than filtering generate_polygons(4, ...). Reducibility is not
// filtered here; callers wanting irreducible quadrangles filter afterwards.
void generate_quadrangles(int max_faces, const std::function<void(const Diagram&)>& sink);

}
