#pragma once

#include <vector>

#include "grsc/graph.hpp"

namespace grsc {

// Orbit structure of vertices under label-preserving component isomorphisms.
// Vertices u, v share an orbit iff some label-preserving isomorphism from
// component(u) onto component(v) maps u to v. Such a map, if it exists, is the
// unique label-following extension of u -> v.
struct OrbitTable {
    std::vector<int> orbit_of;  // per vertex; id = least member vertex
    // one witness bijection per non-representative vertex: maps every vertex of
    // component(rep) to a vertex of component(v), carrying rep to v; -1 outside
    // the domain component
    struct Witness {
        int from = 0;  // orbit representative
        int to = 0;
        std::vector<int> map;
    };
    std::vector<Witness> witnesses;

    bool same_orbit(int u, int v) const { return orbit_of[u] == orbit_of[v]; }
    std::vector<std::vector<int>> orbits() const;
};

// Attempts the unique label-following extension of u -> v; returns the total
// vertex map of component(u) on success.
std::optional<std::vector<int>> extend_map(const LabelledGraph& g, int u, int v);

// u ~ v iff extend_map succeeds in both directions (one-sided success can be
// non-bijective, e.g. a segment mapping into a longer segment).
bool vertices_isomorphic(const LabelledGraph& g, int u, int v);

// precondition: validate_reduced(g) is empty; throws std::invalid_argument otherwise
OrbitTable aut_orbits(const LabelledGraph& g);

// order of the label-preserving automorphism group of the component containing
// base (= orbit size of base inside its own component)
int aut_order(const LabelledGraph& g, const OrbitTable& t, const Components& c, int base);

}  // namespace grsc
