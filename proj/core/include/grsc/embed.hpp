#pragma once

#include <vector>

#include "grsc/ball.hpp"
#include "grsc/graph.hpp"

namespace grsc {

// Image of one graph component in a Cayley ball: the label-following extension
// of base_vertex -> base_element, restricted to vertices reachable from the
// base without leaving the ball.
struct EmbeddedComponent {
    int comp = 0;
    int base_vertex = 0;
    int base_element = 0;
    std::vector<int> elt_of_vertex;  // per graph vertex; -1 unmapped
    std::vector<int> image;          // sorted ball element ids
    std::vector<char> in_image;      // ball-sized membership flags
    bool injective = true;
    bool consistent = true;  // no dart mapped to conflicting ball edges
    bool total = false;      // every component vertex received an element

    bool contains(int elt) const { return in_image[elt]; }
};

EmbeddedComponent embed_component(const LabelledGraph& g, const Components& comps, int comp,
                                  int base_vertex, int base_element, const Ball& b);

struct EmbedCheckReport {
    int isometry_pairs = 0;
    int isometry_censored = 0;
    int isometry_violations = 0;
    int convexity_pairs = 0;
    int convexity_censored = 0;
    int convexity_violations = 0;
    bool geodesic_capped = false;
};

// isometry: ball distance equals intra-component graph distance on certified
// pairs; convexity: certified geodesics between image points stay in the image
EmbedCheckReport check_embedding(const LabelledGraph& g, const EmbeddedComponent& a,
                                 const Ball& b, size_t geodesic_cap = 64);

// g carries the image into itself wherever the product is forced to stay in
// the ball: for every a in A with |a| <= r - |g|, g*a lies in A
bool stabilizes_in_ball(const Ball& b, const EmbeddedComponent& a, int g_elt);

// number of ball elements stabilizing A in the above sense
int stabilizer_count(const Ball& b, const EmbeddedComponent& a);

}  // namespace grsc
