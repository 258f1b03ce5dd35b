#pragma once

#include <vector>

#include "grsc/cancellation.hpp"
#include "grsc/dehn.hpp"
#include "grsc/diagram.hpp"
#include "grsc/graph.hpp"
#include "grsc/orbits.hpp"

namespace grsc {

// Builds a disc diagram over the presentation whose boundary reads w letter
// for letter: one face per rewriting step, glued by replaying the rewriting
// trace as a wedge of conjugated relator balloons and folding the boundary.
// Throws std::invalid_argument when w does not rewrite to the empty word.
Diagram fill_word(const Presentation& p, const Word& w);

// Indexes of interior arcs whose labels are not pieces of g; empty means the
// diagram is pieced the way the cancellation theory expects. Arcs with
// unlabelled or freely reducible labels count as failures.
std::vector<int> non_piece_arcs(const Diagram& d, const LabelledGraph& g,
                                const OrbitTable& orbits);

}
