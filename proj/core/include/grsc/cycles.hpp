#pragma once

#include <vector>

#include "grsc/graph.hpp"

namespace grsc {

struct SimpleCycle {
    std::vector<int> darts;  // canonical: least vertex first, least dart sequence
    Word word;               // read along darts; always cyclically reduced
    int length() const { return int(darts.size()); }
};

struct CycleList {
    std::vector<SimpleCycle> cycles;  // sorted by (length, word, darts)
    bool capped = false;              // true: enumeration aborted at the cap
};

// All simple cycles of the underlying undirected multigraph, one orientation
// and rotation each. Loops (length 1) and parallel-edge bigons (length 2)
// count; traversing the same undirected edge twice does not.
CycleList simple_cycles(const LabelledGraph& g, size_t cap = 100000);

}  // namespace grsc
