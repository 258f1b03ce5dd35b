#pragma once

#include <vector>

#include "grsc/graph.hpp"
#include "grsc/orbits.hpp"

namespace grsc {

enum class PieceKind { finite, unbounded };

struct PieceBound {
    PieceKind kind = PieceKind::finite;
    int max_len = 0;  // meaningful when finite
    // finite: a longest piece (shortlex-least among them; empty when max_len=0)
    // unbounded: one period of a pumpable product-cycle word
    Word witness;

    bool finite() const { return kind == PieceKind::finite; }
};

// A word w is a piece iff it is readable by label-following from two start
// vertices lying in different aut-orbits (two essentially distinct maps).
// Throws std::invalid_argument unless w is freely reduced and nonempty.
bool is_piece(const LabelledGraph& g, const OrbitTable& orbits, const Word& w);

// Longest-path analysis of the synchronized dart-product graph: nodes are dart
// pairs with equal letters whose tails lie in different orbits, edges extend
// both walks by the same letter without immediate backtracking. A reachable
// cycle means pieces of every length exist.
PieceBound max_piece_length(const LabelledGraph& g, const OrbitTable& orbits);

// All piece words of length <= max_len, deduplicated, sorted shortlex.
std::vector<Word> enumerate_pieces(const LabelledGraph& g, const OrbitTable& orbits,
                                   int max_len);

}  // namespace grsc
