#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grsc/letter_word.hpp"

namespace grsc {

// Finite directed multigraph with a positive letter on each edge.
// Edge e yields dart 2e (tail to head, positive letter) and dart 2e+1
// (head to tail, inverse letter). Loops and parallel edges are allowed.
struct LabelledGraph {
    struct Edge {
        int tail = 0;
        int head = 0;
        Letter letter;  // always positive
    };

    Alphabet alphabet;
    int n_vertices = 0;
    std::vector<Edge> edges;

    // per vertex, dart ids sorted by letter code then dart id
    std::vector<std::vector<int>> out;

    int n_darts() const { return int(edges.size()) * 2; }
    int dart_tail(int d) const { return d % 2 == 0 ? edges[d / 2].tail : edges[d / 2].head; }
    int dart_head(int d) const { return d % 2 == 0 ? edges[d / 2].head : edges[d / 2].tail; }
    Letter dart_letter(int d) const {
        Letter l = edges[d / 2].letter;
        return d % 2 == 0 ? l : l.inverse();
    }
    static int dart_reverse(int d) { return d ^ 1; }

    void build_index();

    // deterministic label-following; meaningful when the graph is reduced
    std::optional<int> follow_dart(int v, Letter l) const;

    // walk w from v; returns the dart sequence, or nullopt if w is not readable
    std::optional<std::vector<int>> walk(int v, const Word& w) const;
    bool readable_from(int v, const Word& w) const { return walk(v, w).has_value(); }
};

struct ReducednessViolation {
    int vertex = 0;
    Letter letter;  // two or more darts with this letter leave the vertex
};

std::vector<ReducednessViolation> validate_reduced(const LabelledGraph& g);

struct Components {
    std::vector<int> comp_of;               // per vertex
    std::vector<std::vector<int>> members;  // per component, sorted
    int count() const { return int(members.size()); }
};

// component ids ordered by least member vertex
Components components(const LabelledGraph& g);

// .lgf format:
//   alphabet <tok> <tok> ...
//   vertices <n>
//   edge <tail> <head> <tok>     (one line per edge, positive letter)
// '#' starts a comment; blank lines ignored.
// Throws std::runtime_error with a line-number message on bad input.
LabelledGraph parse_graph(const std::string& text);
std::string serialize_graph(const LabelledGraph& g);
LabelledGraph load_graph_file(const std::string& path);

}  // namespace grsc
