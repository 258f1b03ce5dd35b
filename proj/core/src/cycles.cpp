#include "grsc/cycles.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace grsc {

namespace {

std::vector<int> canonical_darts(const LabelledGraph& g, const std::vector<int>& darts) {
    // both orientations, rotated so the least vertex comes first
    auto rotate_to_least = [&](std::vector<int> seq) {
        size_t k = seq.size(), at = 0;
        int least = g.dart_tail(seq[0]);
        for (size_t i = 1; i < k; ++i) {
            int t = g.dart_tail(seq[i]);
            if (t < least) {
                least = t;
                at = i;
            }
        }
        std::rotate(seq.begin(), seq.begin() + at, seq.end());
        return seq;
    };
    std::vector<int> fwd = rotate_to_least(darts);
    std::vector<int> rev(darts.size());
    for (size_t i = 0; i < darts.size(); ++i)
        rev[i] = LabelledGraph::dart_reverse(darts[darts.size() - 1 - i]);
    rev = rotate_to_least(rev);
    return std::min(fwd, rev);
}

}  // namespace

CycleList simple_cycles(const LabelledGraph& g, size_t cap) {
    CycleList out;
    std::set<std::vector<int>> seen;

    // DFS paths from each start s over vertices >= s; close back at s
    for (int s = 0; s < g.n_vertices && !out.capped; ++s) {
        std::vector<int> path;                       // darts
        std::vector<char> on_path(g.n_vertices, 0);  // vertices in use (except s)
        std::vector<char> edge_used(g.edges.size(), 0);

        // explicit stack of (vertex, next out index)
        std::vector<std::pair<int, size_t>> stack{{s, 0}};
        while (!stack.empty() && !out.capped) {
            auto& [v, idx] = stack.back();
            if (idx >= g.out[v].size()) {
                stack.pop_back();
                if (!path.empty()) {
                    int d = path.back();
                    path.pop_back();
                    edge_used[d / 2] = 0;
                    on_path[g.dart_tail(d)] = 0;
                }
                continue;
            }
            int d = g.out[v][idx++];
            if (edge_used[d / 2]) continue;
            int h = g.dart_head(d);
            if (h == s) {
                std::vector<int> cyc = path;
                cyc.push_back(d);
                if (seen.insert(canonical_darts(g, cyc)).second && seen.size() > cap) {
                    out.capped = true;
                    break;
                }
                continue;
            }
            if (h < s || on_path[h]) continue;
            on_path[v] = 1;  // v is now interior to the path extension
            edge_used[d / 2] = 1;
            path.push_back(d);
            stack.push_back({h, 0});
        }
    }

    if (out.capped) return out;
    for (const auto& darts : seen) {
        SimpleCycle c;
        c.darts = darts;
        for (int d : darts) c.word.push_back(g.dart_letter(d));
        assert(is_cyclically_reduced(c.word));
        out.cycles.push_back(std::move(c));
    }
    std::sort(out.cycles.begin(), out.cycles.end(), [](const SimpleCycle& a, const SimpleCycle& b) {
        if (a.darts.size() != b.darts.size()) return a.darts.size() < b.darts.size();
        if (a.word != b.word) return shortlex_less(a.word, b.word);
        return a.darts < b.darts;
    });
    return out;
}

}  // namespace grsc
