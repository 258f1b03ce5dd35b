#include <algorithm>

#include "grsc/cancellation.hpp"

namespace grsc {

namespace {

// Longest prefix of the cyclic word starting at offset that is a piece, with
// its word; prefix lengths are capped at |cycle|-1.
std::pair<int, Word> max_piece_prefix(const LabelledGraph& g, const OrbitTable& orbits,
                                      const Word& cyc, size_t offset) {
    size_t cap = cyc.size() - 1;
    struct WalkState {
        int start_tail;
        int end_dart;
    };
    std::vector<WalkState> walks;
    Letter first = cyc[offset % cyc.size()];
    for (int d = 0; d < g.n_darts(); ++d)
        if (g.dart_letter(d) == first) walks.push_back({g.dart_tail(d), d});

    int best = 0;
    Word prefix, best_word;
    for (size_t m = 1; m <= cap; ++m) {
        if (m > 1) {
            Letter next = cyc[(offset + m - 1) % cyc.size()];
            std::vector<WalkState> kept;
            for (const auto& w : walks) {
                auto e = g.follow_dart(g.dart_head(w.end_dart), next);
                if (e && *e != LabelledGraph::dart_reverse(w.end_dart))
                    kept.push_back({w.start_tail, *e});
            }
            walks.swap(kept);
        }
        if (walks.empty()) break;
        prefix.push_back(cyc[(offset + m - 1) % cyc.size()]);
        int orbit0 = orbits.orbit_of[walks[0].start_tail];
        bool piece = false;
        for (const auto& w : walks)
            if (orbits.orbit_of[w.start_tail] != orbit0) {
                piece = true;
                break;
            }
        if (piece) {
            best = int(m);
            best_word = prefix;
        }
    }
    return {best, best_word};
}

}  // namespace

Gr16Verdict check_gr16(const LabelledGraph& g, size_t cycle_cap) {
    Gr16Verdict v;
    OrbitTable orbits = aut_orbits(g);
    v.piece_bound = max_piece_length(g, orbits);
    CycleList cl = simple_cycles(g, cycle_cap);
    if (cl.capped) {
        v.conclusive = false;
        v.holds = false;
        return v;
    }
    v.holds = true;
    for (const auto& cyc : cl.cycles) {
        int len = cyc.length();
        int cycle_best = 0;
        Word cycle_best_word;
        for (const Word& dir : {cyc.word, inverse(cyc.word)}) {
            for (size_t off = 0; off < dir.size(); ++off) {
                auto [m, w] = max_piece_prefix(g, orbits, dir, off);
                if (m > cycle_best ||
                    (m == cycle_best && m > 0 && shortlex_less(w, cycle_best_word))) {
                    cycle_best = m;
                    cycle_best_word = w;
                }
            }
        }
        if (6 * cycle_best >= len) {
            v.holds = false;
            if (!v.violation) v.violation = Gr16Violation{cyc.word, cycle_best_word};
        }
    }
    return v;
}

}  // namespace grsc
