#include "grsc/pieces.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace grsc {

bool is_piece(const LabelledGraph& g, const OrbitTable& orbits, const Word& w) {
    if (w.empty() || !is_freely_reduced(w))
        throw std::invalid_argument("is_piece requires a nonempty freely reduced word");
    int first_orbit = -1;
    for (int v = 0; v < g.n_vertices; ++v) {
        if (!g.readable_from(v, w)) continue;
        int o = orbits.orbit_of[v];
        if (first_orbit == -1)
            first_orbit = o;
        else if (o != first_orbit)
            return true;
    }
    return false;
}

namespace {

struct ProductGraph {
    const LabelledGraph& g;
    std::vector<std::pair<int, int>> nodes;       // dart pairs, equal letter
    std::map<std::pair<int, int>, int> node_of;   // pair -> node id
    std::vector<std::vector<int>> succ;

    ProductGraph(const LabelledGraph& graph, const OrbitTable& orbits) : g(graph) {
        for (int d1 = 0; d1 < g.n_darts(); ++d1) {
            for (int d2 = 0; d2 < g.n_darts(); ++d2) {
                if (d1 == d2) continue;
                if (!(g.dart_letter(d1) == g.dart_letter(d2))) continue;
                if (orbits.same_orbit(g.dart_tail(d1), g.dart_tail(d2))) continue;
                node_of.emplace(std::pair{d1, d2}, int(nodes.size()));
                nodes.push_back({d1, d2});
            }
        }
        succ.resize(nodes.size());
        for (size_t n = 0; n < nodes.size(); ++n) {
            auto [d1, d2] = nodes[n];
            int h1 = g.dart_head(d1), h2 = g.dart_head(d2);
            for (int e1 : g.out[h1]) {
                if (e1 == LabelledGraph::dart_reverse(d1)) continue;
                auto e2 = g.follow_dart(h2, g.dart_letter(e1));
                if (!e2 || *e2 == LabelledGraph::dart_reverse(d2)) continue;
                auto it = node_of.find({e1, *e2});
                if (it != node_of.end()) succ[n].push_back(it->second);
            }
        }
    }
};

}  // namespace

PieceBound max_piece_length(const LabelledGraph& g, const OrbitTable& orbits) {
    ProductGraph pg(g, orbits);
    size_t n = pg.nodes.size();
    if (n == 0) return {PieceKind::finite, 0, {}};

    // iterative 3-color DFS for cycle detection
    std::vector<int> color(n, 0), parent(n, -1);
    for (size_t root = 0; root < n; ++root) {
        if (color[root] != 0) continue;
        std::vector<std::pair<int, size_t>> stack{{int(root), 0}};
        color[root] = 1;
        while (!stack.empty()) {
            auto& [node, idx] = stack.back();
            if (idx < pg.succ[node].size()) {
                int s = pg.succ[node][idx++];
                if (color[s] == 1) {
                    // cycle found: walk back from node to s
                    Word cyc;
                    int cur = node;
                    cyc.push_back(g.dart_letter(pg.nodes[s].first));
                    while (cur != s) {
                        cyc.push_back(g.dart_letter(pg.nodes[cur].first));
                        cur = parent[cur];
                    }
                    std::reverse(cyc.begin() + 1, cyc.end());
                    return {PieceKind::unbounded, -1, canonical_cyclic(cyc)};
                }
                if (color[s] == 0) {
                    color[s] = 1;
                    parent[s] = node;
                    stack.push_back({s, 0});
                }
            } else {
                color[node] = 2;
                stack.pop_back();
            }
        }
    }

    // DAG: longest path counted in nodes, via reverse-topological DP
    std::vector<int> order;  // reverse topological (children before parents)
    {
        std::vector<int> state(n, 0);
        for (size_t root = 0; root < n; ++root) {
            if (state[root] != 0) continue;
            std::vector<std::pair<int, size_t>> stack{{int(root), 0}};
            state[root] = 1;
            while (!stack.empty()) {
                auto& [node, idx] = stack.back();
                if (idx < pg.succ[node].size()) {
                    int s = pg.succ[node][idx++];
                    if (state[s] == 0) {
                        state[s] = 1;
                        stack.push_back({s, 0});
                    }
                } else {
                    order.push_back(node);
                    stack.pop_back();
                }
            }
        }
    }
    std::vector<int> dp(n, 1), best_succ(n, -1);
    // lexicographic comparison of maximal-path words by chain walking
    auto chain_less = [&](int a, int b) {
        while (a != -1 && b != -1) {
            int ca = g.dart_letter(pg.nodes[a].first).code();
            int cb = g.dart_letter(pg.nodes[b].first).code();
            if (ca != cb) return ca < cb;
            a = best_succ[a];
            b = best_succ[b];
        }
        return false;  // equal words
    };
    for (int node : order) {
        for (int s : pg.succ[node]) {
            if (dp[s] + 1 > dp[node]) {
                dp[node] = dp[s] + 1;
                best_succ[node] = s;
            } else if (dp[s] + 1 == dp[node] && best_succ[node] != -1 &&
                       chain_less(s, best_succ[node])) {
                best_succ[node] = s;
            }
        }
    }
    int best = -1;
    for (size_t i = 0; i < n; ++i) {
        if (best == -1 || dp[i] > dp[best] ||
            (dp[i] == dp[best] && chain_less(int(i), best)))
            best = int(i);
    }
    Word witness;
    for (int cur = best; cur != -1; cur = best_succ[cur])
        witness.push_back(g.dart_letter(pg.nodes[cur].first));
    return {PieceKind::finite, dp[best], witness};
}

std::vector<Word> enumerate_pieces(const LabelledGraph& g, const OrbitTable& orbits,
                                   int max_len) {
    std::set<Word> found;
    struct Frame {
        int d1, d2;
    };
    // canonical start pairs: orbit(u) < orbit(v)
    for (int u = 0; u < g.n_vertices; ++u) {
        for (int v = 0; v < g.n_vertices; ++v) {
            if (orbits.orbit_of[u] >= orbits.orbit_of[v]) continue;
            // synchronized DFS over dart pairs
            std::vector<std::pair<Frame, Word>> stack;
            for (int d1 : g.out[u]) {
                auto d2 = g.follow_dart(v, g.dart_letter(d1));
                if (d2) stack.push_back({{d1, *d2}, Word{g.dart_letter(d1)}});
            }
            while (!stack.empty()) {
                auto [fr, w] = stack.back();
                stack.pop_back();
                found.insert(w);
                auto wi = inverse(w);
                found.insert(wi);
                if (int(w.size()) >= max_len) continue;
                for (int e1 : g.out[g.dart_head(fr.d1)]) {
                    if (e1 == LabelledGraph::dart_reverse(fr.d1)) continue;
                    auto e2 = g.follow_dart(g.dart_head(fr.d2), g.dart_letter(e1));
                    if (!e2 || *e2 == LabelledGraph::dart_reverse(fr.d2)) continue;
                    Word w2 = w;
                    w2.push_back(g.dart_letter(e1));
                    stack.push_back({{e1, *e2}, std::move(w2)});
                }
            }
        }
    }
    std::vector<Word> out(found.begin(), found.end());
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

}  // namespace grsc
