#include "grsc/orbits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grsc {

std::vector<std::vector<int>> OrbitTable::orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<int> index(orbit_of.size(), -1);
    for (size_t v = 0; v < orbit_of.size(); ++v) {
        int rep = orbit_of[v];
        if (index[rep] == -1) {
            index[rep] = int(out.size());
            out.push_back({});
        }
        out[index[rep]].push_back(int(v));
    }
    return out;
}

std::optional<std::vector<int>> extend_map(const LabelledGraph& g, int u, int v) {
    std::vector<int> map(g.n_vertices, -1);
    map[u] = v;
    std::vector<int> queue{u};
    while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        int y = map[x];
        for (int d : g.out[x]) {
            auto d2 = g.follow_dart(y, g.dart_letter(d));
            if (!d2) return std::nullopt;
            int h = g.dart_head(d), h2 = g.dart_head(*d2);
            if (map[h] == -1) {
                map[h] = h2;
                queue.push_back(h);
            } else if (map[h] != h2) {
                return std::nullopt;
            }
        }
    }
    return map;
}

bool vertices_isomorphic(const LabelledGraph& g, int u, int v) {
    if (u == v) return true;
    return extend_map(g, u, v).has_value() && extend_map(g, v, u).has_value();
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep least id as root
    }
};
}  // namespace

OrbitTable aut_orbits(const LabelledGraph& g) {
    if (!validate_reduced(g).empty())
        throw std::invalid_argument("aut_orbits requires a reduced graph");
    UnionFind uf(g.n_vertices);
    OrbitTable t;
    for (int u = 0; u < g.n_vertices; ++u) {
        for (int v = u + 1; v < g.n_vertices; ++v) {
            if (uf.find(u) == uf.find(v)) continue;
            auto fwd = extend_map(g, u, v);
            if (!fwd) continue;
            if (!extend_map(g, v, u)) continue;
            uf.unite(u, v);
        }
    }
    t.orbit_of.resize(g.n_vertices);
    for (int v = 0; v < g.n_vertices; ++v) t.orbit_of[v] = uf.find(v);
    for (int v = 0; v < g.n_vertices; ++v) {
        int rep = t.orbit_of[v];
        if (rep == v) continue;
        auto m = extend_map(g, rep, v);
        if (m) t.witnesses.push_back({rep, v, std::move(*m)});
    }
    return t;
}

int aut_order(const LabelledGraph& g, const OrbitTable& t, const Components& c, int base) {
    int comp = c.comp_of[base];
    int count = 0;
    for (int v : c.members[comp])
        if (t.same_orbit(base, v)) ++count;
    return count;
}

}  // namespace grsc
