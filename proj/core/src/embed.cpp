#include "grsc/embed.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace grsc {

EmbeddedComponent embed_component(const LabelledGraph& g, const Components& comps, int comp,
                                  int base_vertex, int base_element, const Ball& b) {
    if (comp < 0 || comp >= comps.count()) throw std::invalid_argument("component out of range");
    if (base_vertex < 0 || base_vertex >= g.n_vertices || comps.comp_of[base_vertex] != comp)
        throw std::invalid_argument("base vertex not in component");
    if (base_element < 0 || base_element >= b.n())
        throw std::invalid_argument("base element not in ball");

    EmbeddedComponent a;
    a.comp = comp;
    a.base_vertex = base_vertex;
    a.base_element = base_element;
    a.elt_of_vertex.assign(g.n_vertices, -1);
    a.elt_of_vertex[base_vertex] = base_element;

    std::deque<int> q{base_vertex};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        int e = a.elt_of_vertex[x];
        for (int d : g.out[x]) {
            int y = g.dart_head(d);
            if (a.elt_of_vertex[y] >= 0) continue;
            std::optional<int> t = b.neighbor(e, g.dart_letter(d));
            if (!t) continue;  // image would leave the ball along this dart
            a.elt_of_vertex[y] = *t;
            q.push_back(y);
        }
    }

    // consistency over every dart with both ends mapped, catching conflicts
    // that first-discovery BFS would otherwise hide
    for (int d = 0; d < g.n_darts(); ++d) {
        int ex = a.elt_of_vertex[g.dart_tail(d)];
        int ey = a.elt_of_vertex[g.dart_head(d)];
        if (ex < 0 || ey < 0) continue;
        std::optional<int> t = b.neighbor(ex, g.dart_letter(d));
        if (!t || *t != ey) a.consistent = false;
    }

    a.total = true;
    for (int v : comps.members[comp])
        if (a.elt_of_vertex[v] < 0) a.total = false;

    std::vector<int> img;
    for (int v : comps.members[comp])
        if (a.elt_of_vertex[v] >= 0) img.push_back(a.elt_of_vertex[v]);
    std::sort(img.begin(), img.end());
    a.injective = std::adjacent_find(img.begin(), img.end()) == img.end();
    img.erase(std::unique(img.begin(), img.end()), img.end());
    a.image = std::move(img);
    a.in_image.assign(b.n(), 0);
    for (int e : a.image) a.in_image[e] = 1;
    return a;
}

namespace {

// undirected BFS distances within the graph, restricted to mapped vertices
std::vector<int> graph_row(const LabelledGraph& g, const EmbeddedComponent& a, int src) {
    std::vector<int> d(g.n_vertices, -1);
    std::deque<int> q{src};
    d[src] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int dart : g.out[x]) {
            int y = g.dart_head(dart);
            if (a.elt_of_vertex[y] >= 0 && d[y] < 0) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    return d;
}

}  // namespace

EmbedCheckReport check_embedding(const LabelledGraph& g, const EmbeddedComponent& a,
                                 const Ball& b, size_t geodesic_cap) {
    EmbedCheckReport rep;
    std::vector<int> mapped;
    for (int v = 0; v < g.n_vertices; ++v)
        if (a.elt_of_vertex[v] >= 0) mapped.push_back(v);

    for (size_t i = 0; i < mapped.size(); ++i) {
        std::vector<int> gd = graph_row(g, a, mapped[i]);
        for (size_t j = i + 1; j < mapped.size(); ++j) {
            int x = mapped[i], y = mapped[j];
            int ex = a.elt_of_vertex[x], ey = a.elt_of_vertex[y];
            ++rep.isometry_pairs;
            if (!b.pair_exact(ex, ey)) {
                ++rep.isometry_censored;
            } else if (gd[y] != b.dist(ex, ey)) {
                ++rep.isometry_violations;
            }
            ++rep.convexity_pairs;
            if (!b.pair_exact(ex, ey)) {
                ++rep.convexity_censored;
                continue;
            }
            Ball::GeodesicList gl = b.geodesics(ex, ey, geodesic_cap);
            if (gl.capped) rep.geodesic_capped = true;
            for (const std::vector<int>& path : gl.paths)
                for (int z : path)
                    if (!a.in_image[z]) {
                        ++rep.convexity_violations;
                        goto next_pair;
                    }
        next_pair:;
        }
    }
    return rep;
}

bool stabilizes_in_ball(const Ball& b, const EmbeddedComponent& a, int g_elt) {
    int budget = b.radius() - b.length(g_elt);
    for (int e : a.image) {
        if (b.length(e) > budget) continue;
        Ball::Resolved t = b.mul(g_elt, e);
        if (t.id < 0 || !a.in_image[t.id]) return false;
    }
    return true;
}

int stabilizer_count(const Ball& b, const EmbeddedComponent& a) {
    int count = 0;
    for (int e = 0; e < b.n(); ++e)
        if (stabilizes_in_ball(b, a, e)) ++count;
    return count;
}

}  // namespace grsc
