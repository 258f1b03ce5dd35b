#include "grsc/diagram_ops.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace grsc {

namespace {

void want_polygon(const Diagram& d) {
    if (d.n_sides() == 0) throw std::invalid_argument("diagram has no side decomposition");
    ValidationReport v = validate_diagram(d);
    if (!v.ok || !v.three_seven || !v.ngon.value_or(false))
        throw std::invalid_argument("not a combinatorial polygon");
}

struct Dsu {
    std::vector<int> up;
    explicit Dsu(int n) : up(n) {
        for (int i = 0; i < n; ++i) up[i] = i;
    }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void join(int x, int y) { up[find(x)] = find(y); }
};

// connectivity of the complex with one vertex deleted; nodes are edges and
// faces, glued at every surviving vertex
struct CutSplit {
    bool ok = false;
    std::vector<int> edge_root;
    int root_a = -1, root_b = -1;  // components of the two boundary segments
    int p1 = -1, p2 = -1;          // boundary positions of the cut vertex
};

CutSplit split_at(const Diagram& d, const DiagramAnalysis& a, int w) {
    CutSplit cs;
    std::vector<int> visits;
    for (size_t p = 0; p < d.boundary.size(); ++p)
        if (d.dart_tail(d.boundary[p]) == w) visits.push_back(int(p));
    if (visits.size() != 2) return cs;
    cs.p1 = visits[0];
    cs.p2 = visits[1];

    int boundary_faces = 0;
    for (size_t f = 0; f < d.faces.size(); ++f) {
        if (a.exterior_degree[f] == 0) continue;
        bool touches = false;
        for (int dart : d.faces[f])
            if (d.dart_tail(dart) == w) touches = true;
        if (touches) ++boundary_faces;
    }
    if (boundary_faces != 2) return cs;

    int ne = d.n_edges(), nf = int(d.faces.size());
    Dsu dsu(ne + nf);
    std::vector<int> last_edge_at(d.n_vertices, -1);
    for (int e = 0; e < ne; ++e)
        for (int v : {d.edges[e].tail, d.edges[e].head}) {
            if (v == w) continue;
            if (last_edge_at[v] >= 0) dsu.join(e, last_edge_at[v]);
            last_edge_at[v] = e;
        }
    for (int f = 0; f < nf; ++f)
        for (int dart : d.faces[f]) dsu.join(ne + f, dart / 2);

    cs.edge_root.assign(ne, -1);
    for (int e = 0; e < ne; ++e) cs.edge_root[e] = dsu.find(e);
    std::vector<int> roots = cs.edge_root;
    for (int f = 0; f < nf; ++f) roots.push_back(dsu.find(ne + f));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.size() != 2) return cs;

    cs.root_a = cs.edge_root[d.boundary[cs.p1] / 2];
    cs.root_b = cs.edge_root[d.boundary[cs.p2] / 2];
    if (cs.root_a == cs.root_b) return cs;
    cs.ok = true;
    return cs;
}

// the component holding one boundary segment, as a diagram of its own; sides
// are the original sides or their subsegments cut at the split vertex
Diagram extract_part(const Diagram& d, const CutSplit& cs, int root, int from, int len) {
    int l = int(d.boundary.size());
    Diagram out;
    out.alphabet = d.alphabet;

    std::vector<int> emap(d.n_edges(), -1);
    std::vector<int> vmap(d.n_vertices, -1);
    for (int e = 0; e < d.n_edges(); ++e)
        if (cs.edge_root[e] == root) {
            emap[e] = int(out.edges.size());
            out.edges.push_back(d.edges[e]);
            out.letter.push_back(d.letter[e]);
        }
    for (Diagram::Edge& e : out.edges)
        for (int* v : {&e.tail, &e.head}) {
            if (vmap[*v] < 0) {
                vmap[*v] = out.n_vertices++;
            }
            *v = vmap[*v];
        }
    auto remap_dart = [&](int dart) { return 2 * emap[dart / 2] + dart % 2; };

    for (const std::vector<int>& c : d.faces) {
        if (cs.edge_root[c[0] / 2] != root) continue;
        std::vector<int> nc;
        for (int dart : c) nc.push_back(remap_dart(dart));
        out.faces.push_back(std::move(nc));
    }
    for (int k = 0; k < len; ++k) out.boundary.push_back(remap_dart(d.boundary[(from + k) % l]));

    out.side_starts.push_back(0);
    for (int q : d.side_starts) {
        int off = (q - from + l) % l;
        if (off > 0 && off < len) out.side_starts.push_back(off);
    }
    std::sort(out.side_starts.begin(), out.side_starts.end());
    return out;
}

std::optional<Reduction> try_vertex_reduction(const Diagram& d, const DiagramAnalysis& a, int w) {
    CutSplit cs = split_at(d, a, w);
    if (!cs.ok) return std::nullopt;
    int l = int(d.boundary.size());
    Reduction r;
    r.kind = Reduction::Kind::vertex;
    r.vertex = w;
    r.part1 = extract_part(d, cs, cs.root_a, cs.p1, (cs.p2 - cs.p1 + l) % l);
    r.part2 = extract_part(d, cs, cs.root_b, cs.p2, (cs.p1 - cs.p2 + l) % l);
    return r;
}

std::optional<Reduction> try_face_reduction(const Diagram& d, const DiagramAnalysis& a, int face,
                                            int arc_a, int arc_b,
                                            const std::vector<int>& special) {
    Diagram t = d;
    int e1 = a.arcs[arc_a].darts[0] / 2;
    int e2 = a.arcs[arc_b].darts[0] / 2;
    int m1 = subdivide_edge(t, e1);
    int n1 = t.n_edges() - 1;
    int m2 = subdivide_edge(t, e2);
    int n2 = t.n_edges() - 1;
    for (Diagram::Edge& e : t.edges) {
        if (e.tail == m2) e.tail = m1;
        if (e.head == m2) e.head = m1;
    }
    int w = m1;

    // cut the split face open at the two midpoints
    std::vector<int>& circ = t.faces[face];
    int q1 = -1, q2 = -1;
    for (size_t k = 0; k < circ.size(); ++k) {
        int dart = circ[k];
        if (t.dart_head(dart) != w) continue;
        if (dart / 2 == e1 || dart / 2 == n1) q1 = int(k);
        if (dart / 2 == e2 || dart / 2 == n2) q2 = int(k);
    }
    if (q1 < 0 || q2 < 0) return std::nullopt;
    int len = int(circ.size());
    std::vector<int> half1, half2;
    for (int k = (q1 + 1) % len; ; k = (k + 1) % len) {
        half1.push_back(circ[k]);
        if (k == q2) break;
    }
    for (int k = (q2 + 1) % len; ; k = (k + 1) % len) {
        half2.push_back(circ[k]);
        if (k == q1) break;
    }
    t.faces[face] = half1;
    t.faces.push_back(half2);

    DiagramAnalysis ta = analyze(t);
    CutSplit cs = split_at(t, ta, w);
    if (!cs.ok) return std::nullopt;

    // both halves need one of the polygon's valence-2 junction vertices
    bool a_has = false, b_has = false;
    for (int v : special) {
        int root = -1;
        for (int e = 0; e < t.n_edges() && root < 0; ++e)
            if (t.edges[e].tail == v || t.edges[e].head == v) root = cs.edge_root[e];
        if (root == cs.root_a) a_has = true;
        if (root == cs.root_b) b_has = true;
    }
    if (!a_has || !b_has) return std::nullopt;

    int l = int(t.boundary.size());
    Reduction r;
    r.kind = Reduction::Kind::face;
    r.face = face;
    r.arc_a = arc_a;
    r.arc_b = arc_b;
    r.part1 = extract_part(t, cs, cs.root_a, cs.p1, (cs.p2 - cs.p1 + l) % l);
    r.part2 = extract_part(t, cs, cs.root_b, cs.p2, (cs.p1 - cs.p2 + l) % l);
    return r;
}

}  // namespace

std::optional<DegenerateVertex> is_degenerate(const Diagram& d) {
    want_polygon(d);
    int n = d.n_sides();
    if (n < 2) return std::nullopt;
    for (int i = 0; i < n; ++i) {
        int junction = d.side_starts[(i + 1) % n];
        Diagram merged = d;
        merged.side_starts.erase(
            std::find(merged.side_starts.begin(), merged.side_starts.end(), junction));
        ValidationReport v = validate_diagram(merged);
        if (v.ngon.value_or(false))
            return DegenerateVertex{i, d.dart_tail(d.boundary[junction])};
    }
    return std::nullopt;
}

std::vector<Reduction> reduce_polygon(const Diagram& d) {
    want_polygon(d);
    DiagramAnalysis a = analyze(d);
    std::vector<Reduction> out;

    for (int w = 0; w < d.n_vertices; ++w)
        if (auto r = try_vertex_reduction(d, a, w)) out.push_back(std::move(*r));

    std::vector<int> special;  // distinguished vertices: valence-2 junctions
    for (int s : d.side_starts) {
        int v = d.dart_tail(d.boundary[s]);
        if (a.valence[v] == 2) special.push_back(v);
    }
    for (size_t f = 0; f < d.faces.size(); ++f) {
        if (a.exterior_degree[f] < 2) continue;
        std::vector<int> ext;
        for (int id : a.face_arcs[f])
            if (a.arcs[id].exterior) ext.push_back(id);
        for (size_t i = 0; i < ext.size(); ++i)
            for (size_t j = i + 1; j < ext.size(); ++j)
                if (auto r = try_face_reduction(d, a, int(f), ext[i], ext[j], special))
                    out.push_back(std::move(*r));
    }
    return out;
}

CrossingPath quad_crossing_path(const Diagram& d) {
    if (d.n_sides() != 4) throw std::invalid_argument("crossing search wants a quadrangle");
    if (!is_simple(d)) throw std::invalid_argument("crossing search wants a simple quadrangle");
    want_polygon(d);
    if (is_degenerate(d)) throw std::invalid_argument("degenerate quadrangle");
    if (!reduce_polygon(d).empty()) throw std::invalid_argument("reducible quadrangle");

    DiagramAnalysis a = analyze(d);
    std::vector<std::vector<char>> on_side(4, std::vector<char>(d.n_vertices, 0));
    for (int i = 0; i < 4; ++i)
        for (int dart : d.side(i)) {
            on_side[i][d.dart_tail(dart)] = 1;
            on_side[i][d.dart_head(dart)] = 1;
        }

    std::vector<std::vector<int>> ends(a.arcs.size());
    std::vector<std::vector<int>> arcs_at(d.n_vertices);
    for (size_t id = 0; id < a.arcs.size(); ++id) {
        if (a.arcs[id].exterior || a.arcs[id].closed) continue;
        int u = d.dart_tail(a.arcs[id].darts.front());
        int v = d.dart_head(a.arcs[id].darts.back());
        ends[id] = {u, v};
        arcs_at[u].push_back(int(id));
        if (v != u) arcs_at[v].push_back(int(id));
    }

    CrossingPath best;
    bool found = false;
    for (int pair = 0; pair < 2; ++pair) {
        int sa = pair, sb = pair + 2;
        std::vector<int> dist(a.arcs.size(), -1), parent(a.arcs.size(), -1);
        std::deque<int> queue;
        for (size_t id = 0; id < a.arcs.size(); ++id) {
            if (ends[id].empty()) continue;
            for (int v : ends[id])
                if (on_side[sa][v] && dist[id] < 0) {
                    dist[id] = 1;
                    queue.push_back(int(id));
                }
        }
        int hit = -1;
        while (!queue.empty() && hit < 0) {
            int id = queue.front();
            queue.pop_front();
            for (int v : ends[id]) {
                if (on_side[sb][v]) {
                    hit = id;
                    break;
                }
                for (int next : arcs_at[v])
                    if (dist[next] < 0) {
                        dist[next] = dist[id] + 1;
                        parent[next] = id;
                        queue.push_back(next);
                    }
            }
        }
        if (hit < 0) continue;
        CrossingPath p;
        p.side_a = sa;
        p.side_b = sb;
        for (int id = hit; id >= 0; id = parent[id]) p.arcs.push_back(id);
        std::reverse(p.arcs.begin(), p.arcs.end());
        if (!found || p.arcs.size() < best.arcs.size()) {
            best = std::move(p);
            found = true;
        }
    }
    if (!found || best.arcs.size() > 6)
        throw std::runtime_error("no crossing path within 6 interior arcs: invariant breach");
    return best;
}

}  // namespace grsc
