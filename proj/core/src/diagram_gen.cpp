#include "grsc/diagram_gen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace grsc {

namespace {

// ---------------------------------------------------------------- skeleton
// States are disc maps at arc resolution: one edge per arc, so every vertex
// has valence >= 3 and the boundary is a simple cycle with no bridge edges.
// A new face is attached along a proper boundary segment, whose endpoints are
// either existing boundary vertices or fresh split points inside a boundary
// edge. Every disc map arises this way because a disc admits a shelling
// order; replaying it backwards always removes a face whose exterior part is
// a single arc, which at attach time is the free edge of exactly this move.

struct Move {
    int ka = 0;
    bool sa = false;  // start endpoint strictly inside edge under dart ka
    int kb = 0;
    bool sb = false;
    bool long_way = false;  // both-inside-one-edge: wrap variant
};

Diagram make_theta() {
    Diagram d;
    d.n_vertices = 2;
    d.edges = {{0, 1}, {1, 0}, {0, 1}};
    d.letter = {-1, -1, -1};
    d.faces = {{0, 2}, {1, 4}};
    d.boundary = {3, 5};
    return d;
}

void enumerate_moves(const Diagram& d, std::vector<Move>& out) {
    out.clear();
    int l = int(d.boundary.size());
    for (int ka = 0; ka < l; ++ka)
        for (int sa = 0; sa < 2; ++sa)
            for (int kb = 0; kb < l; ++kb)
                for (int sb = 0; sb < 2; ++sb) {
                    if (ka == kb && !sa && !sb) continue;
                    if (ka == kb && sa && sb) {
                        out.push_back({ka, true, kb, true, false});
                        out.push_back({ka, true, kb, true, true});
                    } else {
                        out.push_back({ka, sa != 0, kb, sb != 0, false});
                    }
                }
}

Diagram apply_move(const Diagram& d, const Move& mv) {
    Diagram t = d;
    int pa, pb;
    if (mv.sa && mv.sb && mv.ka == mv.kb) {
        // two split points inside one edge; the segment is either the middle
        // piece or everything but the middle piece
        subdivide_edge(t, t.boundary[mv.ka] / 2);
        if (!mv.long_way) {
            subdivide_edge(t, t.boundary[mv.ka + 1] / 2);
            pa = mv.ka + 1;
            pb = mv.ka + 2;
        } else {
            subdivide_edge(t, t.boundary[mv.ka] / 2);
            pa = mv.ka + 2;
            pb = mv.ka + 1;
        }
    } else {
        pa = mv.ka;
        pb = mv.kb;
        if (mv.sa) {
            subdivide_edge(t, t.boundary[pa] / 2);
            if (pb > pa) ++pb;
            ++pa;
        }
        if (mv.sb) {
            subdivide_edge(t, t.boundary[pb] / 2);
            if (pa > pb) ++pa;
            ++pb;
        }
    }
    int l = int(t.boundary.size());
    std::vector<int> seg, rest;
    for (int q = pa; q != pb; q = (q + 1) % l) seg.push_back(t.boundary[q]);
    for (int q = pb; q != pa; q = (q + 1) % l) rest.push_back(t.boundary[q]);
    int va = t.dart_tail(seg.front());
    int vb = t.dart_head(seg.back());
    t.edges.push_back({vb, va});
    t.letter.push_back(-1);
    int en = t.n_edges() - 1;
    seg.push_back(2 * en);
    t.faces.push_back(std::move(seg));
    rest.push_back(2 * en + 1);
    t.boundary = std::move(rest);
    return t;
}

// interior faces never touch the boundary again, so small ones are dead ends
bool interior_faces_ok(const Diagram& d) {
    std::vector<char> ext(d.n_edges(), 0);
    for (int dart : d.boundary) ext[dart / 2] = 1;
    for (const std::vector<int>& c : d.faces) {
        bool interior = true;
        for (int dart : c)
            if (ext[dart / 2]) {
                interior = false;
                break;
            }
        if (interior && int(c.size()) < 7) return false;
    }
    return true;
}

// ------------------------------------------------------------- canonical key
// BFS dart labelling from a boundary root under the face-successor
// permutation; the minimum string over roots and both orientations is a
// complete isomorphism invariant for maps with a marked outer face.

std::vector<int> face_successor(const Diagram& d) {
    std::vector<int> phi(d.n_darts(), -1);
    auto walk = [&](const std::vector<int>& c) {
        for (size_t i = 0; i < c.size(); ++i) phi[c[i]] = c[(i + 1) % c.size()];
    };
    for (const std::vector<int>& c : d.faces) walk(c);
    walk(d.boundary);
    return phi;
}

void encode_from(const std::vector<int>& nx, int root, std::string& out) {
    int nd = int(nx.size());
    std::vector<int> id(nd, -1);
    std::vector<int> order;
    order.reserve(nd);
    id[root] = 0;
    order.push_back(root);
    for (size_t q = 0; q < order.size(); ++q) {
        int x = order[q];
        int a = nx[x];
        if (id[a] < 0) {
            id[a] = int(order.size());
            order.push_back(a);
        }
        int b = x ^ 1;
        if (id[b] < 0) {
            id[b] = int(order.size());
            order.push_back(b);
        }
    }
    out.clear();
    out.reserve(2 * order.size());
    for (int x : order) {
        out.push_back(char(id[nx[x]]));
        out.push_back(char(id[x ^ 1]));
    }
}

std::string canon_key(const Diagram& d) {
    std::vector<int> phi = face_successor(d);
    int nd = d.n_darts();
    std::vector<int> inv(nd, -1);
    for (int x = 0; x < nd; ++x) inv[phi[x]] = x;
    std::string best, cur;
    for (int pass = 0; pass < 2; ++pass) {
        // reversing every circuit mirrors the map; its successor is the
        // inverse permutation
        const std::vector<int>& nx = pass ? inv : phi;
        for (int root : d.boundary) {
            encode_from(nx, root, cur);
            if (best.empty() || cur < best) best = cur;
        }
    }
    return best;
}

// ------------------------------------------------------------ corner planting

// boundary positions whose face needs a corner strictly inside its exterior
// arc: faces with one exterior arc and fewer than four interior arcs would
// otherwise sit inside a single side with too few interior arcs
std::vector<char> required_positions(const Diagram& d) {
    int l = int(d.boundary.size());
    std::vector<int> pos_of_edge(d.n_edges(), -1);
    for (int q = 0; q < l; ++q) pos_of_edge[d.boundary[q] / 2] = q;
    std::vector<char> req(l, 0);
    for (const std::vector<int>& c : d.faces) {
        int ext = 0, last = -1;
        for (int dart : c) {
            int p = pos_of_edge[dart / 2];
            if (p >= 0) {
                ++ext;
                last = p;
            }
        }
        if (ext == 1 && int(c.size()) - 1 < 4) req[last] = 1;
    }
    return req;
}

// subdivides the skeleton so position q carries cs[q] interior corners, adds
// a corner at the start vertex of position q when ss[q] is set
void emit_polygon(const Diagram& base, const std::vector<int>& cs, const std::vector<char>& ss,
                  const std::function<void(const Diagram&)>& sink) {
    Diagram t = base;
    int l = int(base.boundary.size());
    std::vector<int> orig_edge(l);
    for (int q = 0; q < l; ++q) orig_edge[q] = base.boundary[q] / 2;
    for (int q = 0; q < l; ++q)
        for (int k = 0; k < cs[q]; ++k) subdivide_edge(t, orig_edge[q]);
    // spans keep the original order; the span of position q starts at the
    // prefix sum and has cs[q] interior vertices
    std::vector<int> start(l + 1, 0);
    for (int q = 0; q < l; ++q) start[q + 1] = start[q] + 1 + cs[q];
    t.side_starts.clear();
    for (int q = 0; q < l; ++q) {
        if (ss[q]) t.side_starts.push_back(start[q]);
        for (int k = 1; k <= cs[q]; ++k) t.side_starts.push_back(start[q] + k);
    }
    sink(t);
}

void place_corners(const Diagram& d, const std::vector<char>& req, int n,
                   const std::function<void(const Diagram&)>& sink) {
    int l = int(d.boundary.size());
    std::vector<int> need_after(l + 1, 0);
    for (int t = l - 1; t >= 0; --t) need_after[t] = need_after[t + 1] + (req[t] ? 1 : 0);
    std::vector<int> cs(l, 0);
    std::vector<char> ss(l, 0);
    std::function<void(int, int)> rec = [&](int t, int left) {
        if (left < need_after[t]) return;
        if (t == l) {
            if (left == 0) emit_polygon(d, cs, ss, sink);
            return;
        }
        for (int s = 0; s <= 1 && s <= left; ++s) {
            ss[t] = char(s);
            for (int c = req[t] ? 1 : 0; c + s <= left; ++c) {
                cs[t] = c;
                rec(t + 1, left - s - c);
            }
            cs[t] = 0;
        }
        ss[t] = 0;
    };
    rec(0, n);
}

// one boundary edge out and back; the only polygon with no face at all whose
// boundary visits every vertex once
Diagram lollipop_bigon() {
    Diagram d;
    d.n_vertices = 2;
    d.edges = {{0, 1}};
    d.letter = {-1};
    d.boundary = {0, 1};
    d.side_starts = {0, 1};
    return d;
}

// single face bounded by a cycle of n corner vertices
Diagram cycle_polygon(int n) {
    Diagram d;
    d.n_vertices = n;
    for (int i = 0; i < n; ++i) {
        d.edges.push_back({i, (i + 1) % n});
        d.letter.push_back(-1);
    }
    std::vector<int> face;
    for (int i = 0; i < n; ++i) face.push_back(2 * i);
    d.faces.push_back(std::move(face));
    for (int i = n - 1; i >= 0; --i) d.boundary.push_back(2 * i + 1);
    for (int i = 0; i < n; ++i) d.side_starts.push_back(i);
    return d;
}

// Streams every map in discovery order. Maps on the last level are handed to
// the sink and dropped right away instead of joining a frontier, so the peak
// footprint is one inner level plus the dedup keys of the last one.
void walk_maps(int max_faces, const std::function<void(const Diagram&)>& sink) {
    if (max_faces < 2) return;
    std::vector<Diagram> level;
    level.push_back(make_theta());
    sink(level.front());
    std::vector<Move> moves;
    for (int f = 3; f <= max_faces; ++f) {
        std::vector<Diagram> next;
        std::unordered_set<std::string> seen;
        bool last = f == max_faces;
        for (Diagram& d : level) {
            enumerate_moves(d, moves);
            for (const Move& mv : moves) {
                Diagram t = apply_move(d, mv);
                if (!interior_faces_ok(t)) continue;
                if (!seen.insert(canon_key(t)).second) continue;
                sink(t);
                if (!last) next.push_back(std::move(t));
            }
            d = Diagram();
        }
        level = std::move(next);
    }
}

}  // namespace

std::vector<Diagram> generate_maps(int max_faces) {
    std::vector<Diagram> all;
    walk_maps(max_faces, [&](const Diagram& d) { all.push_back(d); });
    return all;
}

void generate_polygons(int n, int max_faces, const std::function<void(const Diagram&)>& sink) {
    if (n < 2) throw std::invalid_argument("polygon generation wants at least two sides");
    if (n == 2) sink(lollipop_bigon());
    if (max_faces >= 1) sink(cycle_polygon(n));
    walk_maps(max_faces, [&](const Diagram& d) {
        // interior corners subdivide boundary edges; the skeleton has no
        // bridges, so subdividing keeps the boundary simple
        place_corners(d, required_positions(d), n, sink);
    });
}

void generate_quadrangles(int max_faces, const std::function<void(const Diagram&)>& sink) {
    // A corner at a junction vertex or doubled up on one arc can always be
    // merged away, leaving a valid triangle: such quadrangles are degenerate.
    // A non-degenerate quadrangle therefore has exactly one corner strictly
    // inside each of exactly four demanding arcs, and no others. The single
    // face square is degenerate the same way.
    walk_maps(max_faces, [&](const Diagram& d) {
        std::vector<char> req = required_positions(d);
        int k = 0;
        for (char r : req) k += r;
        if (k != 4) return;
        int l = int(d.boundary.size());
        std::vector<int> cs(l, 0);
        for (int q = 0; q < l; ++q) cs[q] = req[q] ? 1 : 0;
        emit_polygon(d, cs, std::vector<char>(l, 0), sink);
    });
}

}
