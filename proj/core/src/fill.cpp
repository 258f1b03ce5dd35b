#include "grsc/fill.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

#include "grsc/letter_word.hpp"

namespace grsc {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p[b] = a;
    }
};

// wedge of balloons at vertex 0: for each rewriting step a path reading the
// prefix, a relator loop at its tip, and the path back
struct Bouquet {
    Diagram d;
    std::vector<int> zdarts;  // boundary darts in reading order

    Bouquet() { d.n_vertices = 1; }

    int add_edge(int tail, int head, Letter l) {
        d.edges.push_back({tail, head});
        d.letter.push_back(l.code());
        return d.n_edges() - 1;
    }

    void add_balloon(const Word& prefix, const Word& rho) {
        int cur = 0;
        std::vector<int> stick;
        for (Letter l : prefix) {
            int u = d.n_vertices++;
            int e = add_edge(cur, u, l);
            stick.push_back(2 * e);
            zdarts.push_back(2 * e);
            cur = u;
        }
        int base = cur;
        std::vector<int> loop;
        for (size_t j = 0; j < rho.size(); ++j) {
            int head = j + 1 == rho.size() ? base : d.n_vertices++;
            int e = add_edge(cur, head, rho[j]);
            loop.push_back(2 * e);
            zdarts.push_back(2 * e);
            cur = head;
        }
        std::vector<int> face;
        for (size_t j = loop.size(); j-- > 0;) face.push_back(loop[j] ^ 1);
        d.faces.push_back(std::move(face));
        for (size_t j = stick.size(); j-- > 0;) zdarts.push_back(stick[j] ^ 1);
    }
};

}  // namespace

Diagram fill_word(const Presentation& p, const Word& w) {
    DehnReducer reducer(p);
    std::vector<DehnReducer::Step> trace;
    Word rest = reducer.reduce(w, &trace);
    if (!rest.empty()) throw std::invalid_argument("word does not rewrite to the identity");

    Bouquet bq;
    for (const DehnReducer::Step& st : trace) {
        Word prefix(st.before.begin(), st.before.begin() + st.prefix_len);
        bq.add_balloon(prefix, st.rotation);
    }
    Diagram& d0 = bq.d;

    // fold: cancelling neighbours on the boundary are sewn together, which
    // is a free reduction of the boundary word by a stack
    int nd = d0.n_darts();
    Dsu darts(nd), verts(d0.n_vertices);
    std::vector<int> stack;
    for (int dart : bq.zdarts) {
        if (!stack.empty()) {
            int prev = stack.back();
            if (d0.dart_letter(dart) == d0.dart_letter(prev).inverse()) {
                stack.pop_back();
                darts.unite(dart, prev ^ 1);
                darts.unite(dart ^ 1, prev);
                verts.unite(d0.dart_tail(prev), d0.dart_head(dart));
                continue;
            }
        }
        stack.push_back(dart);
    }

    // rebuild the quotient; only dart classes still referenced by a face or
    // by the surviving boundary carry edges, fully folded spurs vanish
    Diagram f;
    f.alphabet = p.alphabet;
    std::vector<int> newdart(nd, -1), newvert(d0.n_vertices, -1);
    auto map_vertex = [&](int v) {
        int r = verts.find(v);
        if (newvert[r] < 0) {
            newvert[r] = f.n_vertices++;
        }
        return newvert[r];
    };
    auto map_dart = [&](int x) {
        int r = darts.find(x);
        if (newdart[r] >= 0) return newdart[r];
        int rr = darts.find(x ^ 1);
        if (rr == r) throw std::logic_error("edge folded onto itself");
        int e = f.n_edges();
        f.edges.push_back({map_vertex(d0.dart_tail(x)), map_vertex(d0.dart_head(x))});
        f.letter.push_back(d0.dart_letter(x).code());
        newdart[r] = 2 * e;
        newdart[rr] = 2 * e + 1;
        return newdart[r];
    };
    for (const std::vector<int>& c : d0.faces) {
        std::vector<int> nc;
        nc.reserve(c.size());
        for (int x : c) nc.push_back(map_dart(x));
        f.faces.push_back(std::move(nc));
    }
    std::vector<int> folded;
    folded.reserve(stack.size());
    for (int x : stack) folded.push_back(map_dart(x));
    if (f.n_vertices == 0) f.n_vertices = 1;

    // the folded boundary reads the free reduction of w; cancelling pairs of
    // w itself come back as spurs so the boundary reads w letter for letter
    int n = int(w.size());
    std::vector<int> mate(n, -1), st;
    for (int i = 0; i < n; ++i) {
        if (!st.empty() && w[i] == w[st.back()].inverse()) {
            mate[st.back()] = i;
            mate[i] = st.back();
            st.pop_back();
        } else {
            st.push_back(i);
        }
    }
    std::vector<int> nb;
    size_t bpos = 0;
    int cur = folded.empty() ? 0 : f.dart_tail(folded[0]);
    std::function<void(int, int)> lay = [&](int lo, int hi) {
        for (int i = lo; i < hi;) {
            if (mate[i] < 0) {
                nb.push_back(folded[bpos]);
                cur = f.dart_head(folded[bpos]);
                ++bpos;
                ++i;
            } else {
                int j = mate[i];
                int tip = f.n_vertices++;
                f.edges.push_back({cur, tip});
                f.letter.push_back(w[i].code());
                int e = f.n_edges() - 1;
                nb.push_back(2 * e);
                int saved = cur;
                cur = tip;
                lay(i + 1, j);
                nb.push_back(2 * e + 1);
                cur = saved;
                i = j + 1;
            }
        }
    };
    lay(0, n);
    f.boundary = std::move(nb);
    return f;
}

std::vector<int> non_piece_arcs(const Diagram& d, const LabelledGraph& g,
                                const OrbitTable& orbits) {
    DiagramAnalysis a = analyze(d);
    std::vector<int> bad;
    for (size_t i = 0; i < a.arcs.size(); ++i) {
        if (a.arcs[i].exterior) continue;
        bool ok = true;
        Word word;
        for (int dart : a.arcs[i].darts) {
            if (!d.labelled(dart)) {
                ok = false;
                break;
            }
            word.push_back(d.dart_letter(dart));
        }
        if (ok && (word.empty() || !is_freely_reduced(word))) ok = false;
        if (ok) ok = is_piece(g, orbits, word);
        if (!ok) bad.push_back(int(i));
    }
    return bad;
}

}
