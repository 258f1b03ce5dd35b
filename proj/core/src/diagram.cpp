#include "grsc/diagram.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace grsc {

std::vector<int> Diagram::side(int i) const {
    if (i < 0 || i >= n_sides()) throw std::invalid_argument("side index out of range");
    int l = int(boundary.size());
    int from = side_starts[i];
    int to = side_starts[(i + 1) % n_sides()];
    std::vector<int> out;
    for (int p = from; p != to || out.empty(); p = (p + 1) % l) {
        out.push_back(boundary[p]);
        if (n_sides() == 1 && int(out.size()) == l) break;
    }
    return out;
}

namespace {

void check_circuit(const Diagram& d, const std::vector<int>& circuit, const char* what,
                   std::vector<char>& used) {
    int nd = d.n_darts();
    for (size_t k = 0; k < circuit.size(); ++k) {
        int dart = circuit[k];
        if (dart < 0 || dart >= nd)
            throw std::invalid_argument(std::string(what) + ": dart id out of range");
        if (used[dart])
            throw std::invalid_argument(std::string(what) + ": dart appears in two circuits");
        used[dart] = 1;
        int next = circuit[(k + 1) % circuit.size()];
        if (next < 0 || next >= nd)
            throw std::invalid_argument(std::string(what) + ": dart id out of range");
        if (d.dart_head(dart) != d.dart_tail(next))
            throw std::invalid_argument(std::string(what) + ": circuit does not chain");
    }
}

}  // namespace

DiagramAnalysis analyze(const Diagram& d) {
    for (const Diagram::Edge& e : d.edges)
        if (e.tail < 0 || e.tail >= d.n_vertices || e.head < 0 || e.head >= d.n_vertices)
            throw std::invalid_argument("edge endpoint out of range");
    if (int(d.letter.size()) != d.n_edges())
        throw std::invalid_argument("letter array size mismatch");

    DiagramAnalysis a;
    std::vector<char> used(d.n_darts(), 0);
    for (size_t f = 0; f < d.faces.size(); ++f) {
        if (d.faces[f].empty()) throw std::invalid_argument("empty face circuit");
        check_circuit(d, d.faces[f], "face", used);
    }
    check_circuit(d, d.boundary, "boundary", used);
    for (int dart = 0; dart < d.n_darts(); ++dart)
        if (!used[dart]) throw std::invalid_argument("dart missing from all circuits");

    a.valence.assign(d.n_vertices, 0);
    for (const Diagram::Edge& e : d.edges) {
        ++a.valence[e.tail];
        ++a.valence[e.head];
    }
    a.on_boundary.assign(d.n_vertices, 0);
    for (int dart : d.boundary) a.on_boundary[d.dart_tail(dart)] = 1;
    a.edge_exterior.assign(d.n_edges(), 0);
    for (int dart : d.boundary) a.edge_exterior[dart / 2] = 1;

    // vertex rotation sigma = phi o alpha; orbits must be one per used vertex
    if (d.n_darts() == 0) {
        a.rotation_ok = true;
    } else {
        std::vector<int> phi(d.n_darts(), -1);
        for (const std::vector<int>& c : d.faces)
            for (size_t k = 0; k < c.size(); ++k) phi[c[k]] = c[(k + 1) % c.size()];
        for (size_t k = 0; k < d.boundary.size(); ++k)
            phi[d.boundary[k]] = d.boundary[(k + 1) % d.boundary.size()];
        bool ok = true;
        std::vector<char> seen(d.n_darts(), 0);
        int orbit_count = 0;
        for (int s = 0; s < d.n_darts() && ok; ++s) {
            if (seen[s]) continue;
            ++orbit_count;
            int tail = d.dart_tail(s);
            int cur = s;
            do {
                seen[cur] = 1;
                if (d.dart_tail(cur) != tail) ok = false;
                cur = phi[Diagram::dart_reverse(cur)];
            } while (ok && cur != s && !seen[cur]);
            if (ok && cur != s) ok = false;  // ran into another orbit: not a permutation cycle
        }
        int used_vertices = 0;
        for (int v = 0; v < d.n_vertices; ++v)
            if (a.valence[v] > 0) ++used_vertices;
        a.rotation_ok = ok && orbit_count == used_vertices;
    }

    {
        std::vector<char> reached(d.n_vertices, 0);
        std::deque<int> q;
        if (d.n_vertices > 0) {
            reached[0] = 1;
            q.push_back(0);
        }
        std::vector<std::vector<int>> inc(d.n_vertices);
        for (int e = 0; e < d.n_edges(); ++e) {
            inc[d.edges[e].tail].push_back(d.edges[e].head);
            inc[d.edges[e].head].push_back(d.edges[e].tail);
        }
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : inc[x])
                if (!reached[y]) {
                    reached[y] = 1;
                    q.push_back(y);
                }
        }
        a.connected = true;
        for (int v = 0; v < d.n_vertices; ++v)
            if (!reached[v]) a.connected = false;
    }

    a.euler_ok = d.n_vertices - d.n_edges() + int(d.faces.size()) == 1;

    // arcs: maximal chains through valence-2 vertices
    a.arc_of_edge.assign(d.n_edges(), -1);
    std::vector<std::vector<int>> out_darts(d.n_vertices);
    for (int dart = 0; dart < d.n_darts(); ++dart) out_darts[d.dart_tail(dart)].push_back(dart);
    auto is_break = [&](int v) { return a.valence[v] != 2; };
    auto continue_dart = [&](int dart) {
        // unique continuation through a valence-2 head
        int w = d.dart_head(dart);
        for (int cand : out_darts[w])
            if (cand != Diagram::dart_reverse(dart)) return cand;
        return Diagram::dart_reverse(dart);  // valence-2 via a single spur edge: bounce
    };
    for (int v = 0; v < d.n_vertices; ++v) {
        if (!is_break(v)) continue;
        for (int start : out_darts[v]) {
            if (a.arc_of_edge[start / 2] >= 0) continue;
            DiagramArc arc;
            int cur = start;
            for (;;) {
                arc.darts.push_back(cur);
                a.arc_of_edge[cur / 2] = int(a.arcs.size());
                if (is_break(d.dart_head(cur))) break;
                cur = continue_dart(cur);
            }
            arc.exterior = a.edge_exterior[start / 2];
            a.arcs.push_back(std::move(arc));
        }
    }
    for (int e = 0; e < d.n_edges(); ++e) {
        if (a.arc_of_edge[e] >= 0) continue;
        DiagramArc arc;  // closed cycle of valence-2 vertices
        arc.closed = true;
        int cur = 2 * e;
        do {
            arc.darts.push_back(cur);
            a.arc_of_edge[cur / 2] = int(a.arcs.size());
            cur = continue_dart(cur);
        } while (cur / 2 != e);
        arc.exterior = a.edge_exterior[e];
        a.arcs.push_back(std::move(arc));
    }

    a.face_arcs.resize(d.faces.size());
    a.interior_degree.assign(d.faces.size(), 0);
    a.exterior_degree.assign(d.faces.size(), 0);
    a.face_interior.assign(d.faces.size(), 0);
    for (size_t f = 0; f < d.faces.size(); ++f) {
        std::vector<int> ids;
        for (int dart : d.faces[f]) ids.push_back(a.arc_of_edge[dart / 2]);
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        for (int id : ids) {
            if (a.arcs[id].exterior)
                ++a.exterior_degree[f];
            else
                ++a.interior_degree[f];
        }
        a.face_arcs[f] = std::move(ids);
        a.face_interior[f] = a.exterior_degree[f] == 0;
    }
    return a;
}

// boundary position -> side index, by the side_starts split
std::vector<int> side_of_position(const Diagram& d) {
    int l = int(d.boundary.size());
    std::vector<int> side(l, 0);
    for (int i = 0; i < d.n_sides(); ++i) {
        int len = int(d.side(i).size());
        for (int k = 0; k < len; ++k) side[(d.side_starts[i] + k) % l] = i;
    }
    return side;
}

int subdivide_edge(Diagram& d, int E) {
    int m = d.n_vertices++;
    int x = d.edges[E].head;
    d.edges[E].head = m;
    d.edges.push_back({m, x});
    d.letter[E] = -1;
    d.letter.push_back(-1);
    int e2 = d.n_edges() - 1;
    auto expand = [&](std::vector<int>& c, std::vector<int>* starts) {
        std::vector<int> nc;
        std::vector<int> grew;
        for (size_t k = 0; k < c.size(); ++k) {
            int dart = c[k];
            if (dart == 2 * E) {
                nc.push_back(2 * E);
                nc.push_back(2 * e2);
                grew.push_back(int(k));
            } else if (dart == 2 * E + 1) {
                nc.push_back(2 * e2 + 1);
                nc.push_back(2 * E + 1);
                grew.push_back(int(k));
            } else {
                nc.push_back(dart);
            }
        }
        // starts are offsets in the old circuit; each expansion strictly
        // before a start pushes it one slot right. A start sitting on an
        // expanded dart stays at the front of its pair, which keeps its tail
        // vertex in both orientations.
        if (starts) {
            for (int& s : *starts) {
                int shift = 0;
                for (int g : grew)
                    if (g < s) ++shift;
                s += shift;
            }
        }
        c = std::move(nc);
    };
    for (std::vector<int>& c : d.faces) expand(c, nullptr);
    expand(d.boundary, &d.side_starts);
    std::sort(d.side_starts.begin(), d.side_starts.end());
    return m;
}

ValidationReport validate_diagram(const Diagram& d) {
    DiagramAnalysis a = analyze(d);
    ValidationReport r;
    if (!a.rotation_ok) r.violations.push_back("circuits do not define a planar rotation system");
    if (!a.connected) r.violations.push_back("diagram is not connected");
    if (!a.euler_ok) r.violations.push_back("Euler relation V - E + F = 1 fails");
    r.ok = r.violations.empty();

    r.three_seven = true;
    for (int v = 0; v < d.n_vertices; ++v)
        if (a.valence[v] > 0 && !a.on_boundary[v] && a.valence[v] < 3) r.three_seven = false;
    for (size_t f = 0; f < d.faces.size(); ++f)
        if (a.face_interior[f] && a.interior_degree[f] < 7) r.three_seven = false;

    if (d.n_sides() > 0) {
        bool sides_ok = !d.boundary.empty();
        int l = int(d.boundary.size());
        for (int i = 0; i < d.n_sides() && sides_ok; ++i) {
            if (d.side_starts[i] < 0 || d.side_starts[i] >= l) sides_ok = false;
            if (i > 0 && d.side_starts[i] <= d.side_starts[i - 1]) sides_ok = false;
        }
        if (sides_ok) {
            for (int i = 0; i < d.n_sides(); ++i) {
                std::vector<int> s = d.side(i);
                for (size_t k = 0; k + 1 < s.size(); ++k)
                    if (s[k + 1] == Diagram::dart_reverse(s[k])) sides_ok = false;
            }
        }
        bool cond = sides_ok;
        if (sides_ok) {
            std::vector<int> side_at = side_of_position(d);
            std::vector<int> pos_of_dart(d.n_darts(), -1);
            for (int p = 0; p < l; ++p) pos_of_dart[d.boundary[p]] = p;
            for (size_t f = 0; f < d.faces.size() && cond; ++f) {
                if (a.exterior_degree[f] != 1) continue;
                int ext_arc = -1;
                for (int id : a.face_arcs[f])
                    if (a.arcs[id].exterior) ext_arc = id;
                bool one_side = true;
                int the_side = -1;
                for (int dart : a.arcs[ext_arc].darts) {
                    int p = pos_of_dart[dart];
                    if (p < 0) p = pos_of_dart[Diagram::dart_reverse(dart)];
                    if (p < 0) {
                        one_side = false;  // arc edge not on the outer circuit
                        break;
                    }
                    if (the_side < 0) the_side = side_at[p];
                    if (side_at[p] != the_side) one_side = false;
                }
                if (one_side && a.interior_degree[f] < 4) cond = false;
            }
        }
        r.ngon = cond;
    }
    return r;
}

std::pair<int, int> degrees(const Diagram& d, int face) {
    if (face < 0 || face >= int(d.faces.size())) throw std::invalid_argument("unknown face");
    DiagramAnalysis a = analyze(d);
    return {a.interior_degree[face], a.exterior_degree[face]};
}

bool is_simple(const Diagram& d) {
    std::vector<char> seen(d.n_vertices, 0);
    for (int dart : d.boundary) {
        int v = d.dart_tail(dart);
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Word boundary_word(const Diagram& d) {
    Word w;
    for (int dart : d.boundary) {
        if (!d.labelled(dart)) throw std::invalid_argument("boundary dart without letter");
        w.push_back(d.dart_letter(dart));
    }
    return w;
}

namespace {

struct EdgeKey {
    int a, b, k;
    bool operator<(const EdgeKey& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return k < o.k;
    }
};

struct ParseState {
    Diagram d;
    std::map<EdgeKey, int> edge_of_key;
    std::vector<int> uses;        // traversal count per edge
    std::vector<int> first_tail;  // tail of the first traversal
    int max_vertex = -1;

    int dart_for(int u, int v, int k, int line) {
        EdgeKey key{std::min(u, v), std::max(u, v), k};
        auto it = edge_of_key.find(key);
        if (it == edge_of_key.end()) {
            int id = int(d.edges.size());
            d.edges.push_back({u, v});
            d.letter.push_back(-1);
            uses.push_back(1);
            first_tail.push_back(u);
            edge_of_key.emplace(key, id);
            return 2 * id;
        }
        int id = it->second;
        if (uses[id] >= 2)
            throw std::invalid_argument("line " + std::to_string(line) +
                                        ": edge traversed more than twice");
        ++uses[id];
        if (u == v) return 2 * id + 1;  // loop, second traversal
        if (first_tail[id] == u)
            throw std::invalid_argument("line " + std::to_string(line) +
                                        ": edge traversed twice in the same direction");
        return 2 * id + 1;
    }
};

int parse_vertex_token(const std::string& tok, int* k, int line) {
    size_t at = tok.find('@');
    std::string v = tok.substr(0, at);
    *k = 0;
    try {
        if (at != std::string::npos) *k = std::stoi(tok.substr(at + 1));
        size_t pos = 0;
        int id = std::stoi(v, &pos);
        if (pos != v.size() || id < 0 || *k < 0) throw std::invalid_argument("");
        return id;
    } catch (...) {
        throw std::invalid_argument("line " + std::to_string(line) + ": bad vertex token '" +
                                    tok + "'");
    }
}

std::vector<int> parse_circuit(ParseState& st, const std::vector<std::string>& toks, int line) {
    std::vector<int> verts;
    std::vector<int> ks;
    for (const std::string& t : toks) {
        int k = 0;
        verts.push_back(parse_vertex_token(t, &k, line));
        ks.push_back(k);
        st.max_vertex = std::max(st.max_vertex, verts.back());
    }
    std::vector<int> darts;
    for (size_t i = 0; i < verts.size(); ++i) {
        size_t j = (i + 1) % verts.size();
        darts.push_back(st.dart_for(verts[i], verts[j], ks[j], line));
    }
    return darts;
}

}  // namespace

Diagram parse_diagram(std::istream& in) {
    ParseState st;
    std::string raw;
    int line = 0;
    int declared_faces = -1;
    bool saw_boundary = false;
    std::vector<std::pair<int, std::vector<std::string>>> labels;  // line, tokens
    while (std::getline(in, raw)) {
        ++line;
        std::string text = raw.substr(0, raw.find('#'));
        std::istringstream ss(text);
        std::vector<std::string> toks;
        std::string t;
        while (ss >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] == "faces") {
            if (toks.size() != 2)
                throw std::invalid_argument("line " + std::to_string(line) + ": faces wants a count");
            declared_faces = std::stoi(toks[1]);
        } else if (toks[0] == "vertices") {
            if (toks.size() != 2)
                throw std::invalid_argument("line " + std::to_string(line) +
                                            ": vertices wants a count");
            st.max_vertex = std::max(st.max_vertex, std::stoi(toks[1]) - 1);
        } else if (toks[0] == "face") {
            if (toks.size() < 3 || toks[1].back() != ':')
                throw std::invalid_argument("line " + std::to_string(line) + ": bad face line");
            std::vector<std::string> body(toks.begin() + 2, toks.end());
            st.d.faces.push_back(parse_circuit(st, body, line));
        } else if (toks[0] == "boundary:") {
            std::vector<std::string> body(toks.begin() + 1, toks.end());
            st.d.boundary = parse_circuit(st, body, line);
            saw_boundary = true;
        } else if (toks[0] == "sides:") {
            for (size_t i = 1; i < toks.size(); ++i)
                st.d.side_starts.push_back(std::stoi(toks[i]));
        } else if (toks[0] == "label") {
            if (toks.size() != 4)
                throw std::invalid_argument("line " + std::to_string(line) + ": bad label line");
            labels.emplace_back(line, std::vector<std::string>(toks.begin() + 1, toks.end()));
        } else {
            throw std::invalid_argument("line " + std::to_string(line) + ": unknown directive '" +
                                        toks[0] + "'");
        }
    }
    if (!saw_boundary) throw std::invalid_argument("missing boundary line");
    if (declared_faces >= 0 && declared_faces != int(st.d.faces.size()))
        throw std::invalid_argument("face count mismatch: declared " +
                                    std::to_string(declared_faces) + ", found " +
                                    std::to_string(st.d.faces.size()));
    for (size_t e = 0; e < st.d.edges.size(); ++e)
        if (st.uses[e] != 2)
            throw std::invalid_argument("edge " + std::to_string(e) + " traversed only once");
    st.d.n_vertices = st.max_vertex + 1;
    if (st.d.n_vertices == 0) st.d.n_vertices = 1;  // empty diagram keeps a base vertex

    for (auto& [lln, ltoks] : labels) {
        int ktail = 0;
        int tail = parse_vertex_token(ltoks[0], &ktail, lln);
        int k = 0;
        int head = parse_vertex_token(ltoks[1], &k, lln);
        EdgeKey key{std::min(tail, head), std::max(tail, head), k};
        auto it = st.edge_of_key.find(key);
        if (it == st.edge_of_key.end())
            throw std::invalid_argument("line " + std::to_string(lln) + ": label on unknown edge");
        const std::string& tok = ltoks[2];
        bool neg = !tok.empty() && tok[0] == '-';
        std::string name = neg ? tok.substr(1) : tok;
        if (name.empty())
            throw std::invalid_argument("line " + std::to_string(lln) + ": label wants one letter");
        uint16_t idx;
        if (auto found = st.d.alphabet.find(name))
            idx = *found;
        else
            idx = st.d.alphabet.add(name);
        int code = Letter{idx, neg}.code();
        if (st.d.edges[it->second].tail != tail) code ^= 1;  // stored reversed
        st.d.letter[it->second] = code;
    }
    return st.d;
}

Diagram parse_diagram_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_diagram(ss);
}

namespace {

std::string circuit_text(const Diagram& d, const std::vector<int>& c,
                         const std::vector<int>& pi, const std::vector<int>& pc) {
    // token j names the tail of dart j; its @ tag disambiguates the edge
    // arriving from token j-1, cyclically
    std::string out;
    for (size_t j = 0; j < c.size(); ++j) {
        int prev_dart = c[(j + c.size() - 1) % c.size()];
        int e = prev_dart / 2;
        std::string tok = std::to_string(d.dart_tail(c[j]));
        if (pc[e] > 1) tok += "@" + std::to_string(pi[e]);
        out += " " + tok;
    }
    return out;
}

}  // namespace

std::string serialize_diagram(const Diagram& d) {
    std::map<std::pair<int, int>, int> pair_count;
    std::vector<int> pi(d.n_edges(), 0), pc(d.n_edges(), 0);
    for (int e = 0; e < d.n_edges(); ++e) {
        auto key = std::minmax(d.edges[e].tail, d.edges[e].head);
        pi[e] = pair_count[{key.first, key.second}]++;
    }
    for (int e = 0; e < d.n_edges(); ++e) {
        auto key = std::minmax(d.edges[e].tail, d.edges[e].head);
        pc[e] = pair_count[{key.first, key.second}];
    }
    std::string out;
    int max_ref = -1;
    for (const Diagram::Edge& e : d.edges) max_ref = std::max({max_ref, e.tail, e.head});
    if (d.n_vertices != max_ref + 1) out += "vertices " + std::to_string(d.n_vertices) + "\n";
    out += "faces " + std::to_string(d.faces.size()) + "\n";
    for (size_t f = 0; f < d.faces.size(); ++f)
        out += "face " + std::to_string(f) + ":" + circuit_text(d, d.faces[f], pi, pc) + "\n";
    out += "boundary:" + circuit_text(d, d.boundary, pi, pc) + "\n";
    if (!d.side_starts.empty()) {
        out += "sides:";
        for (int s : d.side_starts) out += " " + std::to_string(s);
        out += "\n";
    }
    for (int e = 0; e < d.n_edges(); ++e) {
        if (d.letter[e] < 0) continue;
        std::string head = std::to_string(d.edges[e].head);
        if (pc[e] > 1) head += "@" + std::to_string(pi[e]);
        out += "label " + std::to_string(d.edges[e].tail) + " " + head + " " +
               format_letter(d.alphabet, d.dart_letter(2 * e)) + "\n";
    }
    return out;
}

Diagram load_diagram_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_diagram(in);
}

}  // namespace grsc
