#include "grsc/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace grsc {

void LabelledGraph::build_index() {
    out.assign(n_vertices, {});
    for (int d = 0; d < n_darts(); ++d) out[dart_tail(d)].push_back(d);
    for (auto& v : out)
        std::sort(v.begin(), v.end(), [&](int a, int b) {
            int ca = dart_letter(a).code(), cb = dart_letter(b).code();
            if (ca != cb) return ca < cb;
            return a < b;
        });
}

std::optional<int> LabelledGraph::follow_dart(int v, Letter l) const {
    for (int d : out[v])
        if (dart_letter(d) == l) return d;
    return std::nullopt;
}

std::optional<std::vector<int>> LabelledGraph::walk(int v, const Word& w) const {
    std::vector<int> darts;
    darts.reserve(w.size());
    int cur = v;
    for (Letter l : w) {
        auto d = follow_dart(cur, l);
        if (!d) return std::nullopt;
        darts.push_back(*d);
        cur = dart_head(*d);
    }
    return darts;
}

std::vector<ReducednessViolation> validate_reduced(const LabelledGraph& g) {
    std::vector<ReducednessViolation> bad;
    for (int v = 0; v < g.n_vertices; ++v) {
        for (size_t i = 0; i + 1 < g.out[v].size(); ++i) {
            Letter a = g.dart_letter(g.out[v][i]);
            Letter b = g.dart_letter(g.out[v][i + 1]);
            if (a == b && (bad.empty() || bad.back().vertex != v || !(bad.back().letter == a)))
                bad.push_back({v, a});
        }
    }
    return bad;
}

Components components(const LabelledGraph& g) {
    Components c;
    c.comp_of.assign(g.n_vertices, -1);
    for (int s = 0; s < g.n_vertices; ++s) {
        if (c.comp_of[s] != -1) continue;
        int id = int(c.members.size());
        c.members.push_back({});
        std::vector<int> stack{s};
        c.comp_of[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            c.members[id].push_back(v);
            for (int d : g.out[v]) {
                int h = g.dart_head(d);
                if (c.comp_of[h] == -1) {
                    c.comp_of[h] = id;
                    stack.push_back(h);
                }
            }
        }
        std::sort(c.members[id].begin(), c.members[id].end());
    }
    return c;
}

namespace {
[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}
}  // namespace

LabelledGraph parse_graph(const std::string& text) {
    LabelledGraph g;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool saw_alphabet = false, saw_vertices = false;
    std::set<std::tuple<int, int, int>> seen_edges;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::istringstream ls(raw);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "alphabet") {
            if (saw_alphabet) parse_fail(lineno, "duplicate alphabet line");
            std::string tok;
            while (ls >> tok) {
                if (tok[0] == '-') parse_fail(lineno, "alphabet letters must be positive");
                if (g.alphabet.find(tok)) parse_fail(lineno, "duplicate letter '" + tok + "'");
                g.alphabet.add(tok);
            }
            saw_alphabet = true;
        } else if (kw == "vertices") {
            if (!saw_alphabet) parse_fail(lineno, "vertices before alphabet");
            if (saw_vertices) parse_fail(lineno, "duplicate vertices line");
            long long n = -1;
            if (!(ls >> n) || n < 0) parse_fail(lineno, "bad vertex count");
            g.n_vertices = int(n);
            saw_vertices = true;
        } else if (kw == "edge") {
            if (!saw_vertices) parse_fail(lineno, "edge before vertices");
            long long t = -1, h = -1;
            std::string tok;
            if (!(ls >> t >> h >> tok)) parse_fail(lineno, "expected: edge <tail> <head> <letter>");
            if (t < 0 || t >= g.n_vertices || h < 0 || h >= g.n_vertices)
                parse_fail(lineno, "vertex index out of range");
            auto idx = g.alphabet.find(tok);
            if (!idx) parse_fail(lineno, "unknown letter '" + tok + "'");
            if (!seen_edges.insert({int(t), int(h), int(*idx)}).second)
                parse_fail(lineno, "duplicate edge");
            g.edges.push_back({int(t), int(h), Letter{*idx, false}});
        } else {
            parse_fail(lineno, "unknown directive '" + kw + "'");
        }
    }
    if (!saw_alphabet) throw std::runtime_error("missing alphabet line");
    if (!saw_vertices) throw std::runtime_error("missing vertices line");
    g.build_index();
    return g;
}

std::string serialize_graph(const LabelledGraph& g) {
    std::ostringstream out;
    out << "alphabet";
    for (const auto& n : g.alphabet.names) out << ' ' << n;
    out << "\nvertices " << g.n_vertices << "\n";
    for (const auto& e : g.edges)
        out << "edge " << e.tail << ' ' << e.head << ' ' << g.alphabet.names[e.letter.index]
            << "\n";
    return out.str();
}

LabelledGraph load_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_graph(ss.str());
}

}  // namespace grsc
