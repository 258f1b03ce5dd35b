#include "grsc/strebel.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace grsc {

const char* strebel_name(StrebelForm f) {
    switch (f) {
        case StrebelForm::I1: return "I1";
        case StrebelForm::I2: return "I2";
        case StrebelForm::I3: return "I3";
        case StrebelForm::II: return "II";
        case StrebelForm::III: return "III";
        case StrebelForm::IV: return "IV";
        case StrebelForm::V: return "V";
    }
    return "?";
}

namespace {

[[noreturn]] void no_form() { throw std::runtime_error("no structural template matches"); }

// p strictly inside the cyclic interval walking forward from a to b
bool strictly_between(int p, int a, int b, int l) {
    int off = (p - a + l) % l;
    int len = (b - a + l) % l;
    return off > 0 && off < len;
}

struct Shape {
    const Diagram& d;
    DiagramAnalysis a;
    std::vector<int> pos_of_vertex;  // boundary position, -1 off boundary
    std::vector<int> side_at;        // side per boundary position
    std::vector<int> corner_pos;     // position of each side junction

    explicit Shape(const Diagram& dd) : d(dd), a(analyze(dd)) {
        pos_of_vertex.assign(d.n_vertices, -1);
        for (size_t p = 0; p < d.boundary.size(); ++p)
            pos_of_vertex[d.dart_tail(d.boundary[p])] = int(p);
        side_at = side_of_position(d);
        for (int s : d.side_starts) corner_pos.push_back(s);
    }

    std::pair<int, int> arc_ends(int id) const {
        const DiagramArc& arc = a.arcs[id];
        return {d.dart_tail(arc.darts.front()), d.dart_head(arc.darts.back())};
    }

    bool is_corner_pos(int p) const {
        return std::find(corner_pos.begin(), corner_pos.end(), p) != corner_pos.end();
    }

    // corners a boundary chord can be said to cut off: those alone on one of
    // the two boundary intervals the chord spans
    unsigned chord_candidates(int id) const {
        auto [u, v] = arc_ends(id);
        int pu = pos_of_vertex[u], pv = pos_of_vertex[v];
        if (pu < 0 || pv < 0 || pu == pv) no_form();
        int l = int(d.boundary.size());
        unsigned in_a = 0, in_b = 0;
        for (size_t j = 0; j < corner_pos.size(); ++j) {
            if (strictly_between(corner_pos[j], pu, pv, l)) in_a |= 1u << j;
            if (strictly_between(corner_pos[j], pv, pu, l)) in_b |= 1u << j;
        }
        unsigned c = 0;
        if (std::popcount(in_a) == 1) c |= in_a;
        if (std::popcount(in_b) == 1) c |= in_b;
        if (c == 0) no_form();
        return c;
    }
};

StrebelForm classify_bigon(const Shape& s) {
    std::vector<int> chord_ends(s.d.n_vertices, 0);
    for (size_t id = 0; id < s.a.arcs.size(); ++id) {
        if (s.a.arcs[id].exterior) continue;
        if (s.a.arcs[id].closed) no_form();
        auto [u, v] = s.arc_ends(int(id));
        int pu = s.pos_of_vertex[u], pv = s.pos_of_vertex[v];
        if (pu < 0 || pv < 0) no_form();  // a rung foot off the boundary
        if (s.is_corner_pos(pu) || s.is_corner_pos(pv)) no_form();
        if (s.side_at[pu] == s.side_at[pv]) no_form();
        if (++chord_ends[u] > 1 || ++chord_ends[v] > 1) no_form();  // not a ladder
    }
    return StrebelForm::I1;
}

StrebelForm classify_triangle(const Shape& s) {
    std::vector<int> interior;
    for (int v = 0; v < s.d.n_vertices; ++v)
        if (s.a.valence[v] > 0 && !s.a.on_boundary[v]) interior.push_back(v);

    std::vector<int> chords;  // interior arcs joining two boundary vertices
    std::vector<int> stems;   // interior arcs with an endpoint off the boundary
    for (size_t id = 0; id < s.a.arcs.size(); ++id) {
        if (s.a.arcs[id].exterior) continue;
        if (s.a.arcs[id].closed) no_form();
        auto [u, v] = s.arc_ends(int(id));
        if (s.a.on_boundary[u] && s.a.on_boundary[v])
            chords.push_back(int(id));
        else
            stems.push_back(int(id));
    }

    if (interior.empty()) {
        std::vector<unsigned> cands;
        for (int id : chords) cands.push_back(s.chord_candidates(id));
        // least set of corners covering every chord, smallest size first
        unsigned cover = 0;
        bool found = false;
        for (int size = 0; size <= 3 && !found; ++size)
            for (unsigned m = 0; m < 8 && !found; ++m) {
                if (std::popcount(m) != size) continue;
                bool all = true;
                for (unsigned c : cands)
                    if ((c & m) == 0) all = false;
                if (all) {
                    cover = m;
                    found = true;
                }
            }
        int families = std::popcount(cover);
        if (families <= 1) return StrebelForm::I2;
        if (families == 2) return StrebelForm::I3;

        // three families: the central face meets all of them
        std::vector<unsigned> family_of_arc(s.a.arcs.size(), 0);
        for (size_t k = 0; k < chords.size(); ++k) {
            unsigned usable = cands[k] & cover;
            family_of_arc[chords[k]] = usable & ~(usable - 1);  // least candidate
        }
        int central = -1;
        for (size_t f = 0; f < s.d.faces.size(); ++f) {
            unsigned mask = 0;
            for (int id : s.a.face_arcs[f])
                if (!s.a.arcs[id].exterior) mask |= family_of_arc[id];
            if (mask == cover) {
                if (central >= 0) no_form();
                central = int(f);
            }
        }
        if (central < 0) no_form();
        int e = s.a.exterior_degree[central];
        if (e == 3) return StrebelForm::II;
        if (e == 2) return StrebelForm::III;
        if (e == 1)
            throw std::runtime_error(
                "central face touches the boundary in one arc: excluded shape");
        no_form();
    }

    if (interior.size() == 1) {
        int x = interior[0];
        if (s.a.valence[x] != 3 || stems.size() != 3) no_form();
        for (int id : stems) {
            auto [u, v] = s.arc_ends(id);
            int far = u == x ? v : (v == x ? u : -1);
            if (far < 0 || !s.a.on_boundary[far]) no_form();
        }
        for (int id : chords) s.chord_candidates(id);
        return StrebelForm::V;
    }

    if (interior.size() == 4) {
        // one hub joined to three feet, each foot splitting an innermost chord
        std::vector<std::vector<std::pair<int, int>>> at(s.d.n_vertices);  // arc, far end
        for (int id : stems) {
            auto [u, v] = s.arc_ends(id);
            at[u].emplace_back(id, v);
            at[v].emplace_back(id, u);
        }
        std::vector<char> is_interior(s.d.n_vertices, 0);
        for (int v : interior) is_interior[v] = 1;
        int hub = -1;
        for (int v : interior) {
            bool all_in = !at[v].empty();
            for (auto& [id, far] : at[v])
                if (!is_interior[far]) all_in = false;
            if (all_in) {
                if (hub >= 0) no_form();
                hub = v;
            }
        }
        if (hub < 0 || s.a.valence[hub] != 3 || at[hub].size() != 3) no_form();
        std::vector<int> feet;
        for (auto& [id, far] : at[hub]) feet.push_back(far);
        std::sort(feet.begin(), feet.end());
        if (std::unique(feet.begin(), feet.end()) != feet.end()) no_form();
        for (int f : feet) {
            if (s.a.valence[f] != 3 || at[f].size() != 3) no_form();
            for (auto& [id, far] : at[f])
                if (far != hub && !s.a.on_boundary[far]) no_form();
        }
        for (int id : chords) s.chord_candidates(id);
        return StrebelForm::IV;
    }

    no_form();
}

}  // namespace

StrebelForm classify_strebel(const Diagram& d) {
    if (d.n_sides() != 2 && d.n_sides() != 3)
        throw std::invalid_argument("classification wants a bigon or triangle");
    if (!is_simple(d)) throw std::invalid_argument("classification wants a simple diagram");
    ValidationReport v = validate_diagram(d);
    if (!v.ok || !v.three_seven || !v.ngon.value_or(false))
        throw std::invalid_argument("not a valid combinatorial polygon");
    Shape s(d);
    if (d.n_sides() == 2) {
        for (int x = 0; x < d.n_vertices; ++x)
            if (s.a.valence[x] > 0 && !s.a.on_boundary[x]) no_form();
        return classify_bigon(s);
    }
    return classify_triangle(s);
}

}  // namespace grsc
