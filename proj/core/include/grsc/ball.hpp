#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "grsc/dehn.hpp"

namespace grsc {

// Radius-r ball of the Cayley graph, built by breadth-first closure from the
// identity. Element representatives are shortlex-least words; identification
// is by Dehn reduction plus closure under exact-half relator swaps, which is a
// complete equality test whenever 2r <= min relator length (the `exact` flag).
// Distances are served by per-source BFS rows over the generator adjacency,
// cached on demand; no full distance matrix is materialized.
class Ball {
  public:
    int radius() const { return radius_; }
    int n() const { return int(rep_.size()); }
    bool exact() const { return exact_; }
    int identity() const { return 0; }
    const Word& rep(int id) const { return rep_[id]; }
    int length(int id) const { return int(rep_[id].size()); }
    int alphabet_size() const { return int(reducer_->pres().alphabet.size()); }
    const Presentation& pres() const { return reducer_->pres(); }
    const DehnReducer& reducer() const { return *reducer_; }

    // generator step inside the ball; letter-code indexed
    std::optional<int> neighbor(int id, Letter l) const {
        int t = adj_[id][l.code()];
        return t < 0 ? std::nullopt : std::optional<int>(t);
    }
    const std::vector<int>& neighbors_raw(int id) const { return adj_[id]; }

    struct Resolved {
        int id = -1;           // ball element, or -1
        bool outside = false;  // reduced word longer than the radius
        bool certified = false;  // outside verdict is proven (exact mode)
        Word reduced;
    };
    // where the group element of w sits relative to the ball
    Resolved resolve(const Word& w) const;

    // element of the product rep(a)*rep(b)
    Resolved mul(int a, int b) const;

    // BFS distances from src over ball edges (induced metric); -1 unreachable
    std::vector<int> row(int src) const { return row_ref(src); }
    int dist(int u, int v) const { return row_ref(u)[v]; }
    // min over sources; for distance-to-subset queries
    std::vector<int> multi_source_row(const std::vector<int>& sources) const;

    struct GeodesicList {
        std::vector<std::vector<int>> paths;  // vertex sequences u..v
        bool capped = false;
    };
    // all induced-metric geodesics u -> v in lexicographic letter order
    GeodesicList geodesics(int u, int v, size_t cap = 64) const;

    // d_ball(u,v) + max(|u|,|v|) <= r: then d_ball = d_X and every X-geodesic
    // between u and v stays inside the ball
    bool pair_exact(int u, int v) const {
        int d = dist(u, v);
        return d >= 0 && d + std::max(length(u), length(v)) <= radius_;
    }

    friend Ball cayley_ball(const Presentation& p, int r, size_t element_cap);

  private:
    int radius_ = 0;
    bool exact_ = false;
    std::shared_ptr<const DehnReducer> reducer_;
    std::vector<Word> rep_;
    std::unordered_map<Word, int, WordHash> word_to_id_;
    std::vector<std::vector<int>> adj_;  // [id][letter code] -> id or -1

    mutable std::unordered_map<int, std::vector<int>> row_cache_;
    mutable std::vector<int> row_order_;  // eviction order
    static constexpr size_t kRowCacheCap = 128;

    struct Lookup {
        int id = -1;
        Word reduced;
        std::vector<Word> variants;
    };
    Lookup lookup(Word w) const;
    const std::vector<int>& row_ref(int src) const;
};

// throws std::runtime_error if the element cap is exceeded
Ball cayley_ball(const Presentation& p, int r, size_t element_cap = 50000);

}  // namespace grsc
