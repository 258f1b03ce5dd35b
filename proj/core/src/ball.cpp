#include "grsc/ball.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace grsc {

Ball::Lookup Ball::lookup(Word w) const {
    w = reducer_->reduce(std::move(w));
    for (;;) {
        auto it = word_to_id_.find(w);
        if (it != word_to_id_.end()) return {it->second, w, {}};
        std::vector<Word> visited{w};
        std::unordered_set<Word, WordHash> seen{w};
        std::optional<Word> shorter;
        int found = -1;
        for (size_t qi = 0; qi < visited.size() && found < 0 && !shorter; ++qi) {
            for (Word& y : reducer_->half_swaps(visited[qi])) {
                if (y.size() < w.size()) {
                    shorter = std::move(y);
                    break;
                }
                if (!seen.insert(y).second) continue;
                auto jt = word_to_id_.find(y);
                visited.push_back(std::move(y));
                if (jt != word_to_id_.end()) {
                    found = jt->second;
                    break;
                }
            }
        }
        if (shorter) {
            w = reducer_->reduce(std::move(*shorter));
            continue;
        }
        return {found, std::move(w), std::move(visited)};
    }
}

Ball::Resolved Ball::resolve(const Word& w) const {
    Lookup lk = lookup(free_reduce(w));
    Resolved r;
    r.reduced = lk.reduced;
    if (lk.id >= 0) {
        r.id = lk.id;
        return r;
    }
    r.outside = int(lk.reduced.size()) > radius_;
    // an outside verdict is proven only in exact mode together with a length
    // margin: equalities that would pull a longer irreducible word inside the
    // ball force a van Kampen boundary longer than the word plus the radius
    r.certified = r.outside && exact_ && int(lk.reduced.size()) <= 2 * radius_;
    return r;
}

Ball::Resolved Ball::mul(int a, int b) const { return resolve(concat(rep_[a], rep_[b])); }

const std::vector<int>& Ball::row_ref(int src) const {
    auto it = row_cache_.find(src);
    if (it != row_cache_.end()) return it->second;
    if (row_cache_.size() >= kRowCacheCap) {
        row_cache_.erase(row_order_.front());
        row_order_.erase(row_order_.begin());
    }
    std::vector<int> d(n(), -1);
    std::deque<int> q{src};
    d[src] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj_[x]) {
            if (y >= 0 && d[y] < 0) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    row_order_.push_back(src);
    return row_cache_.emplace(src, std::move(d)).first->second;
}

std::vector<int> Ball::multi_source_row(const std::vector<int>& sources) const {
    std::vector<int> d(n(), -1);
    std::deque<int> q;
    for (int s : sources) {
        if (d[s] < 0) {
            d[s] = 0;
            q.push_back(s);
        }
    }
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : adj_[x]) {
            if (y >= 0 && d[y] < 0) {
                d[y] = d[x] + 1;
                q.push_back(y);
            }
        }
    }
    return d;
}

Ball::GeodesicList Ball::geodesics(int u, int v, size_t cap) const {
    GeodesicList out;
    std::vector<int> du = row(u);  // copy: the cache may evict while we hold it
    std::vector<int> dv = row(v);
    int dist = du[v];
    if (dist < 0) return out;
    // DFS over tight edges, neighbors in letter-code order
    std::vector<int> path{u};
    struct Frame {
        int node;
        size_t code;
    };
    std::vector<Frame> stack{{u, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.node == v) {
            if (out.paths.size() >= cap) {
                out.capped = true;
                return out;
            }
            out.paths.push_back(path);
            stack.pop_back();
            path.pop_back();
            continue;
        }
        bool advanced = false;
        while (f.code < adj_[f.node].size()) {
            int y = adj_[f.node][f.code++];
            if (y >= 0 && du[y] == du[f.node] + 1 && dv[y] == dv[f.node] - 1) {
                path.push_back(y);
                stack.push_back({y, 0});
                advanced = true;
                break;
            }
        }
        if (!advanced && stack.back().node == f.node && f.code >= adj_[f.node].size()) {
            stack.pop_back();
            path.pop_back();
        }
    }
    return out;
}

Ball cayley_ball(const Presentation& p, int r, size_t element_cap) {
    Ball b;
    b.radius_ = r;
    b.reducer_ = std::make_shared<DehnReducer>(p);
    size_t minrel = p.min_relator_length();
    b.exact_ = p.relators.empty() || size_t(2 * r) <= minrel;

    b.rep_.push_back({});
    b.word_to_id_.emplace(Word{}, 0);
    std::vector<int> sphere{0};
    int n_letters = int(p.alphabet.size()) * 2;
    for (int k = 1; k <= r && !sphere.empty(); ++k) {
        std::vector<int> next_sphere;
        for (int u : sphere) {
            for (int c = 0; c < n_letters; ++c) {
                Letter l{uint16_t(c / 2), c % 2 == 1};
                if (!b.rep_[u].empty() && b.rep_[u].back() == l.inverse()) continue;
                Word cand = b.rep_[u];
                cand.push_back(l);
                Ball::Lookup lk = b.lookup(std::move(cand));
                if (lk.id >= 0) continue;
                if (b.rep_.size() >= element_cap)
                    throw std::runtime_error("ball element cap exceeded");
                int id = int(b.rep_.size());
                b.rep_.push_back(lk.reduced);
                for (Word& var : lk.variants) b.word_to_id_.emplace(std::move(var), id);
                b.word_to_id_.emplace(lk.reduced, id);
                next_sphere.push_back(id);
            }
        }
        sphere.swap(next_sphere);
    }

    b.adj_.assign(b.rep_.size(), std::vector<int>(n_letters, -1));
    for (int id = 0; id < b.n(); ++id) {
        for (int c = 0; c < n_letters; ++c) {
            Letter l{uint16_t(c / 2), c % 2 == 1};
            Word cand = b.rep_[id];
            cand.push_back(l);
            Ball::Lookup lk = b.lookup(free_reduce(cand));
            if (lk.id >= 0) b.adj_[id][c] = lk.id;
        }
    }
    return b;
}

}  // namespace grsc
