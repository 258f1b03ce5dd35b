#include "grsc/metric.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "grsc/pieces.hpp"

namespace grsc {

ProjectionField build_projection_field(const Ball& b, const EmbeddedComponent& a) {
    ProjectionField f;
    f.a = &a;
    f.dist = b.multi_source_row(a.image);
    size_t m = a.image.size();
    f.has_masks = m > 0 && m <= 64;

    if (f.has_masks) {
        // nearest-point sets flow outward: a vertex at distance d inherits the
        // union of the sets of its distance d-1 neighbors
        f.mask.assign(b.n(), 0);
        int maxd = 0;
        for (int x = 0; x < b.n(); ++x) maxd = std::max(maxd, f.dist[x]);
        std::vector<std::vector<int>> by_dist(maxd + 1);
        for (int x = 0; x < b.n(); ++x)
            if (f.dist[x] >= 0) by_dist[f.dist[x]].push_back(x);
        for (size_t i = 0; i < m; ++i) f.mask[a.image[i]] = uint64_t(1) << i;
        for (int d = 1; d <= maxd; ++d) {
            for (int x : by_dist[d]) {
                uint64_t acc = 0;
                for (int y : b.neighbors_raw(x))
                    if (y >= 0 && f.dist[y] == d - 1) acc |= f.mask[y];
                f.mask[x] = acc;
            }
        }
    }

    f.image_dist.resize(m);
    for (size_t i = 0; i < m; ++i) {
        std::vector<int> row = b.row(a.image[i]);
        f.image_dist[i].resize(m);
        for (size_t j = 0; j < m; ++j) f.image_dist[i][j] = row[a.image[j]];
    }
    return f;
}

Projection project(const Ball& b, const ProjectionField& f, int x) {
    Projection p;
    p.distance = f.dist[x];
    if (p.distance < 0) return p;
    const EmbeddedComponent& a = *f.a;
    if (f.has_masks) {
        uint64_t mk = f.mask[x];
        for (size_t i = 0; i < a.image.size(); ++i)
            if (mk & (uint64_t(1) << i)) p.points.push_back(a.image[i]);
    } else {
        std::vector<int> row = b.row(x);
        for (int e : a.image)
            if (row[e] == p.distance) p.points.push_back(e);
    }
    p.exact = a.total && b.length(x) + p.distance <= b.radius();
    return p;
}

namespace {

// pairs to examine: all unordered pairs when the ball is small, otherwise a
// seeded sample of the given size. Independent uniform endpoints are almost
// never within certification range of each other at larger radii, so the
// sample draws a source (stratified by word length, short elements are rare
// but certify best) and then partners from its certifiable neighborhood.
std::vector<std::pair<int, int>> pick_pairs(const Ball& b, const SampleOptions& opt,
                                            bool* sampled) {
    int n = b.n();
    std::vector<std::pair<int, int>> pairs;
    if (size_t(n) <= opt.exhaustive_limit) {
        *sampled = false;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        return pairs;
    }
    *sampled = true;
    std::mt19937_64 rng(opt.seed);
    std::vector<std::vector<int>> by_len(std::max(b.radius(), 1));
    for (int v = 0; v < n; ++v)
        if (b.length(v) < b.radius()) by_len[b.length(v)].push_back(v);
    by_len.erase(std::remove_if(by_len.begin(), by_len.end(),
                                [](const std::vector<int>& s) { return s.empty(); }),
                 by_len.end());
    if (by_len.empty()) return pairs;
    const size_t per_source = 8;
    size_t attempts = 4 * opt.max_pairs;
    while (pairs.size() < opt.max_pairs && attempts-- > 0) {
        const std::vector<int>& stratum = by_len[rng() % by_len.size()];
        int u = stratum[rng() % stratum.size()];
        std::vector<int> row = b.row(u);
        std::vector<int> close;
        for (int v = 0; v < n; ++v)
            if (row[v] > 0 && row[v] + std::max(b.length(u), b.length(v)) <= b.radius())
                close.push_back(v);
        if (close.empty()) continue;
        for (size_t k = 0; k < per_source && pairs.size() < opt.max_pairs; ++k)
            pairs.push_back({u, close[rng() % close.size()]});
    }
    return pairs;
}

// true when the ball distance between two image points is their group distance
bool image_pair_exact(const Ball& b, const EmbeddedComponent& a, const ProjectionField& f,
                      size_t i, size_t j) {
    int d = f.image_dist[i][j];
    return d >= 0 && d + std::max(b.length(a.image[i]), b.length(a.image[j])) <= b.radius();
}

}  // namespace

ContractionReport verify_contraction(const Ball& b, const EmbeddedComponent& a, int m,
                                     const SampleOptions& opt) {
    ContractionReport rep;
    rep.bound = 2 * m;
    rep.seed = opt.seed;
    if (a.image.empty()) return rep;
    ProjectionField f = build_projection_field(b, a);

    std::vector<size_t> index_of(b.n(), 0);
    for (size_t i = 0; i < a.image.size(); ++i) index_of[a.image[i]] = i;

    std::vector<std::pair<int, int>> pairs = pick_pairs(b, opt, &rep.sampled);
    for (auto [u, v] : pairs) {
        if (a.in_image[u] || a.in_image[v]) continue;
        ++rep.pairs_considered;
        if (!b.pair_exact(u, v)) {
            ++rep.pairs_censored;
            continue;
        }
        Ball::GeodesicList gl = b.geodesics(u, v, opt.geodesic_cap);
        if (gl.capped) ++rep.geodesics_capped;
        for (const std::vector<int>& path : gl.paths) {
            bool touches = false;
            for (int z : path)
                if (a.in_image[z]) {
                    touches = true;
                    break;
                }
            if (touches) continue;

            uint64_t proj_union = 0;
            std::vector<int> proj_points;
            bool certified = true;
            for (int z : path) {
                Projection pz = project(b, f, z);
                if (!pz.exact) {
                    certified = false;
                    break;
                }
                if (f.has_masks) {
                    proj_union |= f.mask[z];
                } else {
                    proj_points.insert(proj_points.end(), pz.points.begin(), pz.points.end());
                }
            }
            if (certified) {
                std::vector<size_t> idx;
                if (f.has_masks) {
                    for (size_t i = 0; i < a.image.size(); ++i)
                        if (proj_union & (uint64_t(1) << i)) idx.push_back(i);
                } else {
                    std::sort(proj_points.begin(), proj_points.end());
                    proj_points.erase(std::unique(proj_points.begin(), proj_points.end()),
                                      proj_points.end());
                    for (int e : proj_points) idx.push_back(index_of[e]);
                }
                int diam = 0;
                for (size_t i = 0; i < idx.size() && certified; ++i)
                    for (size_t j = i + 1; j < idx.size(); ++j) {
                        if (!image_pair_exact(b, a, f, idx[i], idx[j])) {
                            certified = false;
                            break;
                        }
                        diam = std::max(diam, f.image_dist[idx[i]][idx[j]]);
                    }
                if (certified) {
                    ++rep.geodesics_scored;
                    rep.max_diameter = std::max(rep.max_diameter, diam);
                    if (diam > rep.bound) {
                        rep.pass = false;
                        rep.violation = ContractionViolation{u, v, path, diam};
                        return rep;
                    }
                    continue;
                }
            }
            ++rep.geodesics_censored;
        }
    }
    return rep;
}

Lambda1Report verify_lambda1(const Ball& b, const LabelledGraph& g, const OrbitTable& orbits,
                             const EmbeddedComponent& a1, const EmbeddedComponent& a2,
                             int delta, int m) {
    Lambda1Report rep;
    rep.delta = delta;
    rep.bound = 5 * m + 10 * delta;
    if (a1.image.empty() || a2.image.empty()) return rep;
    std::vector<int> d1 = b.multi_source_row(a1.image);
    std::vector<int> d2 = b.multi_source_row(a2.image);

    std::vector<int> s;
    for (int x = 0; x < b.n(); ++x) {
        if (d1[x] < 0 || d1[x] > delta || d2[x] < 0 || d2[x] > delta) continue;
        ++rep.members;
        if (b.length(x) > b.radius() - delta) ++rep.censored_members;
        s.push_back(x);
    }

    for (size_t i = 0; i < s.size(); ++i) {
        std::vector<int> row = b.row(s[i]);
        for (size_t j = i + 1; j < s.size(); ++j) {
            ++rep.pairs_checked;
            int d = row[s[j]];
            bool exact = d >= 0 && d + std::max(b.length(s[i]), b.length(s[j])) <= b.radius();
            if (!exact) {
                ++rep.censored_pairs;
                continue;
            }
            if (d > rep.max_diameter) rep.max_diameter = d;
            if (d > rep.bound && rep.pass) {
                rep.pass = false;
                rep.violation = std::make_pair(s[i], s[j]);
            }
        }
    }

    if (delta == 0) {
        // the intersection carries an induced subgraph; every simple path in
        // it must read a piece of the defining graph
        int n_letters = int(b.alphabet_size()) * 2;
        std::vector<int> pos(b.n(), -1);
        for (size_t i = 0; i < s.size(); ++i) pos[s[i]] = int(i);
        for (size_t start = 0; start < s.size(); ++start) {
            struct Frame {
                int elt;
                int code;
            };
            std::vector<Frame> stack{{s[start], 0}};
            std::vector<char> on_path(s.size(), 0);
            on_path[start] = 1;
            Word word;
            while (!stack.empty()) {
                Frame& fr = stack.back();
                bool advanced = false;
                while (fr.code < n_letters) {
                    int c = fr.code++;
                    Letter l{uint16_t(c / 2), c % 2 == 1};
                    std::optional<int> y = b.neighbor(fr.elt, l);
                    if (!y || pos[*y] < 0 || on_path[pos[*y]]) continue;
                    word.push_back(l);
                    if (*y > s[start]) {
                        ++rep.piece_paths_checked;
                        if (!is_piece(g, orbits, word)) {
                            ++rep.piece_failures;
                            rep.pass = false;
                        }
                    }
                    on_path[pos[*y]] = 1;
                    stack.push_back({*y, 0});
                    advanced = true;
                    break;
                }
                if (!advanced) {
                    on_path[pos[stack.back().elt]] = 0;
                    stack.pop_back();
                    if (!word.empty()) word.pop_back();
                }
            }
        }
    }
    return rep;
}

Lambda2Result verify_lambda2(const Ball& b, const ProjectionField& f,
                             const std::vector<int>& geodesic, int m) {
    Lambda2Result res;
    if (geodesic.empty()) throw std::invalid_argument("empty geodesic");
    int bound = 2 * m + 1;
    int len = int(geodesic.size()) - 1;
    const EmbeddedComponent& a = *f.a;

    int dx = f.dist[geodesic.front()];
    int dy = f.dist[geodesic.back()];
    bool front_exact = a.total && b.length(geodesic.front()) + dx <= b.radius();
    bool back_exact = a.total && b.length(geodesic.back()) + dy <= b.radius();
    if (dx >= 0 && dy >= 0 && 3 * dx <= len && 3 * dy <= len) {
        res.applicable = true;  // sound: ball distances dominate group distances
    } else if (!front_exact || !back_exact) {
        // cannot rule the hypothesis out without exact endpoint distances
        res.endpoint_censored = true;
        return res;
    } else {
        return res;  // certified inapplicable
    }

    int best = -1, where = -1;
    for (int z : geodesic) {
        int d = f.dist[z];
        if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            where = z;
        }
    }
    if (best >= 0 && best <= bound) {
        res.passed = true;  // witness distance is an upper bound on the group
        res.witness = where;
        res.witness_distance = best;
        return res;
    }
    for (int z : geodesic) {
        if (!(a.total && b.length(z) + f.dist[z] <= b.radius())) {
            res.censored = true;  // some point may be closer to the image in X
            return res;
        }
    }
    res.witness = where;
    res.witness_distance = best;
    return res;  // certified failure: passed stays false
}

Lambda2Report verify_lambda2_suite(const Ball& b, const EmbeddedComponent& a, int m,
                                   const SampleOptions& opt) {
    Lambda2Report rep;
    rep.bound = 2 * m + 1;
    rep.seed = opt.seed;
    if (a.image.empty()) return rep;
    ProjectionField f = build_projection_field(b, a);

    std::vector<std::pair<int, int>> pairs = pick_pairs(b, opt, &rep.sampled);
    for (auto [u, v] : pairs) {
        if (!b.pair_exact(u, v)) continue;
        Ball::GeodesicList gl = b.geodesics(u, v, opt.geodesic_cap);
        for (const std::vector<int>& path : gl.paths) {
            ++rep.geodesics_considered;
            Lambda2Result res = verify_lambda2(b, f, path, m);
            if (res.endpoint_censored || res.censored) {
                ++rep.censored;
            } else if (!res.applicable) {
                ++rep.inapplicable;
            } else if (res.passed) {
                ++rep.passed;
                rep.max_witness_distance = std::max(rep.max_witness_distance, res.witness_distance);
            } else {
                ++rep.violations;
                rep.pass = false;
            }
        }
    }
    return rep;
}

bool is_theta_fat(const Ball& b, const std::vector<std::vector<int>>& polygon, int theta) {
    if (theta < 0) throw std::invalid_argument("theta must be nonnegative");
    size_t k = polygon.size();
    if (k == 0) throw std::invalid_argument("empty polygon");
    for (size_t i = 0; i < k; ++i) {
        if (polygon[i].empty()) throw std::invalid_argument("empty polygon edge");
        const std::vector<int>& next = polygon[(i + 1) % k];
        if (polygon[i].back() != next.front())
            throw std::invalid_argument("polygon is not closed");
    }
    // a bigon's two edges count as opposite sides, not neighbors; since they
    // share both endpoints, no closed bigon is ever fat
    if (k == 2) {
        std::vector<int> row = b.multi_source_row(polygon[0]);
        for (int z : polygon[1])
            if (row[z] >= 0 && row[z] <= theta) return false;
        return true;
    }
    for (size_t i = 0; i < k; ++i) {
        std::vector<int> row = b.multi_source_row(polygon[i]);
        for (size_t j = i + 2; j < k; ++j) {
            if (i == 0 && j == k - 1) continue;  // adjacent around the wrap
            for (int z : polygon[j]) {
                int d = row[z];
                if (d >= 0 && d <= theta) return false;
            }
        }
    }
    return true;
}

}  // namespace grsc
