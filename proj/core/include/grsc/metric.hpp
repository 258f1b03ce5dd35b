#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grsc/ball.hpp"
#include "grsc/embed.hpp"
#include "grsc/orbits.hpp"

namespace grsc {

// Precomputed nearest-point data for one embedded component: distance to the
// image, the set of nearest image points per ball element (as a bitmask over
// the image list when it has at most 64 points), and image-internal distances.
struct ProjectionField {
    const EmbeddedComponent* a = nullptr;
    std::vector<int> dist;       // d_ball(x, image)
    std::vector<uint64_t> mask;  // bit i: image[i] is nearest; empty if |image| > 64
    std::vector<std::vector<int>> image_dist;  // |image| x |image|
    bool has_masks = false;
};

ProjectionField build_projection_field(const Ball& b, const EmbeddedComponent& a);

struct Projection {
    std::vector<int> points;  // nearest image elements
    int distance = -1;
    bool exact = false;  // |x| + d(x, image) <= r certifies the nearest set
};

Projection project(const Ball& b, const ProjectionField& f, int x);

struct SampleOptions {
    size_t max_pairs = 3000;       // sampled pairs when the ball is large
    size_t exhaustive_limit = 400; // exhaust all pairs when n <= this
    size_t geodesic_cap = 64;
    uint64_t seed = 0;
};

struct ContractionViolation {
    int u = 0, v = 0;
    std::vector<int> geodesic;
    int diameter = 0;
};

struct ContractionReport {
    int bound = 0;  // 2M
    bool sampled = false;
    uint64_t seed = 0;
    long pairs_considered = 0;
    long pairs_censored = 0;     // endpoints not pair-exact
    long geodesics_scored = 0;
    long geodesics_censored = 0;  // projection or diameter not certifiable
    long geodesics_capped = 0;
    int max_diameter = 0;
    bool pass = true;
    std::optional<ContractionViolation> violation;
};

// Projection diameter of every scored geodesic disjoint from the image must
// be at most 2M. Violations are only reported on fully certified objects.
ContractionReport verify_contraction(const Ball& b, const EmbeddedComponent& a, int m,
                                     const SampleOptions& opt = {});

struct Lambda1Report {
    int delta = 0;
    int bound = 0;  // 5M + 10*delta
    long members = 0;
    long censored_members = 0;  // would-be members too close to the boundary
    long pairs_checked = 0;
    long censored_pairs = 0;
    int max_diameter = 0;
    bool pass = true;
    std::optional<std::pair<int, int>> violation;
    // delta = 0 extra: every simple path inside the intersection reads a piece
    long piece_paths_checked = 0;
    long piece_failures = 0;
};

Lambda1Report verify_lambda1(const Ball& b, const LabelledGraph& g, const OrbitTable& orbits,
                             const EmbeddedComponent& a1, const EmbeddedComponent& a2,
                             int delta, int m);

struct Lambda2Result {
    bool applicable = false;  // endpoints within one third of the length
    bool endpoint_censored = false;
    bool passed = false;
    bool censored = false;  // could not certify a failure
    int witness = -1;       // geodesic point within 2M+1 of the image
    int witness_distance = -1;
};

Lambda2Result verify_lambda2(const Ball& b, const ProjectionField& f,
                             const std::vector<int>& geodesic, int m);

struct Lambda2Report {
    int bound = 0;  // 2M + 1
    bool sampled = false;
    uint64_t seed = 0;
    long geodesics_considered = 0;
    long inapplicable = 0;
    long passed = 0;
    long censored = 0;
    long violations = 0;
    int max_witness_distance = 0;
    bool pass = true;
};

Lambda2Report verify_lambda2_suite(const Ball& b, const EmbeddedComponent& a, int m,
                                   const SampleOptions& opt = {});

// true iff every pair of non-adjacent polygon edges is at ball distance > theta;
// edges are geodesic vertex paths, consecutive ones sharing endpoints.
// Throws std::invalid_argument on a non-closed polygon or theta < 0.
bool is_theta_fat(const Ball& b, const std::vector<std::vector<int>>& polygon, int theta);

}  // namespace grsc
