#include <algorithm>
#include <map>

#include "grsc/cancellation.hpp"

namespace grsc {

CertificateResult rh_certificate(const LabelledGraph& g, size_t cycle_cap) {
    CertificateResult res;
    res.verdict = check_gr16(g, cycle_cap);
    if (!res.verdict.conclusive) {
        res.refusal = Refusal{RefusalReason::inconclusive,
                              "simple-cycle enumeration hit the cap; verdict unknown", {}};
        return res;
    }
    if (!res.verdict.piece_bound.finite()) {
        res.refusal = Refusal{RefusalReason::pieces_unbounded,
                              "pieces are not uniformly bounded (pumpable product cycle)", {}};
        return res;
    }
    if (!res.verdict.holds) {
        res.refusal = Refusal{RefusalReason::condition_fails,
                              "a piece of at least one sixth of its cycle exists",
                              res.verdict.violation};
        return res;
    }

    Certificate cert;
    cert.piece_bound = res.verdict.piece_bound.max_len;
    cert.contraction = 2 * cert.piece_bound;
    cert.lambda1_base = 5 * cert.piece_bound;
    cert.lambda1_delta_coeff = 10;
    cert.lambda2 = 2 * cert.piece_bound + 1;

    Components comps = components(g);
    OrbitTable orbits = aut_orbits(g);
    std::vector<int> class_of(comps.count(), -1);
    for (int c = 0; c < comps.count(); ++c) {
        if (class_of[c] != -1) continue;
        int id = int(cert.classes.size());
        ComponentClass cls;
        cls.representative = c;
        class_of[c] = id;
        cls.members.push_back(c);
        // components isomorphic to c: those meeting the orbit of c's least vertex
        int base = comps.members[c].front();
        for (int v = 0; v < g.n_vertices; ++v) {
            if (!orbits.same_orbit(base, v)) continue;
            int c2 = comps.comp_of[v];
            if (class_of[c2] == -1) {
                class_of[c2] = id;
                cls.members.push_back(c2);
            }
        }
        std::sort(cls.members.begin(), cls.members.end());
        cls.aut_order = aut_order(g, orbits, comps, base);
        for (const auto& w : orbits.witnesses)
            if (w.from == base && comps.comp_of[w.to] == c) cls.aut_witnesses.push_back(w);
        cert.classes.push_back(std::move(cls));
    }
    res.certificate = std::move(cert);
    return res;
}

}  // namespace grsc
