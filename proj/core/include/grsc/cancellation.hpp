#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grsc/cycles.hpp"
#include "grsc/graph.hpp"
#include "grsc/orbits.hpp"
#include "grsc/pieces.hpp"

namespace grsc {

struct Gr16Violation {
    Word cycle_word;  // canonical word of the violating simple cycle
    Word piece;       // longest violating piece subword, 6*|piece| >= |cycle|
};

struct Gr16Verdict {
    bool holds = false;
    bool conclusive = true;  // false when the cycle cap was hit
    PieceBound piece_bound;
    std::optional<Gr16Violation> violation;
};

// Strict small cancellation test: for every simple cycle O and every freely
// reduced cyclic subword a of O or O^-1 that is a piece, 6|a| < |O|.
// Subword piece lengths are found by an incremental scan over all label
// following walks of the whole graph.
Gr16Verdict check_gr16(const LabelledGraph& g, size_t cycle_cap = 100000);

struct Presentation {
    Alphabet alphabet;
    std::vector<Word> relators;  // canonical cyclic forms, deduplicated, sorted
    bool capped = false;

    size_t min_relator_length() const;
    size_t max_relator_length() const;
};

Presentation presentation(const LabelledGraph& g, size_t cycle_cap = 100000);

struct ComponentClass {
    int representative = 0;        // component id
    std::vector<int> members;      // component ids, sorted
    int aut_order = 1;             // label-preserving automorphisms of the representative
    std::vector<OrbitTable::Witness> aut_witnesses;  // base -> image maps, identity omitted
};

struct Certificate {
    int piece_bound = 0;  // M
    std::vector<ComponentClass> classes;
    // derived constants: contraction (2M, 0), lambda1(delta) = 5M + 10*delta,
    // lambda2 = 2M + 1
    int contraction = 0;
    int lambda1_base = 0;
    int lambda1_delta_coeff = 10;
    int lambda2 = 0;
};

enum class RefusalReason { condition_fails, pieces_unbounded, inconclusive };

struct Refusal {
    RefusalReason reason;
    std::string detail;
    std::optional<Gr16Violation> violation;
};

struct CertificateResult {
    std::optional<Certificate> certificate;
    std::optional<Refusal> refusal;
    Gr16Verdict verdict;

    bool ok() const { return certificate.has_value(); }
};

CertificateResult rh_certificate(const LabelledGraph& g, size_t cycle_cap = 100000);

}  // namespace grsc
