#include "grsc/report.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "grsc/letter_word.hpp"

namespace grsc {

std::string fnv1a_hex(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

Json json_word(const Alphabet& a, const Word& w) { return format_word(a, w); }

Json json_piece_bound(const Alphabet& a, const PieceBound& b) {
    Json j;
    j["kind"] = b.finite() ? "finite" : "unbounded";
    if (b.finite()) {
        j["max_length"] = b.max_len;
        j["witness"] = json_word(a, b.witness);
    } else {
        j["pumpable_word"] = json_word(a, b.witness);
    }
    return j;
}

Json json_gr16(const Alphabet& a, const Gr16Verdict& v) {
    Json j;
    j["holds"] = v.holds;
    j["conclusive"] = v.conclusive;
    j["piece_bound"] = json_piece_bound(a, v.piece_bound);
    if (v.violation) {
        Json w;
        w["cycle"] = json_word(a, v.violation->cycle_word);
        w["piece"] = json_word(a, v.violation->piece);
        w["cycle_length"] = int(v.violation->cycle_word.size());
        w["piece_length"] = int(v.violation->piece.size());
        j["violation"] = w;
    }
    return j;
}

Json json_presentation(const Presentation& p) {
    Json j;
    j["alphabet"] = p.alphabet.names;
    Json rel = Json::array();
    for (const Word& r : p.relators) rel.push_back(format_word(p.alphabet, r));
    j["relators"] = rel;
    j["capped"] = p.capped;
    return j;
}

Json json_certificate(const Alphabet& a, const Certificate& c) {
    (void)a;
    Json j;
    j["piece_bound"] = c.piece_bound;
    Json constants;
    constants["contraction"] = c.contraction;
    constants["lambda1_base"] = c.lambda1_base;
    constants["lambda1_delta_coefficient"] = c.lambda1_delta_coeff;
    constants["lambda2"] = c.lambda2;
    j["constants"] = constants;
    Json classes = Json::array();
    for (const ComponentClass& k : c.classes) {
        Json kj;
        kj["representative"] = k.representative;
        kj["members"] = k.members;
        kj["aut_order"] = k.aut_order;
        Json wits = Json::array();
        for (const OrbitTable::Witness& w : k.aut_witnesses) {
            Json wj;
            wj["from"] = w.from;
            wj["to"] = w.to;
            wj["map"] = w.map;
            wits.push_back(wj);
        }
        kj["aut_witnesses"] = wits;
        classes.push_back(kj);
    }
    j["classes"] = classes;
    return j;
}

Json json_ball(const Ball& b) {
    Json j;
    j["radius"] = b.radius();
    j["elements"] = b.n();
    j["identification_exact"] = b.exact();
    std::vector<int> growth(b.radius() + 1, 0);
    for (int i = 0; i < b.n(); ++i) ++growth[b.length(i)];
    j["sphere_sizes"] = growth;
    return j;
}

Json json_embedding(const EmbeddedComponent& a, const EmbedCheckReport& r) {
    Json j;
    j["component"] = a.comp;
    j["base_vertex"] = a.base_vertex;
    j["base_element"] = a.base_element;
    j["image_size"] = int(a.image.size());
    j["injective"] = a.injective;
    j["consistent"] = a.consistent;
    j["total"] = a.total;
    Json chk;
    chk["isometry_pairs"] = r.isometry_pairs;
    chk["isometry_censored"] = r.isometry_censored;
    chk["isometry_violations"] = r.isometry_violations;
    chk["convexity_pairs"] = r.convexity_pairs;
    chk["convexity_censored"] = r.convexity_censored;
    chk["convexity_violations"] = r.convexity_violations;
    chk["geodesic_capped"] = r.geodesic_capped;
    j["checks"] = chk;
    return j;
}

Json json_contraction(const ContractionReport& r) {
    Json j;
    j["bound"] = r.bound;
    j["sampled"] = r.sampled;
    j["seed"] = r.seed;
    j["pairs_considered"] = r.pairs_considered;
    j["pairs_censored"] = r.pairs_censored;
    j["geodesics_scored"] = r.geodesics_scored;
    j["geodesics_censored"] = r.geodesics_censored;
    j["geodesics_capped"] = r.geodesics_capped;
    j["max_diameter"] = r.max_diameter;
    j["pass"] = r.pass;
    if (r.violation) {
        Json v;
        v["u"] = r.violation->u;
        v["v"] = r.violation->v;
        v["geodesic"] = r.violation->geodesic;
        v["diameter"] = r.violation->diameter;
        j["violation"] = v;
    }
    return j;
}

Json json_lambda1(const Lambda1Report& r) {
    Json j;
    j["delta"] = r.delta;
    j["bound"] = r.bound;
    j["members"] = r.members;
    j["censored_members"] = r.censored_members;
    j["pairs_checked"] = r.pairs_checked;
    j["censored_pairs"] = r.censored_pairs;
    j["max_diameter"] = r.max_diameter;
    j["pass"] = r.pass;
    if (r.violation) j["violation"] = {r.violation->first, r.violation->second};
    j["piece_paths_checked"] = r.piece_paths_checked;
    j["piece_failures"] = r.piece_failures;
    return j;
}

Json json_lambda2(const Lambda2Report& r) {
    Json j;
    j["bound"] = r.bound;
    j["sampled"] = r.sampled;
    j["seed"] = r.seed;
    j["geodesics_considered"] = r.geodesics_considered;
    j["inapplicable"] = r.inapplicable;
    j["passed"] = r.passed;
    j["censored"] = r.censored;
    j["violations"] = r.violations;
    j["max_witness_distance"] = r.max_witness_distance;
    j["pass"] = r.pass;
    return j;
}

Json json_validation(const ValidationReport& r) {
    Json j;
    j["ok"] = r.ok;
    j["three_seven"] = r.three_seven;
    if (r.ngon.has_value()) j["ngon"] = *r.ngon;
    j["violations"] = r.violations;
    return j;
}

Json report_envelope(const std::string& command,
                     const std::vector<std::pair<std::string, std::string>>& inputs) {
    Json j;
    j["command"] = command;
    Json in = Json::array();
    for (const auto& [name, digest] : inputs) {
        Json f;
        f["file"] = name;
        f["fnv1a64"] = digest;
        in.push_back(f);
    }
    j["inputs"] = in;
    return j;
}

std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << render_json(j);
}

}
