// Release gate. Each numbered criterion prints one pass/fail line; the
// binary exits nonzero when any requested criterion fails. Run a single
// criterion with --criterion N, or everything with no arguments.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grsc/ball.hpp"
#include "grsc/cancellation.hpp"
#include "grsc/dehn.hpp"
#include "grsc/diagram.hpp"
#include "grsc/diagram_gen.hpp"
#include "grsc/diagram_ops.hpp"
#include "grsc/embed.hpp"
#include "grsc/metric.hpp"
#include "grsc/orbits.hpp"
#include "grsc/pieces.hpp"
#include "grsc/strebel.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

#ifndef GRSC_BIN
#error "GRSC_BIN must point at the command line binary"
#endif

using namespace grsc;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        pass = false;
        if (!note.empty()) note += "; ";
        note += why;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. piece bound and piece membership agree with the permutation oracle on
//    500 seeded random reduced graphs; budget two minutes
Outcome criterion1() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(20260822);
    int finite_count = 0, unbounded_count = 0;
    long word_checks = 0;
    for (int trial = 0; trial < 500 && out.pass; ++trial) {
        LabelledGraph g = oracle::random_reduced_graph(rng, 6, 8, 2);
        if (!validate_reduced(g).empty()) {
            out.fail("trial " + std::to_string(trial) + " generated a non-reduced graph");
            break;
        }
        OrbitTable t = aut_orbits(g);
        PieceBound b = max_piece_length(g, t);
        auto search = oracle::piece_search(g, 40, 200000);
        if (b.finite()) {
            ++finite_count;
            if (search.capped)
                out.fail("trial " + std::to_string(trial) +
                         ": library says finite, oracle still growing at length " +
                         std::to_string(search.reached));
            else if (b.max_len != search.max_len)
                out.fail("trial " + std::to_string(trial) + ": bound " +
                         std::to_string(b.max_len) + " vs oracle " +
                         std::to_string(search.max_len));
        } else {
            ++unbounded_count;
            if (!search.capped)
                out.fail("trial " + std::to_string(trial) +
                         ": library says unbounded, oracle finished at " +
                         std::to_string(search.max_len));
        }
        auto orbits = oracle::vertex_orbits(g, oracle::automorphisms(g));
        oracle::reduced_words(2, 3, [&](const Word& w) {
            if (w.empty() || !out.pass) return;
            ++word_checks;
            if (is_piece(g, t, w) != oracle::is_piece(g, orbits, w))
                out.fail("trial " + std::to_string(trial) + ": is_piece mismatch on " +
                         format_word(g.alphabet, w));
        });
    }
    double dt = seconds_since(t0);
    if (dt > 120.0) out.fail("over the two minute budget");
    if (out.pass) {
        std::ostringstream s;
        s << "500 graphs (" << finite_count << " finite, " << unbounded_count
          << " unbounded), " << word_checks << " word checks, " << int(dt) << "s";
        out.note = s.str();
    }
    return out;
}

// 2. frozen verdicts on the five decision fixtures, witnesses included
Outcome criterion2() {
    Outcome out;
    auto expect_holds = [&](const char* name, int m) {
        Gr16Verdict v = check_gr16(fixture_graph(name));
        if (!v.holds || !v.conclusive)
            out.fail(std::string(name) + " should satisfy the condition");
        else if (!v.piece_bound.finite() || v.piece_bound.max_len != m)
            out.fail(std::string(name) + " piece bound should be " + std::to_string(m));
    };
    expect_holds("fix1.lgf", 0);
    expect_holds("fix2.lgf", 1);
    expect_holds("fix5.lgf", 2);

    Gr16Verdict v4 = check_gr16(fixture_graph("fix4.lgf"));
    if (v4.holds || !v4.conclusive) out.fail("fix4 should fail conclusively");
    if (!v4.violation.has_value())
        out.fail("fix4 verdict carries no witness");
    else {
        if (v4.violation->cycle_word.size() != 7)
            out.fail("fix4 witness cycle length " +
                     std::to_string(v4.violation->cycle_word.size()) + ", wanted 7");
        if (v4.violation->piece.size() != 4)
            out.fail("fix4 witness piece length " +
                     std::to_string(v4.violation->piece.size()) + ", wanted 4");
        if (6 * v4.violation->piece.size() < v4.violation->cycle_word.size())
            out.fail("fix4 witness does not actually violate the strict inequality");
    }

    Gr16Verdict v6 = check_gr16(fixture_graph("fix6.lgf"));
    if (v6.holds || v6.piece_bound.finite())
        out.fail("fix6 should have unbounded pieces");
    CertificateResult r6 = rh_certificate(fixture_graph("fix6.lgf"));
    if (r6.ok() || !r6.refusal.has_value() ||
        r6.refusal->reason != RefusalReason::pieces_unbounded)
        out.fail("fix6 certificate should be refused for unbounded pieces");

    if (out.pass) out.note = "bounds 0/1/2, fix4 witness 4-on-7, fix6 refused";
    return out;
}

// 3. Dehn triviality agrees with the rewriting closure oracle on every
//    reduced word of length at most eight; budget five minutes
Outcome criterion3() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    struct Case {
        const char* name;
        size_t expect_trivial;  // closure members of length <= 8
    };
    // the short-relator presentation keeps its rotations inside the window,
    // the other two admit only the trivial word (and the order-7 powers)
    for (const Case& c : {Case{"fix1.lgf", 3}, Case{"fix2.lgf", 17}, Case{"fix5.lgf", 1}}) {
        LabelledGraph g = fixture_graph(c.name);
        Presentation p = presentation(g);
        DehnReducer d(p);
        int budget = 8 + int(d.max_relator());
        auto closure = oracle::trivial_words(p.relators, 8, budget);
        if (closure.size() != c.expect_trivial) {
            out.fail(std::string(c.name) + ": oracle closure has " +
                     std::to_string(closure.size()) + " words, expected " +
                     std::to_string(c.expect_trivial));
            continue;
        }
        long checked = 0, mismatches = 0;
        std::string first_bad;
        oracle::reduced_words(int(p.alphabet.size()), 8, [&](const Word& w) {
            ++checked;
            bool lib = d.is_trivial(w);
            bool ref = closure.count(oracle::encode_word(w)) > 0;
            if (lib != ref && ++mismatches == 1)
                first_bad = format_word(p.alphabet, w);
        });
        if (mismatches > 0)
            out.fail(std::string(c.name) + ": " + std::to_string(mismatches) +
                     " mismatches in " + std::to_string(checked) +
                     " words, first on \"" + first_bad + "\"");
    }
    double dt = seconds_since(t0);
    if (dt > 300.0) out.fail("over the five minute budget");
    if (out.pass) {
        std::ostringstream s;
        s << "exhaustive to length 8 on three presentations, " << int(dt) << "s";
        out.note = s.str();
    }
    return out;
}

// 4. exact ball cardinalities
Outcome criterion4() {
    Outcome out;
    int n1 = cayley_ball(presentation(fixture_graph("fix1.lgf")), 3).n();
    if (n1 != 7) out.fail("rotation group ball has " + std::to_string(n1) + ", wanted 7");
    int n2 = cayley_ball(presentation(fixture_graph("fix2.lgf")), 2).n();
    if (n2 != 65) out.fail("surface group ball has " + std::to_string(n2) + ", wanted 65");
    if (out.pass) out.note = "7 at radius 3, 65 at radius 2";
    return out;
}

struct Scene {
    LabelledGraph g;
    Components c;
    Ball b;
    std::vector<EmbeddedComponent> embeds;
};

Scene scene(const char* name, int r) {
    LabelledGraph g = fixture_graph(name);
    Components c = components(g);
    Ball b = cayley_ball(presentation(g), r);
    Scene s{std::move(g), std::move(c), std::move(b), {}};
    for (int comp = 0; comp < s.c.count(); ++comp)
        s.embeds.push_back(embed_component(s.g, s.c, comp, s.c.members[comp].front(),
                                           s.b.identity(), s.b));
    return s;
}

// 5. projection diameters of geodesics disjoint from an embedded component
//    never exceed twice the piece bound
Outcome criterion5() {
    Outcome out;
    long scored = 0;
    for (auto [name, r, m] : {std::tuple{"fix2.lgf", 4, 1}, {"fix5.lgf", 6, 2}}) {
        Scene s = scene(name, r);
        for (size_t i = 0; i < s.embeds.size(); ++i) {
            ContractionReport rep = verify_contraction(s.b, s.embeds[i], m);
            if (rep.bound != 2 * m)
                out.fail(std::string(name) + " component " + std::to_string(i) +
                         ": bound " + std::to_string(rep.bound));
            if (!rep.pass || rep.violation.has_value())
                out.fail(std::string(name) + " component " + std::to_string(i) +
                         ": diameter " + std::to_string(rep.max_diameter) +
                         " exceeds " + std::to_string(rep.bound));
            if (rep.geodesics_scored == 0)
                out.fail(std::string(name) + " component " + std::to_string(i) +
                         ": nothing scored");
            scored += rep.geodesics_scored;
        }
    }
    if (out.pass) out.note = std::to_string(scored) + " geodesics scored, zero violations";
    return out;
}

// 6. intersection diameters of the two distinct embedded components obey
//    5M + 10*delta, and the delta = 0 intersections read piece words
Outcome criterion6() {
    Outcome out;
    Scene s = scene("fix5.lgf", 6);
    OrbitTable t = aut_orbits(s.g);
    for (int delta : {0, 1, 2}) {
        Lambda1Report rep = verify_lambda1(s.b, s.g, t, s.embeds[0], s.embeds[1], delta, 2);
        if (rep.bound != 10 + 10 * delta)
            out.fail("delta " + std::to_string(delta) + ": bound " +
                     std::to_string(rep.bound));
        if (!rep.pass || rep.violation.has_value())
            out.fail("delta " + std::to_string(delta) + ": diameter " +
                     std::to_string(rep.max_diameter) + " exceeds " +
                     std::to_string(rep.bound));
        if (delta == 0) {
            if (rep.piece_paths_checked == 0)
                out.fail("no intersection paths examined at delta 0");
            if (rep.piece_failures != 0)
                out.fail(std::to_string(rep.piece_failures) +
                         " intersection paths fail to read pieces");
        }
    }
    if (out.pass) out.note = "delta 0/1/2 within 10+10*delta, intersections read pieces";
    return out;
}

// 7. every applicable geodesic enters the tubular neighborhood of width 2M+1
Outcome criterion7() {
    Outcome out;
    long passed = 0;
    for (auto [name, r, m] : {std::tuple{"fix2.lgf", 4, 1}, {"fix5.lgf", 6, 2}}) {
        Scene s = scene(name, r);
        for (size_t i = 0; i < s.embeds.size(); ++i) {
            Lambda2Report rep = verify_lambda2_suite(s.b, s.embeds[i], m);
            if (rep.bound != 2 * m + 1)
                out.fail(std::string(name) + " component " + std::to_string(i) +
                         ": bound " + std::to_string(rep.bound));
            if (!rep.pass || rep.violations != 0)
                out.fail(std::string(name) + " component " + std::to_string(i) + ": " +
                         std::to_string(rep.violations) + " violations");
            if (rep.passed == 0)
                out.fail(std::string(name) + " component " + std::to_string(i) +
                         ": nothing applicable");
            passed += rep.passed;
        }
    }
    if (out.pass) out.note = std::to_string(passed) + " geodesics witnessed, zero violations";
    return out;
}

// 8. every generated bigon and triangle with at most eight faces lands in
//    one of the seven boundary forms; budget five minutes
Outcome criterion8() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    long counts[2] = {0, 0};
    long by_form[7] = {0, 0, 0, 0, 0, 0, 0};
    for (int n : {2, 3}) {
        generate_polygons(n, 8, [&](const Diagram& d) {
            if (!out.pass) return;
            ++counts[n - 2];
            try {
                StrebelForm f = classify_strebel(d);
                ++by_form[int(f)];
            } catch (const std::exception& e) {
                out.fail(std::to_string(n) + "-gon #" + std::to_string(counts[n - 2]) +
                         " refused classification: " + e.what());
            }
        });
    }
    double dt = seconds_since(t0);
    if (counts[0] == 0 || counts[1] == 0) out.fail("generator produced nothing");
    if (dt > 300.0) out.fail("over the five minute budget");
    if (out.pass) {
        std::ostringstream s;
        s << counts[0] << " bigons + " << counts[1] << " triangles all classified (";
        for (int f = 0; f < 7; ++f) {
            if (f) s << " ";
            s << strebel_name(StrebelForm(f)) << ":" << by_form[f];
        }
        s << "), " << int(dt) << "s";
        out.note = s.str();
    }
    return out;
}

// 9. every simple non-degenerate irreducible quadrangle with at most ten
//    faces admits a crossing path of at most six interior arcs
Outcome criterion9() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    long total = 0, kept = 0;
    size_t worst = 0;
    generate_quadrangles(10, [&](const Diagram& d) {
        if (!out.pass) return;
        ++total;
        if (is_degenerate(d).has_value()) return;
        if (!reduce_polygon(d).empty()) return;
        ++kept;
        try {
            CrossingPath p = quad_crossing_path(d);
            if (p.arcs.size() > 6)
                out.fail("quadrangle #" + std::to_string(total) + " crossed by " +
                         std::to_string(p.arcs.size()) + " arcs");
            if (p.arcs.size() > worst) worst = p.arcs.size();
        } catch (const std::exception& e) {
            out.fail("quadrangle #" + std::to_string(total) +
                     " has no admissible crossing path: " + e.what());
        }
    });
    double dt = seconds_since(t0);
    if (kept == 0) out.fail("no irreducible quadrangles generated");
    if (out.pass) {
        std::ostringstream s;
        s << kept << " of " << total << " quadrangles checked, longest crossing "
          << worst << " arcs, " << int(dt) << "s";
        out.note = s.str();
    }
    return out;
}

// 10. certificate automorphism orders coincide with ball stabilizer counts
Outcome criterion10() {
    Outcome out;
    {
        CertificateResult r = rh_certificate(fixture_graph("fix1.lgf"));
        if (!r.ok() || r.certificate->classes.size() != 1 ||
            r.certificate->classes[0].aut_order != 7)
            out.fail("rotation certificate should report one class of order 7");
        Scene s = scene("fix1.lgf", 3);
        int stab = stabilizer_count(s.b, s.embeds[0]);
        if (stab != 7)
            out.fail("rotation image has " + std::to_string(stab) +
                     " stabilizing elements, wanted 7");
    }
    {
        CertificateResult r = rh_certificate(fixture_graph("fix5.lgf"));
        if (!r.ok() || r.certificate->classes.size() != 2 ||
            r.certificate->classes[0].aut_order != 1 ||
            r.certificate->classes[1].aut_order != 1)
            out.fail("two-cycle certificate should report two trivial classes");
        Scene s = scene("fix5.lgf", 6);
        for (size_t i = 0; i < s.embeds.size(); ++i)
            for (int id = 0; id < s.b.n(); ++id) {
                if (id == s.b.identity() || s.b.length(id) > 3) continue;
                if (stabilizes_in_ball(s.b, s.embeds[i], id))
                    out.fail("component " + std::to_string(i) +
                             " is stabilized by a nonidentity element");
            }
    }
    if (out.pass) out.note = "orders 7 and 1/1 match stabilizer counts";
    return out;
}

// 11. a repeated run with the same seed writes byte-identical reports
Outcome criterion11() {
    Outcome out;
    std::string json = "/tmp/grsc_accept11.json";
    std::string cmd = std::string(GRSC_BIN) + " verify " + fixture_path("fix2.lgf") +
                      " --radius 4 --seed 31 --json " + json +
                      " --quiet > /dev/null 2>&1";
    auto read_all = [](const std::string& path) -> std::optional<std::string> {
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    std::remove(json.c_str());
    if (std::system(cmd.c_str()) != 0) out.fail("first run failed");
    auto first = read_all(json);
    std::remove(json.c_str());
    if (std::system(cmd.c_str()) != 0) out.fail("second run failed");
    auto second = read_all(json);
    if (!first || !second)
        out.fail("report file missing");
    else if (*first != *second)
        out.fail("reports differ between runs");
    else if (first->empty())
        out.fail("report is empty");
    if (out.pass)
        out.note = std::to_string(first->size()) + " byte report reproduced exactly";
    std::remove(json.c_str());
    return out;
}

using Criterion = Outcome (*)();

const Criterion kCriteria[11] = {
    criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
    criterion7, criterion8, criterion9, criterion10, criterion11,
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--criterion") {
        only = std::atoi(argv[2]);
        if (only < 1 || only > 11) {
            std::fprintf(stderr, "usage: %s [--criterion 1..11]\n", argv[0]);
            return 2;
        }
    } else if (argc != 1) {
        std::fprintf(stderr, "usage: %s [--criterion 1..11]\n", argv[0]);
        return 2;
    }
    bool all_pass = true;
    for (int i = 1; i <= 11; ++i) {
        if (only != 0 && i != only) continue;
        Outcome out;
        try {
            out = kCriteria[i - 1]();
        } catch (const std::exception& e) {
            out.fail(std::string("unexpected exception: ") + e.what());
        }
        std::printf("criterion %d: %s%s%s\n", i, out.pass ? "pass" : "FAIL",
                    out.note.empty() ? "" : " - ", out.note.c_str());
        std::fflush(stdout);
        all_pass = all_pass && out.pass;
    }
    return all_pass ? 0 : 1;
}
