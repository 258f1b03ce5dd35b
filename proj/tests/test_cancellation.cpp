#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "grsc/cancellation.hpp"
#include "grsc/cycles.hpp"
#include "grsc/dehn.hpp"
#include "grsc/orbits.hpp"
#include "grsc/pieces.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace grsc;

TEST_CASE("simple cycle counts") {
    CycleList c1 = simple_cycles(fixture_graph("fix1.lgf"));
    REQUIRE(c1.cycles.size() == 1);
    CHECK(c1.cycles[0].length() == 7);

    CycleList c3 = simple_cycles(fixture_graph("fix3.lgf"));
    REQUIRE(c3.cycles.size() == 2);
    CHECK(c3.cycles[0].word.size() == 7);
    CHECK(c3.cycles[1].word.size() == 7);

    LabelledGraph forest =
        parse_graph("alphabet a b\nvertices 4\nedge 0 1 a\nedge 1 2 b\nedge 1 3 a\n");
    CHECK(simple_cycles(forest).cycles.empty());
}

TEST_CASE("cycle words are cyclically reduced closed walks") {
    for (const char* name : {"fix2.lgf", "fix4.lgf", "fix5.lgf", "fix6.lgf"}) {
        LabelledGraph g = fixture_graph(name);
        for (const SimpleCycle& c : simple_cycles(g).cycles) {
            CHECK(is_cyclically_reduced(c.word));
            int v = g.dart_tail(c.darts.front());
            CHECK(oracle::follow_word(g, v, c.word) == v);
        }
    }
}

TEST_CASE("cycle cap reports truncation") {
    // the complete graph on letters a,b,c has plenty of cycles
    LabelledGraph g = parse_graph(
        "alphabet a b c\nvertices 4\nedge 0 1 a\nedge 1 2 a\nedge 2 3 a\nedge 3 0 b\n"
        "edge 0 2 c\nedge 1 3 c\n");
    CycleList full = simple_cycles(g);
    REQUIRE(full.cycles.size() > 2);
    CycleList cut = simple_cycles(g, 2);
    CHECK(cut.capped);
}

TEST_CASE("sixth condition on the fixtures") {
    CHECK(check_gr16(fixture_graph("fix1.lgf")).holds);
    CHECK(check_gr16(fixture_graph("fix2.lgf")).holds);
    CHECK(check_gr16(fixture_graph("fix5.lgf")).holds);

    Gr16Verdict v4 = check_gr16(fixture_graph("fix4.lgf"));
    CHECK(!v4.holds);
    CHECK(v4.conclusive);
    REQUIRE(v4.violation.has_value());
    CHECK(v4.violation->cycle_word.size() == 7);
    CHECK(v4.violation->piece.size() == 4);
    CHECK(6 * v4.violation->piece.size() >= v4.violation->cycle_word.size());

    Gr16Verdict v6 = check_gr16(fixture_graph("fix6.lgf"));
    CHECK(!v6.holds);
    CHECK(!v6.piece_bound.finite());
}

TEST_CASE("violation witnesses are genuine pieces") {
    LabelledGraph g = fixture_graph("fix4.lgf");
    OrbitTable t = aut_orbits(g);
    Gr16Verdict v = check_gr16(g);
    REQUIRE(v.violation.has_value());
    CHECK(is_piece(g, t, v.violation->piece));
}

TEST_CASE("presentations of the fixtures") {
    Presentation p1 = presentation(fixture_graph("fix1.lgf"));
    REQUIRE(p1.relators.size() == 1);
    CHECK(format_word(p1.alphabet, p1.relators[0]) == "a a a a a a a");

    // the duplicate relator of the two isomorphic cycles is removed
    Presentation p3 = presentation(fixture_graph("fix3.lgf"));
    REQUIRE(p3.relators.size() == 1);
    CHECK(format_word(p3.alphabet, p3.relators[0]) == "a a a a a a a");

    Presentation p2 = presentation(fixture_graph("fix2.lgf"));
    REQUIRE(p2.relators.size() == 1);
    CHECK(p2.relators[0].size() == 8);
    // canonical form of the commutator-style cycle word
    Word w = wd(fixture_graph("fix2.lgf"), "a b -a -b c d -c -d");
    CHECK(format_word(p2.alphabet, canonical_cyclic(w)) ==
          format_word(p2.alphabet, p2.relators[0]));
}

TEST_CASE("relators are invariant under vertex relabelling") {
    // fix2 with vertices renumbered
    LabelledGraph g = parse_graph(
        "alphabet a b c d\nvertices 8\nedge 5 3 a\nedge 3 0 b\nedge 7 0 a\nedge 2 7 b\n"
        "edge 2 4 c\nedge 4 6 d\nedge 1 6 c\nedge 5 1 d\n");
    Presentation p = presentation(g);
    Presentation q = presentation(fixture_graph("fix2.lgf"));
    REQUIRE(p.relators.size() == q.relators.size());
    CHECK(format_word(p.alphabet, p.relators[0]) == format_word(q.alphabet, q.relators[0]));
}

TEST_CASE("dehn reduction worked examples") {
    Presentation p = presentation(fixture_graph("fix1.lgf"));
    DehnReducer d(p);
    CHECK(format_word(p.alphabet, d.reduce(wd(fixture_graph("fix1.lgf"), "a a a a a"))) ==
          "-a -a");
    CHECK(d.reduce(wd(fixture_graph("fix1.lgf"), "a a a a a a a")).empty());
    CHECK(d.reduce({}).empty());
}

TEST_CASE("dehn trace steps compose back to the word") {
    Presentation p = presentation(fixture_graph("fix2.lgf"));
    DehnReducer d(p);
    LabelledGraph g = fixture_graph("fix2.lgf");
    Word w = wd(g, "c a b -a -b c d -c -d -c");
    std::vector<DehnReducer::Step> trace;
    Word rest = d.reduce(w, &trace);
    CHECK(rest.empty());
    // w equals the product of the conjugated rotations in the free group
    Word z;
    for (const auto& s : trace) {
        Word a(s.before.begin(), s.before.begin() + s.prefix_len);
        z = free_reduce(concat(concat(z, a), concat(s.rotation, inverse(a))));
    }
    CHECK(format_word(p.alphabet, z) == format_word(p.alphabet, free_reduce(w)));
}

TEST_CASE("triviality in the rotation group") {
    Presentation p = presentation(fixture_graph("fix1.lgf"));
    DehnReducer d(p);
    LabelledGraph g = fixture_graph("fix1.lgf");
    CHECK(d.is_trivial(wd(g, "a a a a a a a")));
    CHECK(!d.is_trivial(wd(g, "a a a")));
    Presentation p2 = presentation(fixture_graph("fix2.lgf"));
    DehnReducer d2(p2);
    CHECK(d2.is_trivial(p2.relators[0]));
}

TEST_CASE("certificates and refusals") {
    CertificateResult r1 = rh_certificate(fixture_graph("fix1.lgf"));
    REQUIRE(r1.ok());
    CHECK(r1.certificate->piece_bound == 0);
    REQUIRE(r1.certificate->classes.size() == 1);
    CHECK(r1.certificate->classes[0].aut_order == 7);
    CHECK(r1.certificate->contraction == 0);
    CHECK(r1.certificate->lambda1_base == 0);
    CHECK(r1.certificate->lambda2 == 1);

    CertificateResult r5 = rh_certificate(fixture_graph("fix5.lgf"));
    REQUIRE(r5.ok());
    CHECK(r5.certificate->piece_bound == 2);
    REQUIRE(r5.certificate->classes.size() == 2);
    CHECK(r5.certificate->classes[0].aut_order == 1);
    CHECK(r5.certificate->classes[1].aut_order == 1);
    CHECK(r5.certificate->contraction == 4);
    CHECK(r5.certificate->lambda1_base == 10);
    CHECK(r5.certificate->lambda1_delta_coeff == 10);
    CHECK(r5.certificate->lambda2 == 5);

    CertificateResult r6 = rh_certificate(fixture_graph("fix6.lgf"));
    CHECK(!r6.ok());
    REQUIRE(r6.refusal.has_value());
    CHECK(r6.refusal->reason == RefusalReason::pieces_unbounded);

    CertificateResult r4 = rh_certificate(fixture_graph("fix4.lgf"));
    CHECK(!r4.ok());
    REQUIRE(r4.refusal.has_value());
    CHECK(r4.refusal->reason == RefusalReason::condition_fails);
    REQUIRE(r4.refusal->violation.has_value());
}

TEST_CASE("isomorphic components share a class") {
    CertificateResult r3 = rh_certificate(fixture_graph("fix3.lgf"));
    REQUIRE(r3.ok());
    REQUIRE(r3.certificate->classes.size() == 1);
    CHECK(r3.certificate->classes[0].members.size() == 2);
    CHECK(r3.certificate->classes[0].aut_order == 7);
}
