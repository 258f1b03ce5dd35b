// grsc: decides graphical small cancellation for labelled graphs, extracts
// presentations, verifies metric consequences on Cayley balls, and runs the
// combinatorial diagram calculus. Exit codes: 0 pass, 1 a checked property
// fails, 2 usage or input error, 3 inconclusive (a cap was hit).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "grsc/ball.hpp"
#include "grsc/cancellation.hpp"
#include "grsc/cycles.hpp"
#include "grsc/dehn.hpp"
#include "grsc/diagram.hpp"
#include "grsc/diagram_ops.hpp"
#include "grsc/embed.hpp"
#include "grsc/fill.hpp"
#include "grsc/graph.hpp"
#include "grsc/metric.hpp"
#include "grsc/orbits.hpp"
#include "grsc/pieces.hpp"
#include "grsc/report.hpp"
#include "grsc/strebel.hpp"

namespace {

using grsc::Json;

struct Options {
    int radius = 4;
    int delta = 0;
    int max_len = 0;
    size_t cap_cycles = 100000;
    size_t cap_geodesics = 64;
    uint64_t seed = 0;
    std::string json_path;
    bool quiet = false;
};

struct Out {
    const Options& opt;
    Json report;

    explicit Out(const Options& o, const std::string& command,
                 const std::vector<std::pair<std::string, std::string>>& inputs)
        : opt(o), report(grsc::report_envelope(command, inputs)) {}

    void say(const std::string& line) {
        if (!opt.quiet) std::cout << line << "\n";
    }
    void flush_json() {
        if (!opt.json_path.empty()) grsc::write_json_file(opt.json_path, report);
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) s += " ";
        s += argv[i];
    }
    return s;
}

grsc::LabelledGraph load_graph_checked(const std::string& path, std::string* digest) {
    std::string text = slurp(path);
    *digest = grsc::fnv1a_hex(text);
    grsc::LabelledGraph g = grsc::parse_graph(text);
    auto violations = grsc::validate_reduced(g);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw std::invalid_argument("graph is not reduced: vertex " + std::to_string(v.vertex) +
                                    " has repeated outgoing letter " +
                                    grsc::format_letter(g.alphabet, v.letter));
    }
    return g;
}

grsc::Diagram load_diagram_checked(const std::string& path, std::string* digest) {
    std::string text = slurp(path);
    *digest = grsc::fnv1a_hex(text);
    return grsc::parse_diagram_string(text);
}

const char* refusal_text(grsc::RefusalReason r) {
    switch (r) {
        case grsc::RefusalReason::condition_fails: return "small cancellation condition fails";
        case grsc::RefusalReason::pieces_unbounded: return "pieces are unbounded";
        case grsc::RefusalReason::inconclusive: return "inconclusive: enumeration cap hit";
    }
    return "unknown";
}

// ---------------------------------------------------------------- commands

int cmd_check(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::Gr16Verdict v = grsc::check_gr16(g, opt.cap_cycles);
    Out out(opt, cmdline, {{path, digest}});
    out.report["gr16"] = grsc::json_gr16(g.alphabet, v);
    out.flush_json();
    if (!v.conclusive) {
        out.say("inconclusive: simple cycle cap hit");
        return 3;
    }
    if (v.holds) {
        out.say("holds: strict sixth condition satisfied");
        if (v.piece_bound.finite())
            out.say("piece bound " + std::to_string(v.piece_bound.max_len));
        return 0;
    }
    out.say("fails");
    if (v.violation) {
        out.say("cycle: " + grsc::format_word(g.alphabet, v.violation->cycle_word));
        out.say("piece: " + grsc::format_word(g.alphabet, v.violation->piece));
    }
    return 1;
}

int cmd_pieces(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::OrbitTable orbits = grsc::aut_orbits(g);
    grsc::PieceBound b = grsc::max_piece_length(g, orbits);
    Out out(opt, cmdline, {{path, digest}});
    out.report["piece_bound"] = grsc::json_piece_bound(g.alphabet, b);
    if (opt.max_len > 0 && b.finite()) {
        Json list = Json::array();
        for (const grsc::Word& w : grsc::enumerate_pieces(g, orbits, opt.max_len))
            list.push_back(grsc::format_word(g.alphabet, w));
        out.report["pieces"] = list;
    }
    out.flush_json();
    if (b.finite()) {
        out.say("pieces bounded, max length " + std::to_string(b.max_len));
        if (b.max_len > 0) out.say("longest: " + grsc::format_word(g.alphabet, b.witness));
        return 0;
    }
    out.say("pieces unbounded, pumpable word " + grsc::format_word(g.alphabet, b.witness));
    return 1;
}

int cmd_presentation(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::Presentation p = grsc::presentation(g, opt.cap_cycles);
    Out out(opt, cmdline, {{path, digest}});
    out.report["presentation"] = grsc::json_presentation(p);
    out.flush_json();
    std::string alpha;
    for (const std::string& n : p.alphabet.names) alpha += (alpha.empty() ? "" : " ") + n;
    out.say("alphabet: " + alpha);
    for (const grsc::Word& r : p.relators) out.say("relator: " + grsc::format_word(p.alphabet, r));
    return p.capped ? 3 : 0;
}

int cmd_reduce(const Options& opt, const std::string& cmdline, const std::string& path,
               const std::string& word_text, bool decide_trivial) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::Word w = grsc::parse_word(g.alphabet, word_text);
    grsc::Gr16Verdict verdict = grsc::check_gr16(g, opt.cap_cycles);
    grsc::Presentation p = grsc::presentation(g, opt.cap_cycles);
    bool heuristic = !verdict.holds || !verdict.conclusive || p.capped;
    grsc::DehnReducer reducer(p);
    grsc::Word reduced = reducer.reduce(w);
    Out out(opt, cmdline, {{path, digest}});
    out.report["word"] = grsc::format_word(g.alphabet, w);
    out.report["reduced"] = grsc::format_word(g.alphabet, reduced);
    out.report["trivial"] = reduced.empty();
    out.report["heuristic"] = heuristic;
    out.flush_json();
    if (heuristic) out.say("warning: small cancellation hypothesis not confirmed, heuristic answer");
    if (decide_trivial) {
        out.say(reduced.empty() ? "trivial" : "not trivial");
        if (reduced.empty()) return 0;
        return heuristic ? 3 : 1;
    }
    out.say(reduced.empty() ? "(empty word)" : grsc::format_word(g.alphabet, reduced));
    return 0;
}

int cmd_ball(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::Presentation p = grsc::presentation(g, opt.cap_cycles);
    Out out(opt, cmdline, {{path, digest}});
    try {
        grsc::Ball b = grsc::cayley_ball(p, opt.radius);
        out.report["ball"] = grsc::json_ball(b);
        out.flush_json();
        out.say("radius " + std::to_string(b.radius()) + ": " + std::to_string(b.n()) +
                " elements" + (b.exact() ? "" : " (identification heuristic at this radius)"));
        return 0;
    } catch (const std::runtime_error& e) {
        out.report["error"] = e.what();
        out.flush_json();
        out.say(std::string("inconclusive: ") + e.what());
        return 3;
    }
}

int cmd_verify(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::Gr16Verdict verdict = grsc::check_gr16(g, opt.cap_cycles);
    Out out(opt, cmdline, {{path, digest}});
    out.report["gr16"] = grsc::json_gr16(g.alphabet, verdict);
    if (!verdict.conclusive) {
        out.flush_json();
        out.say("inconclusive: simple cycle cap hit");
        return 3;
    }
    if (!verdict.holds || !verdict.piece_bound.finite()) {
        out.flush_json();
        out.say("refused: metric verification wants the small cancellation hypothesis");
        return 1;
    }
    int m = verdict.piece_bound.max_len;
    grsc::Presentation p = grsc::presentation(g, opt.cap_cycles);
    grsc::SampleOptions sample;
    sample.seed = opt.seed;
    sample.geodesic_cap = opt.cap_geodesics;
    try {
        grsc::Ball b = grsc::cayley_ball(p, opt.radius);
        out.report["ball"] = grsc::json_ball(b);
        grsc::Components comps = grsc::components(g);
        bool pass = true;
        Json comp_list = Json::array();
        std::vector<grsc::EmbeddedComponent> embeds;
        for (int c = 0; c < comps.count(); ++c) {
            int base = comps.members[c].front();
            grsc::EmbeddedComponent a = grsc::embed_component(g, comps, c, base, b.identity(), b);
            grsc::EmbedCheckReport er = grsc::check_embedding(g, a, b, opt.cap_geodesics);
            grsc::ContractionReport cr = grsc::verify_contraction(b, a, m, sample);
            grsc::Lambda2Report l2 = grsc::verify_lambda2_suite(b, a, m, sample);
            pass = pass && a.injective && a.consistent && cr.pass && l2.pass &&
                   er.isometry_violations == 0 && er.convexity_violations == 0;
            Json cj;
            cj["embedding"] = grsc::json_embedding(a, er);
            cj["contraction"] = grsc::json_contraction(cr);
            cj["lambda2"] = grsc::json_lambda2(l2);
            comp_list.push_back(cj);
            embeds.push_back(std::move(a));
        }
        out.report["components"] = comp_list;
        grsc::OrbitTable orbits = grsc::aut_orbits(g);
        Json pair_list = Json::array();
        for (size_t i = 0; i < embeds.size(); ++i)
            for (size_t j = i + 1; j < embeds.size(); ++j) {
                grsc::Lambda1Report l1 = grsc::verify_lambda1(
                    b, g, orbits, embeds[i], embeds[j], opt.delta, m);
                pass = pass && l1.pass;
                Json pj;
                pj["components"] = {int(i), int(j)};
                pj["lambda1"] = grsc::json_lambda1(l1);
                pair_list.push_back(pj);
            }
        out.report["lambda1_pairs"] = pair_list;
        out.report["pass"] = pass;
        out.flush_json();
        out.say(pass ? "verified: no violations at this radius"
                     : "violations found, see report");
        return pass ? 0 : 1;
    } catch (const std::runtime_error& e) {
        out.report["error"] = e.what();
        out.flush_json();
        out.say(std::string("inconclusive: ") + e.what());
        return 3;
    }
}

int cmd_certificate(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::CertificateResult res = grsc::rh_certificate(g, opt.cap_cycles);
    Out out(opt, cmdline, {{path, digest}});
    out.report["gr16"] = grsc::json_gr16(g.alphabet, res.verdict);
    if (res.ok()) {
        out.report["verdict"] = "certificate";
        out.report["certificate"] = grsc::json_certificate(g.alphabet, *res.certificate);
        out.flush_json();
        out.say("certificate issued: piece bound " + std::to_string(res.certificate->piece_bound) +
                ", " + std::to_string(res.certificate->classes.size()) + " component class(es)");
        for (const grsc::ComponentClass& k : res.certificate->classes)
            out.say("class rep " + std::to_string(k.representative) + ": aut order " +
                    std::to_string(k.aut_order));
        return 0;
    }
    out.report["verdict"] = "refused";
    Json rj;
    rj["reason"] = refusal_text(res.refusal->reason);
    rj["detail"] = res.refusal->detail;
    out.report["refusal"] = rj;
    out.flush_json();
    out.say(std::string("refused: ") + refusal_text(res.refusal->reason));
    if (!res.refusal->detail.empty()) out.say(res.refusal->detail);
    return res.refusal->reason == grsc::RefusalReason::inconclusive ? 3 : 1;
}

int cmd_diagram_validate(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::Diagram d = load_diagram_checked(path, &digest);
    grsc::ValidationReport r = grsc::validate_diagram(d);
    Out out(opt, cmdline, {{path, digest}});
    out.report["validation"] = grsc::json_validation(r);
    out.flush_json();
    for (const std::string& v : r.violations) out.say("violation: " + v);
    out.say(std::string("planar: ") + (r.ok ? "yes" : "no"));
    out.say(std::string("interior conditions (3,7): ") + (r.three_seven ? "yes" : "no"));
    if (r.ngon.has_value())
        out.say(std::string("polygon conditions: ") + (*r.ngon ? "yes" : "no"));
    bool pass = r.ok && r.three_seven && (!r.ngon.has_value() || *r.ngon);
    return pass ? 0 : 1;
}

int cmd_diagram_classify(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::Diagram d = load_diagram_checked(path, &digest);
    Out out(opt, cmdline, {{path, digest}});
    try {
        grsc::StrebelForm f = grsc::classify_strebel(d);
        out.report["form"] = grsc::strebel_name(f);
        out.flush_json();
        out.say(std::string("form ") + grsc::strebel_name(f));
        return 0;
    } catch (const std::runtime_error& e) {
        out.report["error"] = e.what();
        out.flush_json();
        out.say(std::string("no form: ") + e.what());
        return 1;
    }
}

int cmd_diagram_reduce(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::Diagram d = load_diagram_checked(path, &digest);
    Out out(opt, cmdline, {{path, digest}});
    auto deg = grsc::is_degenerate(d);
    if (deg) {
        Json dj;
        dj["side"] = deg->side;
        dj["vertex"] = deg->vertex;
        out.report["degenerate"] = dj;
        out.say("degenerate: sides " + std::to_string(deg->side) + " and next merge at vertex " +
                std::to_string(deg->vertex));
    } else {
        out.report["degenerate"] = nullptr;
        out.say("non-degenerate");
    }
    std::vector<grsc::Reduction> reds = grsc::reduce_polygon(d);
    Json list = Json::array();
    for (const grsc::Reduction& r : reds) {
        Json rj;
        rj["kind"] = r.kind == grsc::Reduction::Kind::vertex ? "vertex" : "face";
        if (r.kind == grsc::Reduction::Kind::vertex) {
            rj["vertex"] = r.vertex;
        } else {
            rj["face"] = r.face;
            rj["arcs"] = {r.arc_a, r.arc_b};
        }
        rj["part1"] = grsc::serialize_diagram(r.part1);
        rj["part2"] = grsc::serialize_diagram(r.part2);
        list.push_back(rj);
    }
    out.report["reductions"] = list;
    out.flush_json();
    out.say(reds.empty() ? "irreducible" : std::to_string(reds.size()) + " reduction(s)");
    return 0;
}

int cmd_diagram_cross(const Options& opt, const std::string& cmdline, const std::string& path) {
    std::string digest;
    grsc::Diagram d = load_diagram_checked(path, &digest);
    Out out(opt, cmdline, {{path, digest}});
    try {
        grsc::CrossingPath cp = grsc::quad_crossing_path(d);
        out.report["side_a"] = cp.side_a;
        out.report["side_b"] = cp.side_b;
        out.report["arcs"] = cp.arcs;
        out.flush_json();
        out.say("sides " + std::to_string(cp.side_a) + " and " + std::to_string(cp.side_b) +
                " joined through " + std::to_string(cp.arcs.size()) + " interior arc(s)");
        return 0;
    } catch (const std::runtime_error& e) {
        out.report["error"] = e.what();
        out.flush_json();
        out.say(std::string("failed: ") + e.what());
        return 1;
    }
}

int cmd_fill(const Options& opt, const std::string& cmdline, const std::string& path,
             const std::string& word_text) {
    std::string digest;
    grsc::LabelledGraph g = load_graph_checked(path, &digest);
    grsc::Word w = grsc::parse_word(g.alphabet, word_text);
    grsc::Presentation p = grsc::presentation(g, opt.cap_cycles);
    grsc::Diagram d = grsc::fill_word(p, w);  // invalid_argument when not trivial
    grsc::OrbitTable orbits = grsc::aut_orbits(g);
    std::vector<int> bad = grsc::non_piece_arcs(d, g, orbits);
    grsc::DiagramAnalysis a = grsc::analyze(d);
    Out out(opt, cmdline, {{path, digest}});
    out.report["word"] = grsc::format_word(g.alphabet, w);
    out.report["faces"] = int(d.faces.size());
    out.report["boundary_matches"] = grsc::boundary_word(d) == w;
    out.report["euler_ok"] = a.euler_ok;
    out.report["interior_arcs"] = int(a.arcs.size()) - int(std::count_if(
        a.arcs.begin(), a.arcs.end(), [](const grsc::DiagramArc& x) { return x.exterior; }));
    out.report["non_piece_arcs"] = bad;
    out.report["diagram"] = grsc::serialize_diagram(d);
    out.flush_json();
    out.say(std::to_string(d.faces.size()) + " face(s), " +
            (bad.empty() ? "all interior arcs are pieces"
                         : std::to_string(bad.size()) + " interior arc(s) fail the piece check"));
    if (!opt.quiet) std::cout << grsc::serialize_diagram(d);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphical small cancellation checker"};
    app.require_subcommand(1);
    Options opt;

    std::string graph_path, diagram_path, word_text;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--json", opt.json_path, "write the machine readable report here");
        c->add_flag("--quiet", opt.quiet, "suppress normal output");
        c->add_option("--cap-cycles", opt.cap_cycles, "simple cycle enumeration cap");
    };

    CLI::App* c_check = app.add_subcommand("check", "decide the strict sixth condition");
    c_check->add_option("graph", graph_path, "labelled graph (.lgf)")->required();
    add_common(c_check);

    CLI::App* c_pieces = app.add_subcommand("pieces", "piece bound and optional enumeration");
    c_pieces->add_option("graph", graph_path)->required();
    c_pieces->add_option("--max-len", opt.max_len, "list pieces up to this length");
    add_common(c_pieces);

    CLI::App* c_pres = app.add_subcommand("presentation", "extract the cycle presentation");
    c_pres->add_option("graph", graph_path)->required();
    add_common(c_pres);

    CLI::App* c_reduce = app.add_subcommand("reduce", "rewrite a word to irreducible form");
    c_reduce->add_option("graph", graph_path)->required();
    c_reduce->add_option("word", word_text, "space separated letters, '-' prefix inverts")
        ->required();
    add_common(c_reduce);

    CLI::App* c_triv = app.add_subcommand("istrivial", "decide triviality by rewriting");
    c_triv->add_option("graph", graph_path)->required();
    c_triv->add_option("word", word_text)->required();
    add_common(c_triv);

    CLI::App* c_ball = app.add_subcommand("ball", "build a Cayley ball");
    c_ball->add_option("graph", graph_path)->required();
    c_ball->add_option("--radius", opt.radius, "ball radius");
    add_common(c_ball);

    CLI::App* c_verify = app.add_subcommand("verify", "metric consequences on a Cayley ball");
    c_verify->add_option("graph", graph_path)->required();
    c_verify->add_option("--radius", opt.radius, "ball radius");
    c_verify->add_option("--delta", opt.delta, "hyperbolicity constant for the overlap bound");
    c_verify->add_option("--seed", opt.seed, "sampling seed");
    c_verify->add_option("--cap-geodesics", opt.cap_geodesics, "geodesics per pair");
    add_common(c_verify);

    CLI::App* c_cert = app.add_subcommand("certificate", "relative hyperbolicity certificate");
    c_cert->add_option("graph", graph_path)->required();
    add_common(c_cert);

    CLI::App* c_diag = app.add_subcommand("diagram", "combinatorial diagram calculus");
    c_diag->require_subcommand(1);
    CLI::App* c_dv = c_diag->add_subcommand("validate", "planarity and polygon conditions");
    c_dv->add_option("diagram", diagram_path, "diagram file (.dgf)")->required();
    add_common(c_dv);
    CLI::App* c_dc = c_diag->add_subcommand("classify", "structural form of a bigon or triangle");
    c_dc->add_option("diagram", diagram_path)->required();
    add_common(c_dc);
    CLI::App* c_dr = c_diag->add_subcommand("reduce", "degeneracy and polygon reductions");
    c_dr->add_option("diagram", diagram_path)->required();
    add_common(c_dr);
    CLI::App* c_dx = c_diag->add_subcommand("cross", "crossing path of a quadrangle");
    c_dx->add_option("diagram", diagram_path)->required();
    add_common(c_dx);

    CLI::App* c_fill = app.add_subcommand("fill", "disc diagram for a trivial word");
    c_fill->add_option("graph", graph_path)->required();
    c_fill->add_option("word", word_text)->required();
    add_common(c_fill);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string cmdline = join_args(argc, argv);
    auto t0 = std::chrono::steady_clock::now();
    int code = 2;
    try {
        if (app.got_subcommand(c_check)) code = cmd_check(opt, cmdline, graph_path);
        else if (app.got_subcommand(c_pieces)) code = cmd_pieces(opt, cmdline, graph_path);
        else if (app.got_subcommand(c_pres)) code = cmd_presentation(opt, cmdline, graph_path);
        else if (app.got_subcommand(c_reduce)) code = cmd_reduce(opt, cmdline, graph_path, word_text, false);
        else if (app.got_subcommand(c_triv)) code = cmd_reduce(opt, cmdline, graph_path, word_text, true);
        else if (app.got_subcommand(c_ball)) code = cmd_ball(opt, cmdline, graph_path);
        else if (app.got_subcommand(c_verify)) code = cmd_verify(opt, cmdline, graph_path);
        else if (app.got_subcommand(c_cert)) code = cmd_certificate(opt, cmdline, graph_path);
        else if (app.got_subcommand(c_diag)) {
            if (c_diag->got_subcommand(c_dv)) code = cmd_diagram_validate(opt, cmdline, diagram_path);
            else if (c_diag->got_subcommand(c_dc)) code = cmd_diagram_classify(opt, cmdline, diagram_path);
            else if (c_diag->got_subcommand(c_dr)) code = cmd_diagram_reduce(opt, cmdline, diagram_path);
            else if (c_diag->got_subcommand(c_dx)) code = cmd_diagram_cross(opt, cmdline, diagram_path);
        } else if (app.got_subcommand(c_fill)) {
            code = cmd_fill(opt, cmdline, graph_path, word_text);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "timing: " << ms << " ms\n";
    return code;
}
