#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zg/io.hpp"
#include "zg/oracle.hpp"
#include "zg/polyhedron.hpp"
#include "zg/realizer.hpp"
#include "zg/recognizer.hpp"
#include "zg/reducer.hpp"

namespace {

using nlohmann::json;

int off_precision() {
    const char* s = std::getenv("ZG_PRECISION");
    if (!s || !*s) return 12;
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 0 || v > 1000)
        throw zg::InputError("ZG_PRECISION must be an integer between 0 and 1000");
    return static_cast<int>(v);
}

int cmd_recognize(const std::string& graph_path) {
    zg::RotationGraph g = zg::parse_graph(zg::read_file(graph_path));
    zg::RecognizeResult r = zg::recognize(g);
    std::cout << zg::report_json(g, r) << "\n";
    return zg::accepted(r) ? 0 : 1;
}

int cmd_realize(const std::string& graph_path, const std::string& out_path,
                const std::string& scale_str, const std::string& trace_path) {
    zg::RotationGraph g = zg::parse_graph(zg::read_file(graph_path));
    zg::Rat scale = zg::parse_rational(scale_str);
    if (zg::sgn(scale) <= 0) throw zg::InputError("--scale must be positive");
    zg::RecognizeResult r = zg::recognize(g);
    if (!zg::accepted(r)) {
        std::cout << zg::report_json(g, r) << "\n";
        return 1;
    }
    const zg::ZoneCertificate& cert = std::get<zg::ZoneCertificate>(r);
    zg::RealizationLog log;
    zg::RealizeSearchResult rs = zg::realize_search(g, cert, scale, &log);
    zg::VerifyReport vr = zg::verify_zonohedron(rs.poly);
    if (!vr.ok()) {
        std::cerr << "internal error: realization failed verification\n" << vr.summary();
        return 3;
    }
    zg::write_file(out_path, zg::emit_off(rs.poly, off_precision()));
    if (!trace_path.empty()) zg::write_file(trace_path, zg::trace_json(rs.trace, &log));

    json j;
    j["vertices"] = rs.poly.vertex_count();
    j["faces"] = rs.poly.face_count();
    j["zone_count"] = cert.zone_count;
    j["expansions"] = rs.trace.steps.size();
    j["direction_fallbacks"] = log.fallback_count;
    j["direction_backtracks"] = log.backtrack_count;
    j["order_retries"] = rs.orders_tried - 1;
    j["output"] = out_path;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_generate(int m, uint64_t seed, const std::string& out_path,
                 const std::string& off_path) {
    zg::GeneratorSet gens = zg::sample_generators(m, seed);
    zg::Polyhedron z = zg::build_zonotope(gens);
    zg::RotationGraph g = zg::graph_of(z);
    zg::write_file(out_path, zg::emit_graph(g));
    if (!off_path.empty()) zg::write_file(off_path, zg::emit_off(z, off_precision()));

    json j;
    j["m"] = m;
    j["seed"] = seed;
    j["n"] = g.n;
    j["e"] = g.edge_count();
    j["f"] = z.face_count();
    j["output"] = out_path;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_stats(const std::string& graph_path) {
    zg::RotationGraph g = zg::parse_graph(zg::read_file(graph_path));
    zg::RecognizeResult r = zg::recognize(g);
    if (!zg::accepted(r)) {
        std::cout << zg::report_json(g, r) << "\n";
        return 1;
    }
    zg::Stats s = zg::compute_stats(g, std::get<zg::ZoneCertificate>(r));
    std::cout << zg::stats_json(s) << "\n";
    return 0;
}

int cmd_verify(const std::string& off_path) {
    zg::Polyhedron p = zg::parse_off(zg::read_file(off_path));
    zg::VerifyReport vr = zg::verify_zonohedron(p);
    json j;
    j["ok"] = vr.ok();
    j["vertices"] = p.vertex_count();
    j["faces"] = p.face_count();
    j["convexity_tests"] = vr.convexity_tests;
    json viol = json::array();
    for (const zg::Violation& v : vr.violations) {
        json vj;
        vj["check"] = v.check;
        if (v.face >= 0) vj["face"] = v.face;
        if (v.vertex >= 0) vj["vertex"] = v.vertex;
        vj["detail"] = v.detail;
        viol.push_back(std::move(vj));
    }
    j["violations"] = std::move(viol);
    std::cout << j.dump(2) << "\n";
    return vr.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recognize zonohedron graphs and realize them as convex polyhedra"};
    app.require_subcommand(1);

    std::string graph_path, out_path, off_path, trace_path, scale_str = "1";
    int m = 0;
    uint64_t seed = 0;

    CLI::App* rec = app.add_subcommand("recognize", "decide whether a graph is a zonohedron graph");
    rec->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* rea = app.add_subcommand("realize", "build a convex zonohedron with the given graph");
    rea->add_option("graph", graph_path, "graph JSON file")->required();
    rea->add_option("-o,--output", out_path, "OFF output path")->required();
    rea->add_option("--scale", scale_str, "edge scale, a positive rational");
    rea->add_option("--trace", trace_path, "write the reduction/realization trace as JSON");

    CLI::App* gen = app.add_subcommand("generate", "sample a zonotope graph from random generators");
    gen->add_option("-m", m, "number of generators (at least 3)")->required();
    gen->add_option("--seed", seed, "RNG seed; mandatory so runs are reproducible")->required();
    gen->add_option("-o,--output", out_path, "graph JSON output path")->required();
    gen->add_option("--off", off_path, "also write the oracle zonotope as OFF");

    CLI::App* sta = app.add_subcommand("stats", "zone statistics of an accepted graph");
    sta->add_option("graph", graph_path, "graph JSON file")->required();

    CLI::App* ver = app.add_subcommand("verify", "check that an OFF file is a convex zonohedron");
    ver->add_option("poly", off_path, "OFF file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (rec->parsed()) return cmd_recognize(graph_path);
        if (rea->parsed()) return cmd_realize(graph_path, out_path, scale_str, trace_path);
        if (gen->parsed()) return cmd_generate(m, seed, out_path, off_path);
        if (sta->parsed()) return cmd_stats(graph_path);
        if (ver->parsed()) return cmd_verify(off_path);
    } catch (const zg::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
