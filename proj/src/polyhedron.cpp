#include "zg/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zg/rotation_graph.hpp"
#include "zg/zones.hpp"

namespace zg {

Vec3 face_normal(const Polyhedron& p, int f) {
    const auto& cyc = p.faces[static_cast<std::size_t>(f)];
    const Vec3& a = p.vertices[static_cast<std::size_t>(cyc[0])];
    const Vec3& b = p.vertices[static_cast<std::size_t>(cyc[1])];
    const Vec3& c = p.vertices[static_cast<std::size_t>(cyc[2])];
    return cross(b - a, c - b);
}

std::string VerifyReport::summary() const {
    if (ok()) return "clean";
    std::string s = std::to_string(violations.size()) + " violation(s); first: " +
                    violations[0].check + " (" + violations[0].detail + ")";
    return s;
}

namespace {

void add(VerifyReport& r, std::string check, int face, int vertex, std::string detail) {
    r.violations.push_back({std::move(check), face, vertex, std::move(detail)});
}

}  // namespace

VerifyReport verify_zonohedron(const Polyhedron& p, bool parallel) {
    VerifyReport r;
    const int V = static_cast<int>(p.vertex_count());
    const int F = static_cast<int>(p.face_count());

    bool indices_ok = true;
    for (int f = 0; f < F; ++f) {
        for (int v : p.faces[static_cast<std::size_t>(f)]) {
            if (v < 0 || v >= V) {
                add(r, "structure", f, v, "face references vertex out of range");
                indices_ok = false;
            }
        }
    }
    if (!indices_ok) return r;

    for (int f = 0; f < F; ++f)
        if (p.faces[static_cast<std::size_t>(f)].size() != 4)
            add(r, "face_size", f, -1,
                "face has " + std::to_string(p.faces[static_cast<std::size_t>(f)].size()) +
                    " vertices, expected 4");
    if (!r.ok()) return r;

    // Parallelogram test: opposite edge vectors must cancel. That also forces
    // planarity, so no separate coplanarity check is needed.
    std::vector<Vec3> normals(static_cast<std::size_t>(F));
    for (int f = 0; f < F; ++f) {
        const auto& cyc = p.faces[static_cast<std::size_t>(f)];
        const Vec3& a = p.vertices[static_cast<std::size_t>(cyc[0])];
        const Vec3& b = p.vertices[static_cast<std::size_t>(cyc[1])];
        const Vec3& c = p.vertices[static_cast<std::size_t>(cyc[2])];
        const Vec3& d = p.vertices[static_cast<std::size_t>(cyc[3])];
        if ((a + c) != (b + d)) add(r, "parallelogram", f, -1, "opposite edges do not match");
        normals[static_cast<std::size_t>(f)] = cross(b - a, c - b);
        if (is_zero(normals[static_cast<std::size_t>(f)]))
            add(r, "degenerate_face", f, -1, "face normal vanishes");
    }
    if (!r.ok()) return r;

    for (int v = 0; v < V; ++v)
        for (int w = v + 1; w < V; ++w)
            if (p.vertices[static_cast<std::size_t>(v)] == p.vertices[static_cast<std::size_t>(w)])
                add(r, "duplicate_vertex", -1, w,
                    "vertices " + std::to_string(v) + " and " + std::to_string(w) + " coincide");

    // Convex position: every vertex not on a face lies strictly on the
    // inner side of that face's plane. This is the quadratic scan; faces are
    // independent, so it parallelizes cleanly.
    std::vector<std::vector<Violation>> per_face(static_cast<std::size_t>(F));
    std::vector<std::size_t> tests(static_cast<std::size_t>(F), 0);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int f = 0; f < F; ++f) {
            const auto& cyc = p.faces[static_cast<std::size_t>(f)];
            const Vec3& base = p.vertices[static_cast<std::size_t>(cyc[0])];
            for (int v = 0; v < V; ++v) {
                ++tests[static_cast<std::size_t>(f)];
                int s = sgn(dot(normals[static_cast<std::size_t>(f)],
                                p.vertices[static_cast<std::size_t>(v)] - base));
                bool member = std::find(cyc.begin(), cyc.end(), v) != cyc.end();
                if (member && s != 0)
                    per_face[static_cast<std::size_t>(f)].push_back(
                        {"convexity", f, v, "face vertex off its own plane"});
                if (!member && s >= 0)
                    per_face[static_cast<std::size_t>(f)].push_back(
                        {"convexity", f, v,
                         s == 0 ? "non-member vertex on face plane"
                                : "vertex on the outer side of a face plane"});
            }
        }
    } else {
        for (int f = 0; f < F; ++f) {
            const auto& cyc = p.faces[static_cast<std::size_t>(f)];
            const Vec3& base = p.vertices[static_cast<std::size_t>(cyc[0])];
            for (int v = 0; v < V; ++v) {
                ++tests[static_cast<std::size_t>(f)];
                int s = sgn(dot(normals[static_cast<std::size_t>(f)],
                                p.vertices[static_cast<std::size_t>(v)] - base));
                bool member = std::find(cyc.begin(), cyc.end(), v) != cyc.end();
                if (member && s != 0)
                    per_face[static_cast<std::size_t>(f)].push_back(
                        {"convexity", f, v, "face vertex off its own plane"});
                if (!member && s >= 0)
                    per_face[static_cast<std::size_t>(f)].push_back(
                        {"convexity", f, v,
                         s == 0 ? "non-member vertex on face plane"
                                : "vertex on the outer side of a face plane"});
            }
        }
    }
    for (int f = 0; f < F; ++f) {
        r.convexity_tests += tests[static_cast<std::size_t>(f)];
        for (auto& v : per_face[static_cast<std::size_t>(f)]) r.violations.push_back(std::move(v));
    }

    // Zonohedra have centrally symmetric face vectors: each primitive normal
    // direction occurs once, and its negation occurs once.
    std::map<Vec3, std::vector<int>, Vec3Less> by_normal;
    for (int f = 0; f < F; ++f)
        by_normal[primitive(normals[static_cast<std::size_t>(f)])].push_back(f);
    for (const auto& [n, fs] : by_normal) {
        if (fs.size() > 1)
            add(r, "normal_pairing", fs[1], -1,
                "faces " + std::to_string(fs[0]) + " and " + std::to_string(fs[1]) +
                    " share a normal direction");
        if (!by_normal.count(-n))
            add(r, "normal_pairing", fs[0], -1, "no face with the opposite normal");
    }

    auto fs = face_structure_from_faces(p.faces);
    if (!fs) {
        add(r, "edge_structure", -1, -1,
            "faces do not form a closed oriented surface (an edge is not used exactly "
            "once in each direction)");
        return r;
    }
    long euler = static_cast<long>(V) - static_cast<long>(fs->edge_count()) +
                 static_cast<long>(fs->face_count());
    if (euler != 2)
        add(r, "euler", -1, -1, "V - E + F = " + std::to_string(euler) + ", expected 2");

    auto traced = trace_zones(*fs);
    if (std::holds_alternative<ZoneDefect>(traced)) {
        add(r, "zone_structure", std::get<ZoneDefect>(traced).face, -1,
            "faces do not decompose into simple zones");
        return r;
    }
    const auto& zones = std::get<ZoneDecomposition>(traced).zones;
    // Guards against flat degenerate surfaces (a doubled parallelogram passes
    // every pointwise check above): a convex zonohedron spans three edge
    // directions, so it has at least three zones.
    if (zones.size() < 3)
        add(r, "zone_structure", -1, -1,
            "only " + std::to_string(zones.size()) + " zone(s); a zonohedron has at least 3");
    for (const Zone& z : zones) {
        const auto& [a0, b0] = z.zone_edges[0];
        Vec3 axis = p.vertices[static_cast<std::size_t>(b0)] - p.vertices[static_cast<std::size_t>(a0)];
        for (const auto& [a, b] : z.zone_edges) {
            Vec3 e = p.vertices[static_cast<std::size_t>(b)] - p.vertices[static_cast<std::size_t>(a)];
            if (!collinear(axis, e)) {
                add(r, "zone_axis", z.face_cycle[0], a,
                    "zone " + std::to_string(z.id) + " has a non-parallel edge");
                break;
            }
        }
    }
    return r;
}

}  // namespace zg
