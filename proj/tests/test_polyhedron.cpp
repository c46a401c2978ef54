#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "zg/oracle.hpp"
#include "zg/realizer.hpp"

using namespace zg;

namespace {

std::size_t count_check(const VerifyReport& r, const std::string& check) {
    return static_cast<std::size_t>(
        std::count_if(r.violations.begin(), r.violations.end(),
                      [&](const Violation& v) { return v.check == check; }));
}

// Two translated copies of the unit cube as one face list.
Polyhedron disjoint_boxes() {
    Polyhedron a = cube_base(1);
    Polyhedron b = cube_base(1);
    for (Vec3& v : b.vertices) v += Vec3(10, 10, 10);
    Polyhedron both = a;
    int off = static_cast<int>(a.vertex_count());
    both.vertices.insert(both.vertices.end(), b.vertices.begin(), b.vertices.end());
    for (const auto& f : b.faces) {
        std::vector<int> shifted;
        for (int v : f) shifted.push_back(v + off);
        both.faces.push_back(shifted);
    }
    return both;
}

}  // namespace

TEST_CASE("face_normal follows the counterclockwise convention") {
    Polyhedron p = cube_base(1);
    CHECK(face_normal(p, 0) == Vec3(0, 0, -1));
    CHECK(face_normal(p, 1) == Vec3(0, 0, 1));
    CHECK(face_normal(p, 2) == Vec3(0, -1, 0));
}

TEST_CASE("the unit cube verifies cleanly") {
    Polyhedron p = cube_base(1);
    VerifyReport r = verify_zonohedron(p);
    CHECK(r.ok());
    CHECK(r.summary() == "clean");
    CHECK(r.convexity_tests == 48);  // 6 faces x 8 vertices

    VerifyReport serial = verify_zonohedron(p, false);
    CHECK(serial.ok());
    CHECK(serial.convexity_tests == 48);
}

TEST_CASE("parallel and serial verification agree on good and bad inputs") {
    Polyhedron good = build_zonotope(sample_generators(5, 8));
    VerifyReport pg = verify_zonohedron(good, true);
    VerifyReport sg = verify_zonohedron(good, false);
    CHECK(pg.ok());
    CHECK(sg.ok());
    CHECK(pg.convexity_tests == sg.convexity_tests);
    CHECK(pg.convexity_tests == good.face_count() * good.vertex_count());

    Polyhedron bad = disjoint_boxes();
    VerifyReport pb = verify_zonohedron(bad, true);
    VerifyReport sb = verify_zonohedron(bad, false);
    CHECK(pb.violations.size() == sb.violations.size());
    CHECK(count_check(pb, "convexity") == count_check(sb, "convexity"));
}

TEST_CASE("out-of-range face indices stop verification immediately") {
    Polyhedron p = cube_base(1);
    p.faces[0][0] = 99;
    VerifyReport r = verify_zonohedron(p);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].check == "structure");
    CHECK(r.violations[0].face == 0);
    CHECK(r.convexity_tests == 0);
    CHECK(contains(r.summary(), "1 violation(s); first: structure"));
}

TEST_CASE("non-quadrilateral faces are reported with their size") {
    Polyhedron p = cube_base(1);
    p.faces[0] = {0, 3, 2};
    VerifyReport r = verify_zonohedron(p);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].check == "face_size");
    CHECK(contains(r.violations[0].detail, "3 vertices, expected 4"));
    CHECK(r.convexity_tests == 0);
}

TEST_CASE("a displaced corner breaks exactly its three parallelograms") {
    Polyhedron p = cube_base(1);
    p.vertices[0] += Vec3{Rat(0), Rat(0), Rat(1) / 7};
    VerifyReport r = verify_zonohedron(p);
    REQUIRE(r.violations.size() == 3);
    std::vector<int> faces;
    for (const Violation& v : r.violations) {
        CHECK(v.check == "parallelogram");
        CHECK(v.detail == "opposite edges do not match");
        faces.push_back(v.face);
    }
    std::sort(faces.begin(), faces.end());
    CHECK(faces == std::vector<int>{0, 2, 5});
}

TEST_CASE("a collapsed face cycle has a vanishing normal") {
    Polyhedron p = cube_base(1);
    p.faces[0] = {0, 1, 1, 0};
    VerifyReport r = verify_zonohedron(p);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].check == "degenerate_face");
    CHECK(r.violations[0].detail == "face normal vanishes");
}

TEST_CASE("duplicate vertices and coplanar extras are caught") {
    Polyhedron p = cube_base(1);
    p.vertices.push_back(Vec3(0, 0, 0));  // copy of vertex 0, in no face
    VerifyReport r = verify_zonohedron(p);
    CHECK(count_check(r, "duplicate_vertex") == 1);
    // The copy sits on the three face planes through the origin corner.
    CHECK(count_check(r, "convexity") == 3);
    CHECK(count_check(r, "euler") == 1);
    CHECK(r.violations.size() == 5);
    bool found = false;
    for (const Violation& v : r.violations)
        if (v.check == "duplicate_vertex") {
            CHECK(v.detail == "vertices 0 and 8 coincide");
            found = true;
        }
    CHECK(found);
    for (const Violation& v : r.violations)
        if (v.check == "convexity") CHECK(v.detail == "non-member vertex on face plane");
}

TEST_CASE("two disjoint boxes fail convexity, pairing and the Euler count") {
    VerifyReport r = verify_zonohedron(disjoint_boxes());
    CHECK_FALSE(r.ok());
    // Each box's three far faces see the other box's eight vertices outside.
    CHECK(count_check(r, "convexity") == 48);
    CHECK(count_check(r, "normal_pairing") == 6);
    CHECK(count_check(r, "euler") == 1);
    CHECK(r.violations.size() == 55);
    for (const Violation& v : r.violations)
        if (v.check == "euler") CHECK(v.detail == "V - E + F = 4, expected 2");
}

TEST_CASE("a reversed face flips convexity, pairing and edge structure") {
    Polyhedron p = cube_base(1);
    std::reverse(p.faces[1].begin(), p.faces[1].end());
    VerifyReport r = verify_zonohedron(p);
    CHECK(count_check(r, "convexity") == 4);
    CHECK(count_check(r, "normal_pairing") == 2);
    CHECK(count_check(r, "edge_structure") == 1);
    CHECK(r.violations.size() == 7);
}

TEST_CASE("a missing face is an open surface") {
    Polyhedron p = cube_base(1);
    p.faces.erase(p.faces.begin());
    VerifyReport r = verify_zonohedron(p);
    CHECK(count_check(r, "convexity") == 0);
    CHECK(count_check(r, "normal_pairing") == 1);
    CHECK(count_check(r, "edge_structure") == 1);
    CHECK(r.violations.size() == 2);
    for (const Violation& v : r.violations)
        if (v.check == "edge_structure")
            CHECK(contains(v.detail, "closed oriented surface"));
}

TEST_CASE("a flat doubled parallelogram fails only the zone count") {
    Polyhedron pillow;
    pillow.vertices = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}};
    pillow.faces = {{0, 1, 2, 3}, {0, 3, 2, 1}};
    VerifyReport r = verify_zonohedron(pillow);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].check == "zone_structure");
    CHECK(contains(r.violations[0].detail, "only 2 zone(s)"));
}

TEST_CASE("oracle zonotopes of many sizes verify cleanly") {
    for (int m : {3, 4, 6, 8}) {
        CAPTURE(m);
        Polyhedron p = build_zonotope(sample_generators(m, static_cast<uint64_t>(m) * 31));
        VerifyReport r = verify_zonohedron(p);
        CHECK(r.ok());
        CHECK(r.convexity_tests == p.face_count() * p.vertex_count());
    }
}
