#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "test_support.hpp"
#include "zg/oracle.hpp"
#include "zg/recognizer.hpp"

using namespace zg;

namespace {

GeneratorSet gens(std::vector<Vec3> v) { return GeneratorSet{std::move(v)}; }

}  // namespace

TEST_CASE("general position witnesses come in priority and index order") {
    CHECK_FALSE(check_general_position(gens({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).has_value());

    auto zero = check_general_position(gens({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}));
    REQUIRE(zero.has_value());
    CHECK(zero->kind == DegeneracyWitness::Kind::zero_vector);
    CHECK(zero->indices == std::vector<int>{1});

    auto par = check_general_position(gens({{1, 0, 0}, {-2, 0, 0}, {0, 0, 1}}));
    REQUIRE(par.has_value());
    CHECK(par->kind == DegeneracyWitness::Kind::parallel_pair);
    CHECK(par->indices == std::vector<int>{0, 1});

    auto cop = check_general_position(gens({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}}));
    REQUIRE(cop.has_value());
    CHECK(cop->kind == DegeneracyWitness::Kind::coplanar_triple);
    CHECK(cop->indices == std::vector<int>{0, 1, 2});

    // Zero vectors are reported before the parallel pair they would make.
    auto both = check_general_position(gens({{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}));
    REQUIRE(both.has_value());
    CHECK(both->kind == DegeneracyWitness::Kind::zero_vector);
    CHECK(both->indices == std::vector<int>{0});
}

TEST_CASE("three axis generators build the unit cube") {
    Polyhedron p = build_zonotope(gens({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(p.vertex_count() == 8);
    CHECK(p.face_count() == 6);
    for (const auto& f : p.faces) CHECK(f.size() == 4);
    CHECK(verify_zonohedron(p).ok());

    auto r = recognize(graph_of(p));
    REQUIRE(accepted(r));
    CHECK(std::get<ZoneCertificate>(r).zone_count == 3);
}

TEST_CASE("four generators build a rhombic-dodecahedron-like zonotope") {
    std::vector<Vec3> g = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}};
    Polyhedron p = build_zonotope(gens(g));
    CHECK(p.vertex_count() == 14);
    CHECK(p.face_count() == 12);
    CHECK(verify_zonohedron(p).ok());

    // Every face is a translate of a generator-pair parallelogram: each edge
    // vector is collinear with one of the generators.
    for (const auto& f : p.faces) {
        REQUIRE(f.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            Vec3 e = p.vertices[static_cast<std::size_t>(f[(i + 1) % 4])] -
                     p.vertices[static_cast<std::size_t>(f[i])];
            bool along_generator = false;
            for (const Vec3& gen : g)
                if (collinear(e, gen)) along_generator = true;
            CHECK(along_generator);
        }
    }

    auto r = recognize(graph_of(p));
    REQUIRE(accepted(r));
    CHECK(std::get<ZoneCertificate>(r).zone_count == 4);
}

TEST_CASE("build_zonotope rejects degenerate generator sets") {
    CHECK(contains(
        input_error_of([] { build_zonotope(gens({{1, 0, 0}, {0, 0, 0}, {0, 0, 1}})); }),
        "generator 1 is zero"));
    CHECK(contains(
        input_error_of([] { build_zonotope(gens({{1, 0, 0}, {3, 0, 0}, {0, 0, 1}})); }),
        "generators 0 and 1 are parallel"));
    CHECK(contains(
        input_error_of(
            [] { build_zonotope(gens({{1, 0, 0}, {0, 1, 0}, {2, 3, 0}, {0, 0, 1}})); }),
        "generators 0, 1, 2 are coplanar"));
    CHECK(contains(input_error_of([] { build_zonotope(gens({{1, 0, 0}, {0, 1, 0}})); }),
                   "at least 3 generators"));
}

TEST_CASE("graph_of recovers rotations that start at the smallest neighbor") {
    Polyhedron p = build_zonotope(gens({{3, 1, 0}, {0, 2, 1}, {1, 0, 2}}));
    RotationGraph g = graph_of(p);
    g.validate();
    CHECK(g.n == static_cast<int>(p.vertex_count()));
    for (const auto& rot : g.rot) {
        REQUIRE_FALSE(rot.empty());
        CHECK(rot[0] == *std::min_element(rot.begin(), rot.end()));
    }
    // Deterministic on repeat.
    RotationGraph g2 = graph_of(p);
    CHECK(g.rot == g2.rot);
}

TEST_CASE("graph_of rejects inconsistent or unclosed face complexes") {
    Polyhedron disagree;
    disagree.vertices.assign(4, Vec3{});
    disagree.faces = {{0, 1, 2}, {0, 1, 3}};
    CHECK(contains(input_error_of([&] { graph_of(disagree); }),
                   "disagree about the order around vertex"));

    Polyhedron unused;
    unused.vertices.assign(5, Vec3{});
    unused.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
    CHECK(contains(input_error_of([&] { graph_of(unused); }), "vertex 4 appears in no face"));

    Polyhedron open_surface;
    open_surface.vertices.assign(3, Vec3{});
    open_surface.faces = {{0, 1, 2}};
    CHECK(contains(input_error_of([&] { graph_of(open_surface); }),
                   "do not close into a cycle"));

    Polyhedron pinched;
    pinched.vertices.assign(5, Vec3{});
    pinched.faces = {{0, 1, 2}, {0, 2, 1}, {0, 3, 4}, {0, 4, 3}};
    CHECK(contains(input_error_of([&] { graph_of(pinched); }), "form more than one cycle"));

    Polyhedron out_of_range;
    out_of_range.vertices.assign(3, Vec3{});
    out_of_range.faces = {{0, 1, 7}};
    CHECK(contains(input_error_of([&] { graph_of(out_of_range); }), "out of range"));
}

TEST_CASE("sample_generators is deterministic, bounded and in general position") {
    GeneratorSet a = sample_generators(5, 42);
    GeneratorSet b = sample_generators(5, 42);
    REQUIRE(a.generators.size() == 5);
    CHECK(a.generators == b.generators);
    CHECK(sample_generators(5, 43).generators != a.generators);

    for (int m : {3, 6, 15}) {
        for (uint64_t seed : {1u, 9u}) {
            GeneratorSet s = sample_generators(m, seed);
            CHECK(s.generators.size() == static_cast<std::size_t>(m));
            CHECK_FALSE(check_general_position(s).has_value());
            long bound = m <= 12 ? 20 : 50;
            for (const Vec3& v : s.generators) {
                CHECK(abs(v.x) <= bound);
                CHECK(abs(v.y) <= bound);
                CHECK(abs(v.z) <= bound);
            }
        }
    }

    CHECK(contains(input_error_of([] { sample_generators(2, 1); }), "at least 3"));
}

TEST_CASE("sampled zonotopes verify and their graphs are accepted") {
    for (int m : {3, 5}) {
        CAPTURE(m);
        Polyhedron p = build_zonotope(sample_generators(m, 2024));
        CHECK(p.face_count() == static_cast<std::size_t>(m * (m - 1)));
        CHECK(p.vertex_count() == static_cast<std::size_t>(m * (m - 1) + 2));
        VerifyReport rep = verify_zonohedron(p);
        CHECK(rep.ok());
        auto r = recognize(graph_of(p));
        REQUIRE(accepted(r));
        CHECK(std::get<ZoneCertificate>(r).zone_count == m);
    }
}
