#include <doctest.h>

#include <algorithm>
#include <string>
#include <variant>
#include <vector>

#include "test_support.hpp"
#include "zg/recognizer.hpp"

using namespace zg;

namespace {

Rejection rejection_of(const RecognizeResult& r) {
    REQUIRE_FALSE(accepted(r));
    return std::get<Rejection>(r);
}

}  // namespace

TEST_CASE("the cube graph is accepted with three zones of length four") {
    auto r = recognize(load_fixture("cube.json"));
    REQUIRE(accepted(r));
    const ZoneCertificate& c = std::get<ZoneCertificate>(r);
    CHECK(c.zone_count == 3);
    CHECK(c.zone_lengths == std::vector<int>{4, 4, 4});
    CHECK(c.decomposition.zones.size() == 3);
    CHECK(c.decomposition.pairs.size() == 3);
    CHECK(c.decomposition.face_zones.size() == 6);
}

TEST_CASE("zonotope graphs from the oracle are accepted with the forced counts") {
    for (int m = 3; m <= 6; ++m) {
        for (unsigned seed : {1u, 2u, 3u}) {
            CAPTURE(m);
            CAPTURE(seed);
            RotationGraph g = oracle_graph(m, seed);
            CHECK(g.n == m * (m - 1) + 2);
            auto r = recognize(g);
            REQUIRE(accepted(r));
            const ZoneCertificate& c = std::get<ZoneCertificate>(r);
            CHECK(c.zone_count == m);
            CHECK(static_cast<int>(c.decomposition.face_zones.size()) == m * (m - 1));
            for (int l : c.zone_lengths) CHECK(l == 2 * (m - 1));
        }
    }
}

TEST_CASE("recognition is invariant under mirroring the embedding") {
    RotationGraph g = oracle_graph(4, 11);
    auto r = recognize(g);
    auto rm = recognize(mirrored(g));
    REQUIRE(accepted(r));
    REQUIRE(accepted(rm));
    CHECK(std::get<ZoneCertificate>(r).zone_count == std::get<ZoneCertificate>(rm).zone_count);
    CHECK(std::get<ZoneCertificate>(r).zone_lengths ==
          std::get<ZoneCertificate>(rm).zone_lengths);
}

TEST_CASE("a triangle is too small") {
    const Rejection& rej = rejection_of(recognize(load_fixture("triangle.json")));
    CHECK(rej.reason == Rejection::Reason::too_small);
    CHECK(rej.witness.v == 3);
    CHECK(contains(rej.detail, "fewer than 4"));
}

TEST_CASE("K5 with natural rotations is not a sphere embedding") {
    const Rejection& rej = rejection_of(recognize(load_fixture("k5.json")));
    CHECK(rej.reason == Rejection::Reason::not_planar_embedding);
    CHECK(rej.witness.v == 5);
    CHECK(rej.witness.e == 10);
    CHECK(rej.witness.f == 3);
    CHECK(contains(rej.detail, "expected 2"));
}

TEST_CASE("twisting one cube rotation breaks the Euler count") {
    RotationGraph g = load_fixture("cube.json");
    g.rot[0] = {1, 4, 3};
    const Rejection& rej = rejection_of(recognize(g));
    CHECK(rej.reason == Rejection::Reason::not_planar_embedding);
    CHECK(rej.witness.v == 8);
    CHECK(rej.witness.e == 12);
    CHECK(rej.witness.f == 4);
}

TEST_CASE("two quadrilaterals glued along an edge have a cut pair") {
    RotationGraph g = load_fixture("glued_quads.json");
    const Rejection& rej = rejection_of(recognize(g));
    CHECK(rej.reason == Rejection::Reason::not_3_connected);
    CHECK(rej.witness.connectivity_kind == "cut_pair");
    REQUIRE(rej.witness.vertices.size() == 2);
    // The named pair really disconnects the graph.
    CHECK_FALSE(connected_without(g, rej.witness.vertices));
    CHECK(connected_without(g, {}));
}

TEST_CASE("a path has a cut vertex") {
    RotationGraph g = load_fixture("path5.json");
    const Rejection& rej = rejection_of(recognize(g));
    CHECK(rej.reason == Rejection::Reason::not_3_connected);
    CHECK(rej.witness.connectivity_kind == "cut_vertex");
    REQUIRE(rej.witness.vertices.size() == 1);
    CHECK_FALSE(connected_without(g, rej.witness.vertices));
}

TEST_CASE("the tetrahedron fails on face shape, not size") {
    const Rejection& rej = rejection_of(recognize(load_fixture("k4.json")));
    CHECK(rej.reason == Rejection::Reason::non_quad_face);
    CHECK(rej.witness.face >= 0);
    CHECK(rej.witness.face_vertices.size() == 3);
    CHECK(contains(rej.detail, "quadrilateral"));
}

TEST_CASE("the pseudo-double wheel is rejected for a self-crossing zone") {
    RotationGraph g = load_fixture("pseudo_double_wheel_8.json");
    const Rejection& rej = rejection_of(recognize(g));
    CHECK(rej.reason == Rejection::Reason::zone_self_intersection);
    CHECK(contains(rej.detail, "crosses itself at face"));

    const RejectionWitness& w = rej.witness;
    REQUIRE(w.orbit_faces.size() >= 2);
    REQUIRE(w.orbit_edges.size() == w.orbit_faces.size());
    CHECK(w.face == w.orbit_faces.back());

    // Independent replay of the orbit against the face structure.
    FaceStructure fs = extract_faces(g);
    for (std::size_t i = 0; i + 1 < w.orbit_faces.size(); ++i) {
        int f = w.orbit_faces[i];
        auto exit = opposite_edge(fs.faces[static_cast<std::size_t>(f)], w.orbit_edges[i]);
        int e = fs.edge_id(exit.first, exit.second);
        REQUIRE(e >= 0);
        int f2 = fs.edge_sides[static_cast<std::size_t>(e)][0].first;
        if (f2 == f) f2 = fs.edge_sides[static_cast<std::size_t>(e)][1].first;
        CHECK(f2 == w.orbit_faces[i + 1]);
    }
    CHECK(std::count(w.orbit_faces.begin(), w.orbit_faces.end(), w.orbit_faces.back()) >= 2);
}

TEST_CASE("reason strings name every rejection kind") {
    CHECK(std::string(reason_string(Rejection::Reason::too_small)) == "too_small");
    CHECK(std::string(reason_string(Rejection::Reason::not_planar_embedding)) ==
          "not_planar_embedding");
    CHECK(std::string(reason_string(Rejection::Reason::not_3_connected)) == "not_3_connected");
    CHECK(std::string(reason_string(Rejection::Reason::non_quad_face)) == "non_quad_face");
    CHECK(std::string(reason_string(Rejection::Reason::zone_self_intersection)) ==
          "zone_self_intersection");
    CHECK(std::string(reason_string(Rejection::Reason::face_membership_defect)) ==
          "face_membership_defect");
    CHECK(std::string(reason_string(Rejection::Reason::pair_intersection_defect)) ==
          "pair_intersection_defect");
    CHECK(std::string(reason_string(Rejection::Reason::chain_defect)) == "chain_defect");
}

TEST_CASE("explain renders acceptances and rejections") {
    std::string acc = explain(recognize(load_fixture("cube.json")));
    CHECK(contains(acc, "accepted: graph of a zonohedron with 3 zones"));
    CHECK(contains(acc, "zone lengths: 4 4 4"));
    CHECK(contains(acc, "zone 0 faces:"));

    std::string cut = explain(recognize(load_fixture("glued_quads.json")));
    CHECK(contains(cut, "rejected: not_3_connected"));
    CHECK(contains(cut, "witness vertices:"));

    std::string orbit = explain(recognize(load_fixture("pseudo_double_wheel_8.json")));
    CHECK(contains(orbit, "rejected: zone_self_intersection"));
    CHECK(contains(orbit, "orbit faces:"));

    Rejection rej{Rejection::Reason::chain_defect, {}, "zones 1 and 2 are split unevenly"};
    rej.witness.zones = {1, 2};
    rej.witness.shared_faces = {3, 4};
    std::string chain = explain(RecognizeResult{rej});
    CHECK(contains(chain, "rejected: chain_defect"));
    CHECK(contains(chain, "zones 1 and 2; shared faces: 3 4"));
}
