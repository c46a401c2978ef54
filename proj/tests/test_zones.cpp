#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "test_support.hpp"
#include "zg/zones.hpp"

using namespace zg;

namespace {

std::pair<int, int> norm_edge(std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

// Replays a self-intersection witness against the face structure: every
// transition must follow the opposite-edge rule, and the final face must be a
// revisit. Independent of how trace_zones bookkeeps its orbits.
void check_orbit_witness(const FaceStructure& fs, const std::vector<int>& orbit_faces,
                         const std::vector<std::pair<int, int>>& orbit_edges) {
    REQUIRE(orbit_faces.size() == orbit_edges.size());
    REQUIRE(orbit_faces.size() >= 2);
    for (std::size_t i = 0; i + 1 < orbit_faces.size(); ++i) {
        int f = orbit_faces[i];
        auto exit = opposite_edge(fs.faces[static_cast<std::size_t>(f)], orbit_edges[i]);
        int e = fs.edge_id(exit.first, exit.second);
        REQUIRE(e >= 0);
        int f2 = fs.edge_sides[static_cast<std::size_t>(e)][0].first;
        if (f2 == f) f2 = fs.edge_sides[static_cast<std::size_t>(e)][1].first;
        CHECK(f2 == orbit_faces[i + 1]);
        CHECK(norm_edge(exit) == orbit_edges[i + 1]);
    }
    int last = orbit_faces.back();
    bool revisit = false;
    for (std::size_t i = 0; i + 1 < orbit_faces.size(); ++i)
        if (orbit_faces[i] == last) revisit = true;
    CHECK(revisit);
}

}  // namespace

TEST_CASE("opposite_edge pairs the non-adjacent edges of a quadrilateral") {
    std::vector<int> face = {0, 1, 2, 3};
    CHECK(opposite_edge(face, {0, 1}) == std::pair<int, int>{2, 3});
    CHECK(opposite_edge(face, {1, 2}) == std::pair<int, int>{3, 0});
    CHECK(opposite_edge(face, {2, 3}) == std::pair<int, int>{0, 1});
    CHECK(opposite_edge(face, {3, 0}) == std::pair<int, int>{1, 2});
    // Orientation of the query edge does not matter.
    CHECK(opposite_edge(face, {1, 0}) == std::pair<int, int>{2, 3});

    CHECK(contains(input_error_of([&] { opposite_edge(face, {0, 2}); }),
                   "not an edge of the face"));
    std::vector<int> tri = {0, 1, 2};
    CHECK(contains(input_error_of([&] { opposite_edge(tri, {0, 1}); }), "quadrilateral"));
}

TEST_CASE("cube zones: three bands of four faces") {
    RotationGraph cube = load_fixture("cube.json");
    FaceStructure fs = extract_faces(cube);
    auto traced = trace_zones(fs);
    REQUIRE(std::holds_alternative<ZoneDecomposition>(traced));
    const ZoneDecomposition& dec = std::get<ZoneDecomposition>(traced);

    REQUIRE(dec.zones.size() == 3);
    CHECK(dec.tag != 0);
    std::size_t length_sum = 0;
    for (std::size_t i = 0; i < dec.zones.size(); ++i) {
        const Zone& z = dec.zones[i];
        CHECK(z.id == static_cast<int>(i));
        CHECK(z.decomposition_tag == dec.tag);
        CHECK(z.length() == 4);
        CHECK(z.zone_edges.size() == 4);
        length_sum += z.length();

        // Canonical start: the smallest face id leads its cycle.
        CHECK(z.face_cycle[0] == *std::min_element(z.face_cycle.begin(), z.face_cycle.end()));

        std::size_t L = z.length();
        for (std::size_t j = 0; j < L; ++j) {
            // zone_edges[j] joins face_cycle[j-1] and face_cycle[j], normalized.
            CHECK(z.zone_edges[j].first < z.zone_edges[j].second);
            int e = fs.edge_id(z.zone_edges[j].first, z.zone_edges[j].second);
            REQUIRE(e >= 0);
            std::set<int> sides = {fs.edge_sides[static_cast<std::size_t>(e)][0].first,
                                   fs.edge_sides[static_cast<std::size_t>(e)][1].first};
            CHECK(sides.count(z.face_cycle[(j + L - 1) % L]) == 1);
            CHECK(sides.count(z.face_cycle[j]) == 1);
            // Consecutive crossing edges are opposite in the face between them.
            auto opp = norm_edge(
                opposite_edge(fs.faces[static_cast<std::size_t>(z.face_cycle[j])],
                              z.zone_edges[j]));
            CHECK(opp == z.zone_edges[(j + 1) % L]);
        }
    }
    CHECK(length_sum == 2 * fs.face_count());
    CHECK(dec.face_visits <= 2 * fs.face_count());

    // Every face lies in two distinct zones.
    for (const auto& [z0, z1] : dec.face_zones) {
        CHECK(z0 >= 0);
        CHECK(z1 >= 0);
        CHECK(z0 < z1);
    }

    // Deterministic canonical presentation across runs.
    auto traced2 = trace_zones(fs);
    const ZoneDecomposition& dec2 = std::get<ZoneDecomposition>(traced2);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(dec.zones[i].face_cycle == dec2.zones[i].face_cycle);
        CHECK(dec.zones[i].zone_edges == dec2.zones[i].zone_edges);
    }
    CHECK(std::is_sorted(dec.zones.begin(), dec.zones.end(),
                         [](const Zone& a, const Zone& b) { return a.face_cycle < b.face_cycle; }));
}

TEST_CASE("four generic generators give four zones of six faces with balanced chains") {
    RotationGraph g = oracle_graph(4, 7);
    FaceStructure fs = extract_faces(g);
    auto traced = trace_zones(fs);
    REQUIRE(std::holds_alternative<ZoneDecomposition>(traced));
    ZoneDecomposition dec = std::get<ZoneDecomposition>(std::move(traced));

    REQUIRE(dec.zones.size() == 4);
    for (const Zone& z : dec.zones) CHECK(z.length() == 6);
    CHECK(fs.face_count() == 12);
    CHECK(dec.face_visits <= 2 * fs.face_count());

    REQUIRE_FALSE(build_pair_table(dec).has_value());
    REQUIRE(dec.pairs.size() == 6);
    for (const PairIntersection& pi : dec.pairs) {
        CHECK(pi.balanced());
        CHECK(pi.chains[0][0] == 2);
        CHECK(pi.chains[0][1] == 2);
        CHECK(pi.chains[1][0] == 2);
        CHECK(pi.chains[1][1] == 2);
        CHECK(pi.shared_faces[0] != pi.shared_faces[1]);
    }
}

TEST_CASE("cube zone pairs share two faces split into single-face chains") {
    RotationGraph cube = load_fixture("cube.json");
    FaceStructure fs = extract_faces(cube);
    auto traced = trace_zones(fs);
    ZoneDecomposition dec = std::get<ZoneDecomposition>(std::move(traced));
    REQUIRE_FALSE(build_pair_table(dec).has_value());
    REQUIRE(dec.pairs.size() == 3);
    for (const PairIntersection& pi : dec.pairs) {
        CHECK(pi.balanced());
        CHECK(pi.chains[0][0] == 1);
        CHECK(pi.chains[1][0] == 1);
    }
}

TEST_CASE("the pseudo-double wheel's single orbit is a self-intersection") {
    RotationGraph g = load_fixture("pseudo_double_wheel_8.json");
    FaceStructure fs = extract_faces(g);
    REQUIRE(fs.face_count() == 8);
    for (const auto& f : fs.faces) CHECK(f.size() == 4);

    auto traced = trace_zones(fs);
    REQUIRE(std::holds_alternative<ZoneDefect>(traced));
    const ZoneDefect& d = std::get<ZoneDefect>(traced);
    CHECK(d.kind == ZoneDefect::Kind::self_intersection);
    CHECK(d.face == d.orbit_faces.back());
    check_orbit_witness(fs, d.orbit_faces, d.orbit_edges);
}

TEST_CASE("non-quadrilateral faces defect before any orbit is traced") {
    RotationGraph k4 = load_fixture("k4.json");
    FaceStructure fs = extract_faces(k4);
    auto traced = trace_zones(fs);
    REQUIRE(std::holds_alternative<ZoneDefect>(traced));
    const ZoneDefect& d = std::get<ZoneDefect>(traced);
    CHECK(d.kind == ZoneDefect::Kind::non_quadrilateral);
    CHECK(d.face >= 0);
    CHECK(fs.faces[static_cast<std::size_t>(d.face)].size() != 4);
}

TEST_CASE("zone_intersection input contract") {
    RotationGraph cube = load_fixture("cube.json");
    FaceStructure fs = extract_faces(cube);
    ZoneDecomposition a = std::get<ZoneDecomposition>(trace_zones(fs));
    ZoneDecomposition b = std::get<ZoneDecomposition>(trace_zones(fs));

    CHECK(contains(input_error_of([&] { zone_intersection(a.zones[0], a.zones[0]); }),
                   "distinct"));
    CHECK(contains(input_error_of([&] { zone_intersection(a.zones[0], b.zones[1]); }),
                   "one decomposition"));
}

TEST_CASE("zone_intersection classifies synthetic defects") {
    auto mk = [](int id, std::vector<int> faces) {
        Zone z;
        z.id = id;
        z.decomposition_tag = 77;
        z.face_cycle = std::move(faces);
        return z;
    };

    // Balanced: shared faces 0 and 2 cut both cycles into chains of one.
    auto ok = zone_intersection(mk(0, {0, 1, 2, 3}), mk(1, {0, 4, 2, 5}));
    REQUIRE(std::holds_alternative<PairIntersection>(ok));
    const PairIntersection& pi = std::get<PairIntersection>(ok);
    CHECK(pi.shared_faces == std::array<int, 2>{0, 2});
    CHECK(pi.balanced());

    // One shared face only.
    auto one = zone_intersection(mk(0, {0, 1, 2, 3}), mk(1, {0, 4, 5, 6}));
    REQUIRE(std::holds_alternative<ZonePairDefect>(one));
    CHECK(std::get<ZonePairDefect>(one).kind == ZonePairDefect::Kind::intersection_count);
    CHECK(std::get<ZonePairDefect>(one).shared_faces == std::vector<int>{0});

    // No shared face.
    auto zero = zone_intersection(mk(0, {0, 1, 2, 3}), mk(1, {4, 5, 6, 7}));
    REQUIRE(std::holds_alternative<ZonePairDefect>(zero));
    CHECK(std::get<ZonePairDefect>(zero).kind == ZonePairDefect::Kind::intersection_count);
    CHECK(std::get<ZonePairDefect>(zero).shared_faces.empty());

    // Unequal chains: 1 and 3 faces between the shared pair.
    auto uneq = zone_intersection(mk(0, {0, 1, 2, 3, 4, 5}), mk(1, {0, 6, 2, 7, 8, 9}));
    REQUIRE(std::holds_alternative<ZonePairDefect>(uneq));
    const ZonePairDefect& du = std::get<ZonePairDefect>(uneq);
    CHECK(du.kind == ZonePairDefect::Kind::unbalanced_chains);
    CHECK(du.chains[0][0] == 1);
    CHECK(du.chains[0][1] == 3);

    // Adjacent shared faces leave an empty chain.
    auto adj = zone_intersection(mk(0, {0, 1, 2, 3}), mk(1, {0, 1, 4, 5}));
    REQUIRE(std::holds_alternative<ZonePairDefect>(adj));
    CHECK(std::get<ZonePairDefect>(adj).kind == ZonePairDefect::Kind::unbalanced_chains);
}
