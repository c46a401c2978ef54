#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "zg/rotation_graph.hpp"

namespace zg {

// A zone: the closed band of quadrilateral faces obtained by repeatedly
// stepping through the edge opposite the entry edge. face_cycle lists the
// faces in band order; zone_edges[i] is the edge shared by face_cycle[i-1]
// and face_cycle[i] (indices cyclic), stored with smaller endpoint first.
struct Zone {
    int id = -1;
    uint64_t decomposition_tag = 0;
    std::vector<int> face_cycle;
    std::vector<std::pair<int, int>> zone_edges;

    std::size_t length() const { return face_cycle.size(); }
};

struct ZoneDefect {
    enum class Kind {
        non_quadrilateral,  // face is not a 4-cycle
        pinched_edge,       // an edge has the same face on both sides
        self_intersection,  // an orbit re-entered a face it had already claimed
    };
    Kind kind;
    int face = -1;
    // For self_intersection: the faces visited by the orbit in order, ending
    // with the offending revisit, and the edge the orbit entered each face by.
    std::vector<int> orbit_faces;
    std::vector<std::pair<int, int>> orbit_edges;
};

// How two distinct zones meet. shared_faces holds the two common faces in
// first-zone order; chains[i] gives the lengths of the two arcs the shared
// faces cut zone i into (faces strictly between the shared ones).
struct PairIntersection {
    int z1 = -1, z2 = -1;
    std::array<int, 2> shared_faces{-1, -1};
    std::array<std::array<int, 2>, 2> chains{{{0, 0}, {0, 0}}};

    bool balanced() const {
        return chains[0][0] == chains[0][1] && chains[1][0] == chains[1][1] &&
               chains[0][0] > 0 && chains[1][0] > 0;
    }
};

struct ZonePairDefect {
    enum class Kind {
        intersection_count,  // the zones share a number of faces other than two
        unbalanced_chains,   // a shared-face pair cuts a zone into unequal or empty arcs
    };
    Kind kind;
    int z1 = -1, z2 = -1;
    std::vector<int> shared_faces;
    std::array<std::array<int, 2>, 2> chains{{{0, 0}, {0, 0}}};
};

struct ZoneDecomposition {
    uint64_t tag = 0;
    std::vector<Zone> zones;
    // face_zones[f] = ids of the two zones containing face f, ascending.
    std::vector<std::array<int, 2>> face_zones;
    // Every unordered pair of zones, filled by build_pair_table.
    std::vector<PairIntersection> pairs;
    // Orbit states processed while tracing; bounded by two per face.
    std::size_t face_visits = 0;
};

// The edge opposite e in a quadrilateral face cycle, in traversal direction.
// e may be given in either orientation. Throws InputError when the face is
// not a quadrilateral or e is not one of its edges.
std::pair<int, int> opposite_edge(const std::vector<int>& face, std::pair<int, int> e);

// Decomposes all faces into zones by following opposite-edge orbits, or
// reports the first structural defect. Work is linear in total face size; the
// decomposition is canonical (each cycle starts at its smallest face id and
// runs toward its smaller neighbor; zones sorted lexicographically).
std::variant<ZoneDecomposition, ZoneDefect> trace_zones(const FaceStructure& fs);

// How zones a and b meet. Throws InputError when the zones are the same or
// come from different decompositions.
std::variant<PairIntersection, ZonePairDefect> zone_intersection(const Zone& a, const Zone& b);

// Fills decomp.pairs with every pairwise intersection, or returns the first
// defective pair (zones ordered by id, after canonical sorting).
std::optional<ZonePairDefect> build_pair_table(ZoneDecomposition& decomp);

}  // namespace zg
