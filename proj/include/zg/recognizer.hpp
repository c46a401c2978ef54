#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "zg/rotation_graph.hpp"
#include "zg/zones.hpp"

namespace zg {

// Positive verdict: the full zone decomposition plus the headline numbers.
struct ZoneCertificate {
    ZoneDecomposition decomposition;
    int zone_count = 0;
    std::vector<int> zone_lengths;  // per zone, in canonical zone order
};

// Everything a rejection may want to point at; fields not relevant to the
// reason stay at their defaults.
struct RejectionWitness {
    std::string connectivity_kind;   // "disconnected", "cut_vertex" or "cut_pair"
    std::vector<int> vertices;       // cut vertex / cut pair / component split
    int face = -1;                   // offending face id
    std::vector<int> face_vertices;  // its vertex cycle
    std::vector<int> orbit_faces;    // self-intersecting orbit, in order
    std::vector<std::pair<int, int>> orbit_edges;
    std::array<int, 2> zones{-1, -1};
    std::vector<int> shared_faces;
    std::array<std::array<int, 2>, 2> chains{{{0, 0}, {0, 0}}};
    long v = 0, e = 0, f = 0;  // Euler counts
};

struct Rejection {
    enum class Reason {
        too_small,
        not_planar_embedding,
        not_3_connected,
        non_quad_face,
        zone_self_intersection,
        face_membership_defect,
        pair_intersection_defect,
        chain_defect,
    };
    Reason reason;
    RejectionWitness witness;
    std::string detail;  // one-line human explanation
};

const char* reason_string(Rejection::Reason r);

using RecognizeResult = std::variant<ZoneCertificate, Rejection>;

inline bool accepted(const RecognizeResult& r) {
    return std::holds_alternative<ZoneCertificate>(r);
}

// Decides whether g is the graph of a zonohedron. Checks run from cheap to
// specific: size, sphere embedding (Euler), 3-connectivity, quadrilateral
// faces, simple zones, two-face pairwise intersections with balanced chains.
// The input must already satisfy RotationGraph::validate().
RecognizeResult recognize(const RotationGraph& g);

// Human-readable multi-line account of a verdict.
std::string explain(const RecognizeResult& r);

}  // namespace zg
