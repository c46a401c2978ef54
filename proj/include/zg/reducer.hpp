#pragma once

#include <vector>

#include "zg/recognizer.hpp"
#include "zg/rotation_graph.hpp"
#include "zg/zones.hpp"

namespace zg {

// Record of one zone deletion, with enough bookkeeping to replay it backwards.
struct ReductionStep {
    Zone zone;                    // the deleted zone, in source-graph terms
    std::vector<int> vertex_map;  // source vertex -> result vertex (total map)
    std::vector<int> face_map;    // source face -> result face, -1 for zone faces
    int result_vertices = 0;
};

struct DeleteOutcome {
    RotationGraph graph;
    ReductionStep step;
    // Set when the contraction leaves vertices of degree < 3 (deleting a zone
    // of the cube yields a plain 4-cycle, for example). The result is still a
    // valid rotation system.
    bool degenerate = false;
};

// Contracts every crossing edge of the zone and collapses the resulting
// two-gons, which removes the zone's faces and merges its two boundary
// cycles' surroundings. Face ids on both sides refer to extract_faces order.
// Throws InputError when z does not look like a zone of g (shared endpoints,
// uncollapsible structure).
DeleteOutcome delete_zone(const RotationGraph& g, const Zone& z);

// The cycle the deleted zone leaves in the contracted graph: consecutive
// images of the crossing-edge endpoints, one edge per deleted face.
std::vector<std::pair<int, int>> zone_cycle(const ReductionStep& step);

// The 3-regular quadrangulation of the sphere on 8 vertices.
bool is_cube(const RotationGraph& g);

struct ReductionTrace {
    // graphs.front() is the input, graphs.back() the final cube;
    // steps[k] turns graphs[k] into graphs[k + 1].
    std::vector<RotationGraph> graphs;
    std::vector<ReductionStep> steps;
};

// Deletes zones until three remain. Every intermediate graph is recertified;
// a certified input that stops satisfying the zone conditions mid-way would
// be a library bug, reported as std::logic_error. Any deletion order is
// valid, and variation selects one: its base-4 digit for level k picks which
// zone to delete at that level, so 0 is the canonical first-zone order.
// Distinct variations can collide on the same order once digits run out.
ReductionTrace reduce_to_cube(const RotationGraph& g, const ZoneCertificate& cert,
                              int variation = 0);

}  // namespace zg
