#pragma once

#include <utility>
#include <vector>

#include "zg/polyhedron.hpp"
#include "zg/recognizer.hpp"
#include "zg/reducer.hpp"

namespace zg {

// The reference cube graph: vertices 0-3 around the bottom, 4-7 above them.
RotationGraph standard_cube_graph();

// Axis-aligned cube with edge length `scale` and the reference labeling;
// graph_of(cube_base(s)) equals standard_cube_graph().
Polyhedron cube_base(const Rat& scale);

// A geometric cube realizing an arbitrary combinatorial cube graph, keeping
// its vertex ids. Zone axes map to the coordinate axes; orientation is chosen
// so faces come out counterclockwise from outside.
Polyhedron realize_cube(const RotationGraph& cube, const Rat& scale);

struct DirectionResult {
    Vec3 d;                      // integer vector, strictly compatible
    bool fallback_used = false;  // exact cone solve instead of the normal sum
};

// A direction d with n_f . d > 0 on every lifted face and < 0 on every other
// face, so translating the lifted side by a positive multiple of d is exactly
// a Minkowski sum with a segment. cycle_edges must be the boundary between
// the two face sets. First tries the sum of the lifted faces' primitive
// normals; when that is not strictly inside the cone, falls back to an exact
// Fourier-Motzkin solve of the strict system (complete: it fails only when
// the open cone is genuinely empty, which throws). The result is shrunk to a
// small integer vector when possible to keep later coordinates small.
DirectionResult find_direction(const Polyhedron& p,
                               const std::vector<std::pair<int, int>>& cycle_edges,
                               const std::vector<char>& lifted_faces);

struct Expansion {
    Polyhedron poly;
    // Per old vertex: id of its translated copy when it lies on the cycle,
    // otherwise -1. Vertices strictly on the lifted side keep their id and
    // move in place (moved[v] set); the cycle is doubled.
    std::vector<int> lifted_copy;
    std::vector<char> moved;
    int band_faces = 0;
};

// Translates the lifted faces by t and stitches a band of parallelograms
// along the cycle. Requires t to be strictly compatible (throws InputError
// otherwise); the result is then again a convex zonohedron.
Expansion expand_zone(const Polyhedron& p, const std::vector<std::pair<int, int>>& cycle_edges,
                      const std::vector<char>& lifted_faces, const Vec3& t);

struct RealizationLog {
    std::vector<Vec3> generators;  // cube axes, then one segment per expansion
    std::vector<int> band_sizes;   // faces added by each expansion
    int fallback_count = 0;        // expansions that needed the exact cone solve
    int backtrack_count = 0;       // expansions that re-placed the previous translation
};

// Builds an explicit convex zonohedron whose graph is g: realizes the trace's
// terminal cube and replays the deletions backwards as zone expansions. A
// step whose direction cone is empty (feasibility depends on where earlier
// translations landed, not only on the combinatorics) re-places the suffix
// of earlier translations and retries. Requires trace to come from
// reduce_to_cube(g, cert). Vertex i of the result corresponds to vertex i of
// g; all coordinates are exact (integers when scale is an integer).
Polyhedron realize(const RotationGraph& g, const ZoneCertificate& cert,
                   const ReductionTrace& trace, const Rat& scale,
                   RealizationLog* log = nullptr);

struct RealizeSearchResult {
    Polyhedron poly;
    ReductionTrace trace;  // the construction order that produced poly
    int orders_tried = 1;
};

// realize() over reduce_to_cube orders: rarely, every direction choice under
// one construction order dead-ends even though the graph is realizable, and
// replaying the zones in a different order succeeds at once. Tries the
// canonical order first, so in the common case this is exactly realize().
RealizeSearchResult realize_search(const RotationGraph& g, const ZoneCertificate& cert,
                                   const Rat& scale, RealizationLog* log = nullptr);

}  // namespace zg
