#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zg/exact.hpp"

namespace zg {

// A polyhedral surface with exact rational vertices. Faces are vertex index
// cycles, counterclockwise as seen from outside.
struct Polyhedron {
    std::vector<Vec3> vertices;
    std::vector<std::vector<int>> faces;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t face_count() const { return faces.size(); }
};

// Outward normal of face f (counterclockwise convention), not normalized.
Vec3 face_normal(const Polyhedron& p, int f);

struct Violation {
    std::string check;   // which verification failed
    int face = -1;       // involved face, when meaningful
    int vertex = -1;     // involved vertex, when meaningful
    std::string detail;  // human-readable specifics
};

struct VerifyReport {
    std::vector<Violation> violations;
    std::size_t convexity_tests = 0;  // vertex-against-plane comparisons performed

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Exact validation that p is a convex zonohedron:
//   - every face is a planar parallelogram with a nonzero normal,
//   - every vertex lies strictly inside every non-incident face plane
//     (convex position, outward orientation, no coplanar leftovers),
//   - primitive face normals pair up exactly as n / -n,
//   - the face complex is a closed oriented surface with Euler number 2,
//   - the edges of each combinatorial zone are mutually parallel,
//   - vertices are pairwise distinct.
// All arithmetic is rational; there are no tolerances. The convexity scan is
// the quadratic hot spot and runs parallel across faces unless parallel is
// false (the serial path is the reference for the benchmark).
VerifyReport verify_zonohedron(const Polyhedron& p, bool parallel = true);

}  // namespace zg
