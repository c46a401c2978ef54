#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "zg/polyhedron.hpp"
#include "zg/rotation_graph.hpp"

namespace zg {

struct GeneratorSet {
    std::vector<Vec3> generators;
};

struct DegeneracyWitness {
    enum class Kind { zero_vector, parallel_pair, coplanar_triple };
    Kind kind;
    std::vector<int> indices;
};

// General position for zonotope generators: no zero vector, no two parallel,
// no three coplanar. Returns the first witness in index order, if any.
std::optional<DegeneracyWitness> check_general_position(const GeneratorSet& gens);

// The zonotope spanned by the generators, built independently of the rest of
// the library: one face per generator pair and sign, with the base vertex
// picked by exact sign tests. Requires general position (throws InputError
// otherwise). Faces come out counterclockwise from outside.
Polyhedron build_zonotope(const GeneratorSet& gens);

// The rotation system induced by the face cycles of a closed oriented
// polyhedral surface: each face passage (u, v, w) pins w as the successor of
// u around v. Throws InputError when the constraints do not close into one
// cycle per vertex.
RotationGraph graph_of(const Polyhedron& p);

// Deterministic general-position generators: coordinates are drawn uniformly
// from a small integer box (widened for large m so rejection stays rare),
// redrawing any vector that collides with the ones already chosen.
GeneratorSet sample_generators(int m, uint64_t seed);

}  // namespace zg
