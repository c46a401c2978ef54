#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zg {

// A graph embedded in an oriented surface, given combinatorially: rot[v]
// lists the neighbors of v in counterclockwise order around v.
struct RotationGraph {
    int n = 0;
    std::vector<std::vector<int>> rot;

    int vertex_count() const { return n; }
    std::size_t edge_count() const;

    // Enforces the structural invariants: rot has n entries, neighbor ids are
    // in range, no self-loops, no repeated neighbor at a vertex, and adjacency
    // is symmetric. Throws InputError with a precise message otherwise.
    void validate() const;
};

// Same abstract graph, opposite orientation.
RotationGraph mirrored(const RotationGraph& g);

enum class EmbeddingMatch { none, direct, mirror };

// Compares two rotation systems on the same vertex ids. "direct" means every
// rotation agrees up to cyclic shift; "mirror" means they agree after
// reversing one of them.
EmbeddingMatch same_embedding(const RotationGraph& a, const RotationGraph& b);

// Face structure of an embedded graph. Faces are vertex cycles; traversal
// order is the discovery order of the tracing rule, so it is deterministic.
struct FaceStructure {
    std::vector<std::vector<int>> faces;

    // Undirected edges, indexed. edge_ends[e] = (u, v) with u < v.
    std::vector<std::pair<int, int>> edge_ends;

    // face_edges[f][i] is the edge id between faces[f][i] and faces[f][i+1].
    std::vector<std::vector<int>> face_edges;

    // The two (face, position) incidences of each edge, in discovery order.
    std::vector<std::array<std::pair<int, int>, 2>> edge_sides;

    std::size_t edge_count() const { return edge_ends.size(); }
    std::size_t face_count() const { return faces.size(); }

    int edge_id(int u, int v) const;  // -1 when absent

    // Given one incidence (f, pos) of edge e, the other one.
    std::pair<int, int> other_side(int e, int f, int pos) const;
};

// Traces every face of the embedding: after arriving along the directed edge
// (u, v), the walk leaves along (v, w) where w follows u in the rotation at v.
// Each directed edge lies on exactly one traced face. Throws InputError if the
// adjacency is not symmetric.
FaceStructure extract_faces(const RotationGraph& g);

// Rebuilds the edge indexes of a face list that came from elsewhere (for
// instance the face list of a polyhedron). Requires every undirected edge to
// be used exactly twice and in opposite directions; returns std::nullopt when
// that fails.
std::optional<FaceStructure> face_structure_from_faces(std::vector<std::vector<int>> faces);

struct PlanarityVerdict {
    long v = 0, e = 0, f = 0;
    long euler_characteristic = 0;
    bool genus_zero = false;
};

// Euler characteristic test: the rotation system describes a sphere embedding
// exactly when v - e + f == 2 (for a connected graph; disconnected inputs are
// caught by the connectivity checks).
PlanarityVerdict check_planarity(const RotationGraph& g, const FaceStructure& fs);

struct ConnectivityWitness {
    enum class Kind { disconnected, cut_vertex, cut_pair };
    Kind kind;
    // Two vertices in different components, the cut vertex, or the cut pair
    // (ascending).
    std::vector<int> vertices;

    std::string describe() const;
};

// Verdict is empty when g is 3-connected. Requires n >= 4. The default kernel
// runs one articulation-point sweep per removed vertex and is parallel across
// removed vertices; the reference implementation enumerates removal pairs
// directly. Both return the lexicographically smallest witness of the most
// specific kind, so their outputs are comparable.
std::optional<ConnectivityWitness> check_three_connected(const RotationGraph& g);
std::optional<ConnectivityWitness> check_three_connected_reference(const RotationGraph& g);

// True when removing the vertices in `removed` (may be empty) leaves the rest
// of g connected. Exposed for witness re-checking in tests.
bool connected_without(const RotationGraph& g, const std::vector<int>& removed);

}  // namespace zg
