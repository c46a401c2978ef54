#include "zg/rotation_graph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "zg/exact.hpp"

namespace zg {

namespace {

uint64_t dir_key(int u, int v) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

}  // namespace

std::size_t RotationGraph::edge_count() const {
    std::size_t deg_sum = 0;
    for (const auto& r : rot) deg_sum += r.size();
    return deg_sum / 2;
}

void RotationGraph::validate() const {
    if (n < 0) throw InputError("vertex count is negative");
    if (static_cast<int>(rot.size()) != n)
        throw InputError("adjacency has " + std::to_string(rot.size()) + " rows for n = " +
                         std::to_string(n));
    std::unordered_set<uint64_t> seen;
    for (int v = 0; v < n; ++v) {
        std::unordered_set<int> local;
        for (int w : rot[v]) {
            if (w < 0 || w >= n)
                throw InputError("vertex " + std::to_string(v) + " lists neighbor " +
                                 std::to_string(w) + " outside 0.." + std::to_string(n - 1));
            if (w == v) throw InputError("vertex " + std::to_string(v) + " lists itself");
            if (!local.insert(w).second)
                throw InputError("vertex " + std::to_string(v) + " lists neighbor " +
                                 std::to_string(w) + " twice");
            seen.insert(dir_key(v, w));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int w : rot[v])
            if (!seen.count(dir_key(w, v)))
                throw InputError("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                 " is one-sided: " + std::to_string(w) + " does not list " +
                                 std::to_string(v));
}

RotationGraph mirrored(const RotationGraph& g) {
    RotationGraph m = g;
    for (auto& r : m.rot) std::reverse(r.begin(), r.end());
    return m;
}

namespace {

bool cyclically_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(b.begin(), b.end(), a[0]);
    if (it == b.end()) return false;
    std::size_t k = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(k + i) % b.size()]) return false;
    return true;
}

}  // namespace

EmbeddingMatch same_embedding(const RotationGraph& a, const RotationGraph& b) {
    if (a.n != b.n) return EmbeddingMatch::none;
    bool direct = true;
    for (int v = 0; v < a.n && direct; ++v) direct = cyclically_equal(a.rot[v], b.rot[v]);
    if (direct) return EmbeddingMatch::direct;
    RotationGraph rb = mirrored(b);
    bool mirror = true;
    for (int v = 0; v < a.n && mirror; ++v) mirror = cyclically_equal(a.rot[v], rb.rot[v]);
    return mirror ? EmbeddingMatch::mirror : EmbeddingMatch::none;
}

int FaceStructure::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (std::size_t e = 0; e < edge_ends.size(); ++e)
        if (edge_ends[e] == std::make_pair(u, v)) return static_cast<int>(e);
    return -1;
}

std::pair<int, int> FaceStructure::other_side(int e, int f, int pos) const {
    const auto& s = edge_sides[static_cast<std::size_t>(e)];
    if (s[0] == std::make_pair(f, pos)) return s[1];
    return s[0];
}

namespace {

// Shared by extract_faces and face_structure_from_faces: given the face
// vertex cycles, build the undirected edge index and per-edge incidences.
// Returns false when some undirected edge is not used exactly once in each
// direction.
bool index_edges(FaceStructure& fs) {
    std::unordered_map<uint64_t, int> ids;
    std::vector<int> uses;
    fs.face_edges.assign(fs.faces.size(), {});
    for (std::size_t f = 0; f < fs.faces.size(); ++f) {
        const auto& cyc = fs.faces[f];
        fs.face_edges[f].resize(cyc.size());
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            int a = std::min(u, v), b = std::max(u, v);
            auto [it, fresh] = ids.try_emplace(dir_key(a, b), static_cast<int>(fs.edge_ends.size()));
            if (fresh) {
                fs.edge_ends.emplace_back(a, b);
                fs.edge_sides.push_back({});
                uses.push_back(0);
            }
            int e = it->second;
            if (uses[e] >= 2) return false;
            fs.edge_sides[e][uses[e]++] = {static_cast<int>(f), static_cast<int>(i)};
            fs.face_edges[f][i] = e;
        }
    }
    for (std::size_t e = 0; e < fs.edge_ends.size(); ++e) {
        if (uses[e] != 2) return false;
        auto [f0, p0] = fs.edge_sides[e][0];
        auto [f1, p1] = fs.edge_sides[e][1];
        int t0 = fs.faces[f0][static_cast<std::size_t>(p0)];
        int t1 = fs.faces[f1][static_cast<std::size_t>(p1)];
        if (t0 == t1) return false;  // both traversals run the same direction
    }
    return true;
}

}  // namespace

FaceStructure extract_faces(const RotationGraph& g) {
    // Face tracing needs symmetric adjacency; check just that here so the op
    // is safe on its own. Full validation happens at parse time.
    std::unordered_map<uint64_t, int> slot;
    std::size_t dir_edges = 0;
    for (int v = 0; v < g.n; ++v) {
        for (std::size_t i = 0; i < g.rot[v].size(); ++i) {
            slot[dir_key(g.rot[v][i], v)] = static_cast<int>(i);
            ++dir_edges;
        }
    }
    for (int v = 0; v < g.n; ++v)
        for (int w : g.rot[v])
            if (!slot.count(dir_key(v, w)))
                throw InputError("edge " + std::to_string(v) + "-" + std::to_string(w) +
                                 " is one-sided: " + std::to_string(w) + " does not list " +
                                 std::to_string(v));

    FaceStructure fs;
    std::unordered_set<uint64_t> used;
    used.reserve(dir_edges * 2);
    for (int v0 = 0; v0 < g.n; ++v0) {
        for (int w0 : g.rot[v0]) {
            if (used.count(dir_key(v0, w0))) continue;
            std::vector<int> cyc;
            int u = v0, v = w0;
            do {
                used.insert(dir_key(u, v));
                cyc.push_back(u);
                int i = slot.at(dir_key(u, v));
                int w = g.rot[v][(static_cast<std::size_t>(i) + 1) % g.rot[v].size()];
                u = v;
                v = w;
            } while (!(u == v0 && v == w0));
            fs.faces.push_back(std::move(cyc));
        }
    }
    if (!index_edges(fs))
        throw InputError("rotation system produced an inconsistent face boundary");
    return fs;
}

std::optional<FaceStructure> face_structure_from_faces(std::vector<std::vector<int>> faces) {
    FaceStructure fs;
    fs.faces = std::move(faces);
    if (!index_edges(fs)) return std::nullopt;
    return fs;
}

PlanarityVerdict check_planarity(const RotationGraph& g, const FaceStructure& fs) {
    PlanarityVerdict out;
    out.v = g.n;
    out.e = static_cast<long>(fs.edge_count());
    out.f = static_cast<long>(fs.face_count());
    out.euler_characteristic = out.v - out.e + out.f;
    out.genus_zero = (out.euler_characteristic == 2);
    return out;
}

std::string ConnectivityWitness::describe() const {
    switch (kind) {
        case Kind::disconnected:
            return "vertices " + std::to_string(vertices[0]) + " and " +
                   std::to_string(vertices[1]) + " lie in different components";
        case Kind::cut_vertex:
            return "removing vertex " + std::to_string(vertices[0]) + " disconnects the graph";
        case Kind::cut_pair:
            return "removing vertices {" + std::to_string(vertices[0]) + ", " +
                   std::to_string(vertices[1]) + "} disconnects the graph";
    }
    return {};
}

namespace {

// Iterative DFS connectivity over g minus the removed vertices.
bool connected_masked(const RotationGraph& g, const std::vector<char>& removed) {
    int start = -1, alive = 0;
    for (int v = 0; v < g.n; ++v) {
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    }
    if (alive <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack = {start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.rot[v]) {
            if (removed[w] || seen[w]) continue;
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
        }
    }
    return reached == alive;
}

std::optional<ConnectivityWitness> base_connectivity_witness(const RotationGraph& g) {
    std::vector<char> none(static_cast<std::size_t>(g.n), 0);
    if (connected_masked(g, none)) return std::nullopt;
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.rot[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    int other = -1;
    for (int v = 1; v < g.n && other < 0; ++v)
        if (!seen[v]) other = v;
    return ConnectivityWitness{ConnectivityWitness::Kind::disconnected, {0, other}};
}

// All v whose removal disconnects g minus `removed_u` (classic lowlink scan,
// iterative to keep large inputs off the call stack). Assumes that graph is
// connected and has at least 3 live vertices.
std::vector<int> articulation_vertices(const RotationGraph& g, int removed_u) {
    int n = g.n;
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        parent(static_cast<std::size_t>(n), -1), child_count(static_cast<std::size_t>(n), 0);
    std::vector<char> is_art(static_cast<std::size_t>(n), 0);
    int timer = 0;
    int root = (removed_u == 0) ? 1 : 0;

    struct Frame {
        int v;
        std::size_t next_edge;
    };
    std::vector<Frame> stack;
    disc[root] = low[root] = timer++;
    stack.push_back({root, 0});
    while (!stack.empty()) {
        Frame& fr = stack.back();
        int v = fr.v;
        if (fr.next_edge < g.rot[v].size()) {
            int w = g.rot[v][fr.next_edge++];
            if (w == removed_u) continue;
            if (disc[w] == -1) {
                parent[w] = v;
                ++child_count[v];
                disc[w] = low[w] = timer++;
                stack.push_back({w, 0});
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            int p = parent[v];
            if (p != -1) {
                low[p] = std::min(low[p], low[v]);
                if (p != root && low[v] >= disc[p]) is_art[p] = 1;
            }
        }
    }
    if (child_count[root] > 1) is_art[root] = 1;
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (is_art[v]) out.push_back(v);
    return out;
}

}  // namespace

std::optional<ConnectivityWitness> check_three_connected(const RotationGraph& g) {
    if (auto w = base_connectivity_witness(g)) return w;

    // One sweep finds every cut vertex and every cut pair: u is a cut vertex
    // iff g - u is disconnected, and {u, v} is a cut pair iff v is an
    // articulation vertex of g - u. Each removed vertex is independent, so the
    // sweep parallelizes.
    int n = g.n;
    std::vector<int> cut_vertex(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> best_pair(static_cast<std::size_t>(n), {-1, -1});
#pragma omp parallel for schedule(dynamic)
    for (int u = 0; u < n; ++u) {
        std::vector<char> removed(static_cast<std::size_t>(n), 0);
        removed[u] = 1;
        if (!connected_masked(g, removed)) {
            cut_vertex[u] = 1;
            continue;
        }
        std::pair<int, int> best = {-1, -1};
        for (int v : articulation_vertices(g, u)) {
            std::pair<int, int> p{std::min(u, v), std::max(u, v)};
            if (best.first < 0 || p < best) best = p;
        }
        best_pair[u] = best;
    }
    for (int u = 0; u < n; ++u)
        if (cut_vertex[u])
            return ConnectivityWitness{ConnectivityWitness::Kind::cut_vertex, {u}};
    std::pair<int, int> best = {-1, -1};
    for (int u = 0; u < n; ++u) {
        const auto& p = best_pair[u];
        if (p.first < 0) continue;
        if (best.first < 0 || p < best) best = p;
    }
    if (best.first >= 0)
        return ConnectivityWitness{ConnectivityWitness::Kind::cut_pair, {best.first, best.second}};
    return std::nullopt;
}

std::optional<ConnectivityWitness> check_three_connected_reference(const RotationGraph& g) {
    if (auto w = base_connectivity_witness(g)) return w;
    int n = g.n;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u) {
        removed.assign(static_cast<std::size_t>(n), 0);
        removed[u] = 1;
        if (!connected_masked(g, removed))
            return ConnectivityWitness{ConnectivityWitness::Kind::cut_vertex, {u}};
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            removed.assign(static_cast<std::size_t>(n), 0);
            removed[u] = 1;
            removed[v] = 1;
            if (!connected_masked(g, removed))
                return ConnectivityWitness{ConnectivityWitness::Kind::cut_pair, {u, v}};
        }
    }
    return std::nullopt;
}

bool connected_without(const RotationGraph& g, const std::vector<int>& removed) {
    std::vector<char> mask(static_cast<std::size_t>(g.n), 0);
    for (int v : removed) mask[static_cast<std::size_t>(v)] = 1;
    return connected_masked(g, mask);
}

}  // namespace zg
