#include "zg/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <string>

namespace zg {

std::optional<DegeneracyWitness> check_general_position(const GeneratorSet& gens) {
    const auto& g = gens.generators;
    int m = static_cast<int>(g.size());
    for (int i = 0; i < m; ++i)
        if (is_zero(g[static_cast<std::size_t>(i)]))
            return DegeneracyWitness{DegeneracyWitness::Kind::zero_vector, {i}};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (collinear(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(j)]))
                return DegeneracyWitness{DegeneracyWitness::Kind::parallel_pair, {i, j}};
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vec3 c = cross(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(j)]);
            for (int k = j + 1; k < m; ++k)
                if (sgn(dot(c, g[static_cast<std::size_t>(k)])) == 0)
                    return DegeneracyWitness{DegeneracyWitness::Kind::coplanar_triple, {i, j, k}};
        }
    return std::nullopt;
}

Polyhedron build_zonotope(const GeneratorSet& gens) {
    if (auto w = check_general_position(gens)) {
        std::string what = "generators are not in general position: ";
        switch (w->kind) {
            case DegeneracyWitness::Kind::zero_vector:
                what += "generator " + std::to_string(w->indices[0]) + " is zero";
                break;
            case DegeneracyWitness::Kind::parallel_pair:
                what += "generators " + std::to_string(w->indices[0]) + " and " +
                        std::to_string(w->indices[1]) + " are parallel";
                break;
            case DegeneracyWitness::Kind::coplanar_triple:
                what += "generators " + std::to_string(w->indices[0]) + ", " +
                        std::to_string(w->indices[1]) + ", " + std::to_string(w->indices[2]) +
                        " are coplanar";
                break;
        }
        throw InputError(what);
    }
    const auto& g = gens.generators;
    int m = static_cast<int>(g.size());
    if (m < 3) throw InputError("a zonohedron needs at least 3 generators");

    Polyhedron p;
    std::map<Vec3, int, Vec3Less> vertex_ids;
    auto vid = [&](const Vec3& v) {
        auto [it, fresh] = vertex_ids.try_emplace(v, static_cast<int>(p.vertices.size()));
        if (fresh) p.vertices.push_back(v);
        return it->second;
    };

    // One face per generator pair and sign. The face with outward normal n
    // sits at the sum of all other generators that point along n; its edges
    // are the pair itself.
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            for (int s = 0; s < 2; ++s) {
                Vec3 n = cross(g[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(j)]);
                if (s) n = -n;
                Vec3 base{};
                for (int k = 0; k < m; ++k) {
                    if (k == i || k == j) continue;
                    if (sgn(dot(n, g[static_cast<std::size_t>(k)])) > 0)
                        base += g[static_cast<std::size_t>(k)];
                }
                const Vec3& gi = g[static_cast<std::size_t>(i)];
                const Vec3& gj = g[static_cast<std::size_t>(j)];
                int a = vid(base);
                int b = vid(base + gi);
                int c = vid(base + gi + gj);
                int d = vid(base + gj);
                // cross(gi, gj) matches n exactly when s == 0; the cycle
                // a,b,c,d is counterclockwise around cross(gi, gj).
                if (s == 0)
                    p.faces.push_back({a, b, c, d});
                else
                    p.faces.push_back({a, d, c, b});
            }
        }
    }
    return p;
}

RotationGraph graph_of(const Polyhedron& p) {
    int n = static_cast<int>(p.vertex_count());
    // successor[v][u] = w for each face passage (u, v, w).
    std::vector<std::map<int, int>> successor(static_cast<std::size_t>(n));
    for (const auto& cyc : p.faces) {
        std::size_t L = cyc.size();
        for (std::size_t i = 0; i < L; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % L], w = cyc[(i + 2) % L];
            if (v < 0 || v >= n) throw InputError("face references vertex out of range");
            auto [it, fresh] = successor[static_cast<std::size_t>(v)].try_emplace(u, w);
            if (!fresh && it->second != w)
                throw InputError("faces disagree about the order around vertex " +
                                 std::to_string(v));
        }
    }
    RotationGraph g;
    g.n = n;
    g.rot.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto& succ = successor[static_cast<std::size_t>(v)];
        if (succ.empty())
            throw InputError("vertex " + std::to_string(v) + " appears in no face");
        int start = succ.begin()->first;
        std::vector<int> cycle;
        int cur = start;
        do {
            cycle.push_back(cur);
            auto it = succ.find(cur);
            if (it == succ.end())
                throw InputError("face passages around vertex " + std::to_string(v) +
                                 " do not close into a cycle");
            cur = it->second;
            if (cycle.size() > succ.size())
                throw InputError("face passages around vertex " + std::to_string(v) +
                                 " do not close into a cycle");
        } while (cur != start);
        if (cycle.size() != succ.size())
            throw InputError("face passages around vertex " + std::to_string(v) +
                             " form more than one cycle");
        g.rot[static_cast<std::size_t>(v)] = std::move(cycle);
    }
    g.validate();
    return g;
}

GeneratorSet sample_generators(int m, uint64_t seed) {
    if (m < 3) throw InputError("generator count must be at least 3");
    long range = m <= 12 ? 20 : std::min(200L, 20L + 10L * (m - 12));
    std::mt19937_64 rng(seed);
    auto draw_coord = [&]() {
        return static_cast<long>(rng() % static_cast<uint64_t>(2 * range + 1)) - range;
    };
    GeneratorSet out;
    out.generators.reserve(static_cast<std::size_t>(m));
    int attempts = 0;
    while (static_cast<int>(out.generators.size()) < m) {
        if (++attempts > 1000000)
            throw std::runtime_error("generator sampling did not converge");
        Vec3 cand{draw_coord(), draw_coord(), draw_coord()};
        if (is_zero(cand)) continue;
        bool ok = true;
        for (std::size_t i = 0; i < out.generators.size() && ok; ++i) {
            if (collinear(out.generators[i], cand)) ok = false;
            for (std::size_t j = i + 1; j < out.generators.size() && ok; ++j)
                if (sgn(dot(cross(out.generators[i], out.generators[j]), cand)) == 0) ok = false;
        }
        if (ok) out.generators.push_back(cand);
    }
    return out;
}

}  // namespace zg
