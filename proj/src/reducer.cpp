#include "zg/reducer.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "zg/exact.hpp"

namespace zg {

namespace {

// Cyclic sequence normalized to start at its smallest element, used to match
// face cycles across a contraction. Orientation is preserved, so a face and
// its mirror normalize differently.
std::vector<int> normalized_cycle(const std::vector<int>& cyc) {
    std::size_t L = cyc.size();
    std::size_t k = static_cast<std::size_t>(
        std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> out(L);
    for (std::size_t i = 0; i < L; ++i) out[i] = cyc[(k + i) % L];
    return out;
}

}  // namespace

DeleteOutcome delete_zone(const RotationGraph& g, const Zone& z) {
    const std::size_t L = z.length();
    if (L == 0 || z.zone_edges.size() != L)
        throw InputError("zone has no crossing edges");

    // partner[u] = v for each crossing edge (u, v); endpoints must be distinct
    // or the contraction is not well defined.
    std::vector<int> partner(static_cast<std::size_t>(g.n), -1);
    for (const auto& [u, v] : z.zone_edges) {
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            throw InputError("zone crossing edge out of range");
        if (partner[static_cast<std::size_t>(u)] != -1 ||
            partner[static_cast<std::size_t>(v)] != -1)
            throw InputError("zone crossing edges share a vertex");
        partner[static_cast<std::size_t>(u)] = v;
        partner[static_cast<std::size_t>(v)] = u;
    }

    // New ids: ascending over survivors, where a merged pair is represented
    // by its smaller endpoint.
    std::vector<int> vmap(static_cast<std::size_t>(g.n), -1);
    int next_id = 0;
    for (int v = 0; v < g.n; ++v) {
        int p = partner[static_cast<std::size_t>(v)];
        if (p == -1 || v < p) vmap[static_cast<std::size_t>(v)] = next_id++;
    }
    for (int v = 0; v < g.n; ++v)
        if (vmap[static_cast<std::size_t>(v)] == -1)
            vmap[static_cast<std::size_t>(v)] = vmap[static_cast<std::size_t>(
                partner[static_cast<std::size_t>(v)])];

    RotationGraph out;
    out.n = next_id;
    out.rot.resize(static_cast<std::size_t>(next_id));

    auto rotation_after = [&](int v, int skip) {
        const auto& r = g.rot[static_cast<std::size_t>(v)];
        auto it = std::find(r.begin(), r.end(), skip);
        if (it == r.end())
            throw InputError("zone crossing edge " + std::to_string(v) + "-" +
                             std::to_string(skip) + " is not an edge of the graph");
        std::vector<int> s;
        std::size_t k = static_cast<std::size_t>(it - r.begin());
        for (std::size_t i = 1; i < r.size(); ++i) s.push_back(r[(k + i) % r.size()]);
        return s;
    };

    for (int v = 0; v < g.n; ++v) {
        int p = partner[static_cast<std::size_t>(v)];
        if (p != -1 && v > p) continue;
        std::vector<int> merged;
        if (p == -1) {
            merged = g.rot[static_cast<std::size_t>(v)];
        } else {
            merged = rotation_after(v, p);
            for (int w : rotation_after(p, v)) merged.push_back(w);
        }
        for (int& w : merged) w = vmap[static_cast<std::size_t>(w)];
        out.rot[static_cast<std::size_t>(vmap[static_cast<std::size_t>(v)])] =
            std::move(merged);
    }

    // Each collapsed zone face leaves a doubled edge, visible as cyclically
    // adjacent equal entries at both merged endpoints. Collapse them and
    // insist on the exact count a proper zone produces.
    std::size_t collapsed = 0;
    for (auto& r : out.rot) {
        bool changed = true;
        while (changed && r.size() > 1) {
            changed = false;
            for (std::size_t i = 0; i < r.size(); ++i) {
                std::size_t j = (i + 1) % r.size();
                if (r[i] == r[j]) {
                    r.erase(r.begin() + static_cast<long>(j));
                    ++collapsed;
                    changed = true;
                    break;
                }
            }
        }
    }
    if (collapsed != 2 * L)
        throw InputError("zone deletion collapsed " + std::to_string(collapsed) +
                         " rotation slots, expected " + std::to_string(2 * L) +
                         "; the zone does not bound a clean band");
    out.validate();

    bool degenerate = false;
    for (const auto& r : out.rot)
        if (r.size() < 3) degenerate = true;

    // Face correspondence: map every non-zone face's vertex cycle through
    // vmap and find it among the contracted graph's faces.
    FaceStructure fs_src = extract_faces(g);
    FaceStructure fs_dst = extract_faces(out);
    std::map<std::vector<int>, int> dst_by_cycle;
    for (std::size_t f = 0; f < fs_dst.faces.size(); ++f)
        dst_by_cycle.emplace(normalized_cycle(fs_dst.faces[f]), static_cast<int>(f));

    std::set<int> zone_faces(z.face_cycle.begin(), z.face_cycle.end());
    std::vector<int> fmap(fs_src.faces.size(), -1);
    for (std::size_t f = 0; f < fs_src.faces.size(); ++f) {
        if (zone_faces.count(static_cast<int>(f))) continue;
        std::vector<int> image;
        for (int v : fs_src.faces[f]) image.push_back(vmap[static_cast<std::size_t>(v)]);
        std::set<int> distinct(image.begin(), image.end());
        if (distinct.size() != image.size())
            throw InputError("a face outside the zone touches both endpoints of a "
                             "crossing edge; the zone does not bound a clean band");
        auto it = dst_by_cycle.find(normalized_cycle(image));
        if (it == dst_by_cycle.end())
            throw std::logic_error("contracted face image not found in result graph");
        fmap[f] = it->second;
    }

    DeleteOutcome outc;
    outc.graph = std::move(out);
    outc.step.zone = z;
    outc.step.vertex_map = std::move(vmap);
    outc.step.face_map = std::move(fmap);
    outc.step.result_vertices = next_id;
    outc.degenerate = degenerate;
    return outc;
}

std::vector<std::pair<int, int>> zone_cycle(const ReductionStep& step) {
    std::size_t L = step.zone.zone_edges.size();
    std::vector<std::pair<int, int>> cyc(L);
    for (std::size_t i = 0; i < L; ++i) {
        int a = step.vertex_map[static_cast<std::size_t>(step.zone.zone_edges[i].first)];
        int b = step.vertex_map[static_cast<std::size_t>(
            step.zone.zone_edges[(i + 1) % L].first)];
        cyc[i] = {a, b};
    }
    return cyc;
}

bool is_cube(const RotationGraph& g) {
    if (g.n != 8) return false;
    for (const auto& r : g.rot)
        if (r.size() != 3) return false;
    if (g.edge_count() != 12) return false;
    FaceStructure fs = extract_faces(g);
    if (fs.face_count() != 6) return false;
    for (const auto& f : fs.faces)
        if (f.size() != 4) return false;
    if (!check_planarity(g, fs).genus_zero) return false;
    return !check_three_connected(g).has_value();
}

namespace {

// Recertify an intermediate graph using just the zone conditions; the global
// ones (sphere embedding, 3-connectivity) are preserved by zone deletion.
ZoneCertificate certify_zones(const RotationGraph& g) {
    FaceStructure fs = extract_faces(g);
    auto traced = trace_zones(fs);
    if (std::holds_alternative<ZoneDefect>(traced))
        throw std::logic_error("zone deletion produced a graph without a zone structure");
    ZoneCertificate cert;
    cert.decomposition = std::get<ZoneDecomposition>(std::move(traced));
    if (build_pair_table(cert.decomposition))
        throw std::logic_error("zone deletion broke the pairwise zone conditions");
    cert.zone_count = static_cast<int>(cert.decomposition.zones.size());
    for (const Zone& z : cert.decomposition.zones)
        cert.zone_lengths.push_back(static_cast<int>(z.length()));
    return cert;
}

}  // namespace

ReductionTrace reduce_to_cube(const RotationGraph& g, const ZoneCertificate& cert,
                              int variation) {
    if (variation < 0) throw InputError("variation must be nonnegative");
    ReductionTrace trace;
    trace.graphs.push_back(g);
    ZoneCertificate cur = cert;
    int digits = variation;
    while (cur.zone_count > 3) {
        std::size_t pick = static_cast<std::size_t>(digits % 4) % cur.decomposition.zones.size();
        digits /= 4;
        DeleteOutcome out = delete_zone(trace.graphs.back(), cur.decomposition.zones[pick]);
        if (out.degenerate)
            throw std::logic_error("zone deletion above the cube degenerated");
        trace.steps.push_back(std::move(out.step));
        trace.graphs.push_back(std::move(out.graph));
        cur = certify_zones(trace.graphs.back());
    }
    if (!is_cube(trace.graphs.back()))
        throw std::logic_error("reduction did not terminate at the cube");
    return trace;
}

}  // namespace zg
