#include "zg/zones.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <map>
#include <string>

#include "zg/exact.hpp"

namespace zg {

namespace {

std::atomic<uint64_t> next_decomposition_tag{1};

std::pair<int, int> normalized(std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
}

}  // namespace

std::pair<int, int> opposite_edge(const std::vector<int>& face, std::pair<int, int> e) {
    if (face.size() != 4)
        throw InputError("opposite_edge requires a quadrilateral, got a face of size " +
                         std::to_string(face.size()));
    for (int i = 0; i < 4; ++i) {
        int u = face[static_cast<std::size_t>(i)];
        int v = face[static_cast<std::size_t>((i + 1) % 4)];
        if ((e.first == u && e.second == v) || (e.first == v && e.second == u)) {
            int j = (i + 2) % 4;
            return {face[static_cast<std::size_t>(j)], face[static_cast<std::size_t>((j + 1) % 4)]};
        }
    }
    throw InputError("edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                     ") is not an edge of the face");
}

namespace {

// Rotates and possibly reverses the orbit so the smallest face id comes
// first and the cycle runs toward its smaller cycle neighbor. The entry-edge
// list is realigned so edges[i] still joins faces[i-1] and faces[i].
void canonicalize_zone(Zone& z) {
    std::size_t L = z.face_cycle.size();
    if (L == 0) return;
    std::size_t k = static_cast<std::size_t>(
        std::min_element(z.face_cycle.begin(), z.face_cycle.end()) - z.face_cycle.begin());
    std::vector<int> faces(L);
    std::vector<std::pair<int, int>> edges(L);
    for (std::size_t i = 0; i < L; ++i) {
        faces[i] = z.face_cycle[(k + i) % L];
        edges[i] = z.zone_edges[(k + i) % L];
    }
    if (L > 2 && faces[L - 1] < faces[1]) {
        std::vector<int> rf(L);
        std::vector<std::pair<int, int>> re(L);
        rf[0] = faces[0];
        re[0] = edges[1];
        for (std::size_t i = 1; i < L; ++i) {
            rf[i] = faces[L - i];
            re[i] = edges[(L - i + 1) % L];
        }
        faces = std::move(rf);
        edges = std::move(re);
    }
    z.face_cycle = std::move(faces);
    z.zone_edges = std::move(edges);
}

}  // namespace

std::variant<ZoneDecomposition, ZoneDefect> trace_zones(const FaceStructure& fs) {
    std::size_t F = fs.face_count();
    for (std::size_t f = 0; f < F; ++f) {
        if (fs.faces[f].size() != 4) {
            ZoneDefect d;
            d.kind = ZoneDefect::Kind::non_quadrilateral;
            d.face = static_cast<int>(f);
            return d;
        }
    }
    for (std::size_t e = 0; e < fs.edge_count(); ++e) {
        if (fs.edge_sides[e][0].first == fs.edge_sides[e][1].first) {
            ZoneDefect d;
            d.kind = ZoneDefect::Kind::pinched_edge;
            d.face = fs.edge_sides[e][0].first;
            return d;
        }
    }

    ZoneDecomposition out;
    out.face_zones.assign(F, {-1, -1});
    // claim[f][p]: zone that entered face f through edge pair p (positions p
    // and p+2), or -1.
    std::vector<std::array<int, 2>> claim(F, {-1, -1});

    for (int f0 = 0; f0 < static_cast<int>(F); ++f0) {
        for (int p0 = 0; p0 < 2; ++p0) {
            if (claim[static_cast<std::size_t>(f0)][static_cast<std::size_t>(p0)] != -1) continue;
            int zid = static_cast<int>(out.zones.size());
            Zone z;
            z.id = zid;
            int f = f0, pos = p0;
            while (true) {
                int pair = pos % 2;
                int& owner = claim[static_cast<std::size_t>(f)][static_cast<std::size_t>(pair)];
                if (claim[static_cast<std::size_t>(f)][0] == zid ||
                    claim[static_cast<std::size_t>(f)][1] == zid) {
                    // Legitimate closure is a return to the exact start state;
                    // re-entering a claimed face any other way (other pair, or
                    // same pair from the other side) is a self-crossing band.
                    if (f == f0 && pos == p0) break;
                    ZoneDefect d;
                    d.kind = ZoneDefect::Kind::self_intersection;
                    d.face = f;
                    d.orbit_faces = z.face_cycle;
                    d.orbit_faces.push_back(f);
                    d.orbit_edges = z.zone_edges;
                    int e_in = fs.face_edges[static_cast<std::size_t>(f)]
                                            [static_cast<std::size_t>(pos)];
                    d.orbit_edges.push_back(normalized(fs.edge_ends[static_cast<std::size_t>(e_in)]));
                    return d;
                }
                assert(owner == -1 && "a face pair can only be claimed by its own orbit first");
                owner = zid;
                ++out.face_visits;
                z.face_cycle.push_back(f);
                int e_in =
                    fs.face_edges[static_cast<std::size_t>(f)][static_cast<std::size_t>(pos)];
                z.zone_edges.push_back(normalized(fs.edge_ends[static_cast<std::size_t>(e_in)]));
                int exit_pos = (pos + 2) % 4;
                int e_out =
                    fs.face_edges[static_cast<std::size_t>(f)][static_cast<std::size_t>(exit_pos)];
                auto [nf, npos] = fs.other_side(e_out, f, exit_pos);
                f = nf;
                pos = npos;
            }
            out.zones.push_back(std::move(z));
        }
    }

    // Canonical presentation: each orbit starts at its smallest face and the
    // zone list is sorted, so identical inputs always print identically.
    for (Zone& z : out.zones) canonicalize_zone(z);
    std::sort(out.zones.begin(), out.zones.end(),
              [](const Zone& a, const Zone& b) { return a.face_cycle < b.face_cycle; });
    uint64_t tag = next_decomposition_tag.fetch_add(1);
    out.tag = tag;
    for (std::size_t i = 0; i < out.zones.size(); ++i) {
        out.zones[i].id = static_cast<int>(i);
        out.zones[i].decomposition_tag = tag;
        for (int f : out.zones[i].face_cycle) {
            auto& slots = out.face_zones[static_cast<std::size_t>(f)];
            if (slots[0] == -1)
                slots[0] = static_cast<int>(i);
            else if (slots[1] == -1)
                slots[1] = static_cast<int>(i);
        }
    }
    for (auto& slots : out.face_zones)
        if (slots[0] > slots[1]) std::swap(slots[0], slots[1]);
    return out;
}

std::variant<PairIntersection, ZonePairDefect> zone_intersection(const Zone& a, const Zone& b) {
    if (a.decomposition_tag != b.decomposition_tag || a.decomposition_tag == 0)
        throw InputError("zone_intersection requires zones from one decomposition");
    if (a.id == b.id) throw InputError("zone_intersection requires two distinct zones");

    std::map<int, int> pos_a;
    for (std::size_t i = 0; i < a.face_cycle.size(); ++i)
        pos_a.emplace(a.face_cycle[i], static_cast<int>(i));

    // Shared faces in a's cycle order.
    std::vector<std::pair<int, int>> hits;  // (position in a, position in b)
    for (std::size_t j = 0; j < b.face_cycle.size(); ++j) {
        auto it = pos_a.find(b.face_cycle[j]);
        if (it != pos_a.end()) hits.emplace_back(it->second, static_cast<int>(j));
    }
    std::sort(hits.begin(), hits.end());

    if (hits.size() != 2) {
        ZonePairDefect d;
        d.kind = ZonePairDefect::Kind::intersection_count;
        d.z1 = std::min(a.id, b.id);
        d.z2 = std::max(a.id, b.id);
        for (auto& [pa, pb] : hits) d.shared_faces.push_back(a.face_cycle[static_cast<std::size_t>(pa)]);
        return d;
    }

    int La = static_cast<int>(a.length()), Lb = static_cast<int>(b.length());
    int pa1 = hits[0].first, pa2 = hits[1].first;
    int qb1 = hits[0].second, qb2 = hits[1].second;

    PairIntersection pi;
    pi.z1 = a.id;
    pi.z2 = b.id;
    pi.shared_faces = {a.face_cycle[static_cast<std::size_t>(pa1)],
                       a.face_cycle[static_cast<std::size_t>(pa2)]};
    pi.chains[0] = {pa2 - pa1 - 1, La - (pa2 - pa1) - 1};
    int fwd = ((qb2 - qb1) % Lb + Lb) % Lb;
    pi.chains[1] = {fwd - 1, Lb - fwd - 1};

    if (!pi.balanced()) {
        ZonePairDefect d;
        d.kind = ZonePairDefect::Kind::unbalanced_chains;
        d.z1 = pi.z1;
        d.z2 = pi.z2;
        d.shared_faces = {pi.shared_faces[0], pi.shared_faces[1]};
        d.chains = pi.chains;
        return d;
    }
    return pi;
}

std::optional<ZonePairDefect> build_pair_table(ZoneDecomposition& decomp) {
    decomp.pairs.clear();
    std::size_t k = decomp.zones.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            auto r = zone_intersection(decomp.zones[i], decomp.zones[j]);
            if (std::holds_alternative<ZonePairDefect>(r)) return std::get<ZonePairDefect>(r);
            decomp.pairs.push_back(std::get<PairIntersection>(r));
        }
    }
    return std::nullopt;
}

}  // namespace zg
