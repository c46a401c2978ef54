#include "zg/realizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "zg/oracle.hpp"
#include "zg/zones.hpp"

namespace zg {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("realizer invariant failed: ") + what);
}

std::vector<int> normalized_cycle(const std::vector<int>& cyc) {
    std::size_t L = cyc.size();
    std::size_t k = static_cast<std::size_t>(
        std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> out(L);
    for (std::size_t i = 0; i < L; ++i) out[i] = cyc[(k + i) % L];
    return out;
}

}  // namespace

RotationGraph standard_cube_graph() {
    RotationGraph g;
    g.n = 8;
    g.rot = {{1, 3, 4}, {0, 5, 2}, {1, 6, 3}, {0, 2, 7},
             {0, 7, 5}, {1, 4, 6}, {2, 5, 7}, {3, 6, 4}};
    return g;
}

Polyhedron cube_base(const Rat& scale) {
    if (sgn(scale) <= 0) throw InputError("scale must be positive");
    const Rat& s = scale;
    Polyhedron p;
    p.vertices = {{Rat(0), Rat(0), Rat(0)}, {s, Rat(0), Rat(0)}, {s, s, Rat(0)},
                  {Rat(0), s, Rat(0)},      {Rat(0), Rat(0), s}, {s, Rat(0), s},
                  {s, s, s},                {Rat(0), s, s}};
    p.faces = {{0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
               {2, 3, 7, 6}, {1, 2, 6, 5}, {3, 0, 4, 7}};
    return p;
}

Polyhedron realize_cube(const RotationGraph& cube, const Rat& scale) {
    if (sgn(scale) <= 0) throw InputError("scale must be positive");
    if (!is_cube(cube)) throw InputError("realize_cube needs a cube graph");
    FaceStructure fs = extract_faces(cube);
    auto traced = trace_zones(fs);
    require(std::holds_alternative<ZoneDecomposition>(traced), "cube zones must trace");
    const ZoneDecomposition& dec = std::get<ZoneDecomposition>(traced);
    require(dec.zones.size() == 3, "cube has three zones");

    // Each zone's crossing edges are translates of one coordinate axis; walk
    // the zone band to orient them consistently (opposite edges of a face
    // cancel when traversed cyclically).
    const Vec3 axes[3] = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1)};
    std::map<std::pair<int, int>, Vec3> dir;
    auto learn = [&](int a, int b, const Vec3& v) {
        auto it = dir.find({a, b});
        if (it != dir.end())
            require(it->second == v, "cube edge direction propagation is consistent");
        dir[{a, b}] = v;
        dir[{b, a}] = -v;
    };
    for (const Zone& z : dec.zones) {
        Vec3 axis = scale * axes[z.id];
        learn(z.zone_edges[0].first, z.zone_edges[0].second, axis);
        std::size_t L = z.length();
        for (std::size_t i = 0; i < L; ++i) {
            const auto& cyc = fs.faces[static_cast<std::size_t>(z.face_cycle[i])];
            // entry edge of this face is zone_edges[i], exit is zone_edges[i+1]
            for (int q = 0; q < 4; ++q) {
                int a = cyc[static_cast<std::size_t>(q)], b = cyc[static_cast<std::size_t>((q + 1) % 4)];
                if (std::minmax(a, b) != std::minmax(z.zone_edges[i].first, z.zone_edges[i].second))
                    continue;
                auto it = dir.find({a, b});
                require(it != dir.end(), "zone walk reaches a known edge");
                int c = cyc[static_cast<std::size_t>((q + 2) % 4)],
                    d = cyc[static_cast<std::size_t>((q + 3) % 4)];
                learn(c, d, -it->second);
                break;
            }
        }
    }

    // Integrate positions from vertex 0.
    std::vector<Vec3> pos(8);
    std::vector<char> seen(8, 0);
    seen[0] = 1;
    std::vector<int> stack = {0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : cube.rot[static_cast<std::size_t>(v)]) {
            if (seen[w]) continue;
            seen[w] = 1;
            pos[static_cast<std::size_t>(w)] = pos[static_cast<std::size_t>(v)] + dir.at({v, w});
            stack.push_back(w);
        }
    }
    for (int v = 0; v < 8; ++v)
        for (int w : cube.rot[static_cast<std::size_t>(v)])
            require(pos[static_cast<std::size_t>(w)] ==
                        pos[static_cast<std::size_t>(v)] + dir.at({v, w}),
                    "cube edge vectors close up");

    Vec3 low = pos[0];
    for (const Vec3& q : pos) {
        if (cmp(q.x, low.x) < 0) low.x = q.x;
        if (cmp(q.y, low.y) < 0) low.y = q.y;
        if (cmp(q.z, low.z) < 0) low.z = q.z;
    }
    for (Vec3& q : pos) q = q - low;

    Polyhedron p;
    p.vertices = pos;
    p.faces = fs.faces;

    // Outward orientation: the combinatorial faces are fixed, so if the signed
    // volume comes out negative, reflect the geometry.
    Rat vol6(0);
    for (const auto& cyc : p.faces) {
        const Vec3& a = p.vertices[static_cast<std::size_t>(cyc[0])];
        for (std::size_t i = 1; i + 1 < cyc.size(); ++i) {
            const Vec3& b = p.vertices[static_cast<std::size_t>(cyc[i])];
            const Vec3& c = p.vertices[static_cast<std::size_t>(cyc[i + 1])];
            vol6 += dot(a, cross(b, c));
        }
    }
    require(sgn(vol6) != 0, "cube has nonzero volume");
    if (sgn(vol6) < 0)
        for (Vec3& q : p.vertices) std::swap(q.x, q.y);
    return p;
}

namespace {

bool satisfies(const Vec3& d, const std::vector<Vec3>& rows) {
    if (is_zero(d)) return false;
    for (const Vec3& r : rows)
        if (sgn(dot(r, d)) <= 0) return false;
    return true;
}

struct MarginDirection {
    Vec3 d;      // exact rational direction strictly inside the cone
    Rat margin;  // least L-inf-normalized slack of the rows at d
};

// Deepest direction of the open cone {d : r . d > 0} visible on one axis
// chart: with coordinate `axis` fixed to `side`, maximizes the least slack
// (rows L-inf normalized) over the other two coordinates by exact LP.
std::optional<MarginDirection> chart_margin(const std::vector<Vec3>& uniq,
                                            const std::vector<Rat>& w, int axis, int side) {
    auto coord = [](const Vec3& r, int i) -> const Rat& {
        return i == 0 ? r.x : i == 1 ? r.y : r.z;
    };
    int u = (axis + 1) % 3, v = (axis + 2) % 3;
    std::vector<HalfSpace> hs;
    hs.reserve(uniq.size() + 1);
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        // r_u U + r_v V + side r_axis >= tau w_i
        hs.push_back({{-coord(uniq[i], u), -coord(uniq[i], v), w[i]},
                      Rat(side) * coord(uniq[i], axis)});
    }
    hs.push_back({{Rat(0), Rat(0), Rat(1)}, Rat(1)});  // tau <= 1
    auto sol = solve_lp3(hs, {Rat(0), Rat(0), Rat(1)}, Rat(1 << 20));
    if (!sol || sgn((*sol)[2]) <= 0) return std::nullopt;
    Rat c[3];
    c[axis] = Rat(side);
    c[u] = (*sol)[0];
    c[v] = (*sol)[1];
    return MarginDirection{Vec3{c[0], c[1], c[2]}, (*sol)[2]};
}

std::vector<Rat> row_weights(const std::vector<Vec3>& uniq) {
    std::vector<Rat> w;
    w.reserve(uniq.size());
    for (const Vec3& r : uniq) {
        Rat m = abs(r.x);
        if (abs(r.y) > m) m = abs(r.y);
        if (abs(r.z) > m) m = abs(r.z);
        w.push_back(std::move(m));
    }
    return w;
}

// Deepest direction over all six charts. A feasible direction scaled by its
// largest coordinate lies on some chart with the other coordinates in
// [-1, 1], so nullopt means the open cone is empty.
std::optional<MarginDirection> margin_direction(const std::vector<Vec3>& uniq) {
    std::vector<Rat> w = row_weights(uniq);
    std::optional<MarginDirection> best;
    for (int axis = 2; axis >= 0; --axis)
        for (int side : {1, -1}) {
            auto md = chart_margin(uniq, w, axis, side);
            if (md && (!best || md->margin > best->margin)) best = std::move(md);
        }
    return best;
}

Int round_quotient(const Int& a, const Int& b) {  // nearest, half away, b > 0
    Int two_a = 2 * a;
    Int adj = sgn(a) >= 0 ? b : -b;
    Int num = two_a + adj;
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), Int(2 * b).get_mpz_t());
    return q;
}

Int rat_round(const Rat& q) { return round_quotient(q.get_num(), q.get_den()); }

// Integer direction near md.d that keeps most of its margin: scaling by D
// and rounding moves each row's normalized slack by at most 3/(2D), so any
// D > 3/margin keeps half of it. The floor keeps easy steps on a coarse
// grid so coordinates stay small.
Vec3 round_direction(const MarginDirection& md, const std::vector<Vec3>& rows) {
    Int dmin;
    mpz_cdiv_q(dmin.get_mpz_t(), Int(3 * md.margin.get_den()).get_mpz_t(),
               md.margin.get_num().get_mpz_t());
    Int D = std::max(Int(4096), dmin + 1);
    Vec3 cand{Rat(rat_round(D * md.d.x)), Rat(rat_round(D * md.d.y)), Rat(rat_round(D * md.d.z))};
    if (satisfies(cand, rows)) return primitive(cand);
    return primitive(md.d);
}

constexpr const char* kEmptyCone = "no direction is strictly compatible with the lifted side";

std::vector<Vec3> dedup_rows(const std::vector<Vec3>& rows) {
    std::set<Vec3, Vec3Less> dedup;
    for (const Vec3& r : rows) dedup.insert(primitive(r));
    return {dedup.begin(), dedup.end()};
}

std::optional<Vec3> solve_rows(const std::vector<Vec3>& rows) {
    auto md = margin_direction(dedup_rows(rows));
    if (!md) return std::nullopt;
    return md->d;
}

// Several interior points of the cone {d : r . d > 0}, spread across the
// chart solutions (each coordinate fixed to +-1 in turn), the row sum, and
// pairwise blends. One point is enough to certify feasibility, but a repair
// sweep seeded from it can still dead-end, so callers probe each in turn.
std::vector<Vec3> cone_points(const std::vector<Vec3>& rows) {
    std::vector<Vec3> uniq = dedup_rows(rows);
    std::vector<Rat> w = row_weights(uniq);
    std::vector<Vec3> out;
    auto push = [&](const Vec3& d) {
        if (is_zero(d)) return;
        for (const Vec3& r : uniq)
            if (sgn(dot(r, d)) <= 0) return;
        Vec3 p = primitive(d);
        for (const Vec3& q : out)
            if (q == p) return;
        out.push_back(p);
    };
    std::optional<MarginDirection> best;
    for (int axis = 2; axis >= 0; --axis)
        for (int side : {1, -1}) {
            auto md = chart_margin(uniq, w, axis, side);
            if (!md) continue;
            if (!best || md->margin > best->margin) best = *md;
            push(round_direction(*md, uniq));
        }
    if (out.empty()) return out;
    // Deepest chart point first, then the others, the row sum, and pairwise
    // blends for extra spread.
    Vec3 lead = round_direction(*best, uniq);
    for (std::size_t i = 0; i < out.size(); ++i)
        if (out[i] == lead) std::swap(out[0], out[i]);
    Vec3 sum{};
    for (const Vec3& r : uniq) sum += r;
    push(sum);
    std::size_t base = out.size();
    for (std::size_t i = 0; i < base && out.size() < 8; ++i)
        for (std::size_t j = i + 1; j < base && out.size() < 8; ++j)
            push(out[i] + out[j]);
    return out;
}

// Shared validation for find_direction and expand_zone: checks that the mask
// and cycle describe the two sides of a band and returns the face structure.
FaceStructure band_structure(const Polyhedron& p,
                             const std::vector<std::pair<int, int>>& cycle_edges,
                             const std::vector<char>& lifted_faces) {
    if (lifted_faces.size() != p.face_count())
        throw InputError("lifted-face mask does not match the face count");
    auto fso = face_structure_from_faces(p.faces);
    if (!fso) throw InputError("polyhedron faces are not a closed oriented surface");
    std::set<std::pair<int, int>> cyc;
    for (auto [a, b] : cycle_edges) {
        if (a > b) std::swap(a, b);
        if (!cyc.emplace(a, b).second) throw InputError("cycle repeats an edge");
    }
    std::size_t boundary = 0;
    for (std::size_t e = 0; e < fso->edge_count(); ++e) {
        int f0 = fso->edge_sides[e][0].first, f1 = fso->edge_sides[e][1].first;
        bool split = lifted_faces[static_cast<std::size_t>(f0)] !=
                     lifted_faces[static_cast<std::size_t>(f1)];
        bool listed = cyc.count(fso->edge_ends[e]) > 0;
        if (split != listed)
            throw InputError("cycle does not separate the lifted faces from the rest");
        boundary += split;
    }
    if (boundary != cyc.size())
        throw InputError("cycle contains edges that are not on the surface");
    return std::move(*fso);
}

// One completed expansion, kept so a later step with an empty cone can move
// earlier translations inside their own cones and be retried. Face indices
// below band_begin are exactly the faces of the polyhedron this step expanded
// (expansion appends band quads and never reorders), translations never
// change a face's normal, and a face's side mask is fixed, so the strict
// system this step's translation must keep satisfying can always be rebuilt
// from the current geometry: side_mask[i] ? n_i : -n_i for i < band_begin.
struct StepRecord {
    std::vector<char> side_mask;   // lifted flag per face of the pre-step polyhedron
    std::size_t band_begin = 0;    // band quad range in the expanded polyhedron
    std::size_t band_count = 0;
    std::vector<char> lifted_mask; // vertex ids translated along with t
    Vec3 t;                        // translation applied
};

// A step's direction cone can be empty even on certified input: strict
// feasibility depends on where earlier expansions placed their translations,
// not only on the combinatorics. The only faces whose normals move with step
// s's translation t_s are band quads of step s and of later steps whose base
// edge is a translate of t_s (normal = cross(w, t) for the two spanning edge
// vectors), so re-solving a suffix of the translations can reopen the cone:
//   - pick d for the failing step from the system with the last r bands'
//     rows dropped (those faces all sit at indices >= records[S-r].band_begin);
//   - re-solve t_s for s = S-r..S-1 in order: each must satisfy its own
//     rebuilt strict system (normals of faces before its band, final values
//     for already re-solved earlier translations) plus the coupling rows
//     sign * det(w, t_s, d) > 0 from its band quads in the failing step's
//     system, which are linear in t_s once d is fixed;
//   - translate each step's lifted vertices by the change in t_s before
//     moving on, so later systems read current geometry.
// The coupling rows steer the suffix toward configurations feasible at d,
// but they are sufficient rather than necessary: the caller only needs the
// failing step's full system to become nonempty at some direction. Because
// the joint feasible set is not convex, a step's chosen point can also
// dead-end the next step. So each step branches depth-first over several
// cone points, probing both the steered system and the step's own system
// alone, rolls the translation back on failure, and an exact solve of the
// full rebuilt system at the leaf decides success, all under a global node
// budget; exhaustion falls through to a deeper suffix.
bool repair_translations(Polyhedron& p, const std::vector<char>& lifted_faces,
                         std::vector<StepRecord>& records, const Rat& scale, int budget) {
    const std::size_t S = records.size();
    Vec3 dhat;

    std::function<bool(std::size_t)> extend = [&](std::size_t s) -> bool {
        if (--budget < 0) return false;
        if (s == S) {
            std::vector<Vec3> full;
            full.reserve(p.face_count());
            for (std::size_t f = 0; f < p.face_count(); ++f) {
                Vec3 n = face_normal(p, static_cast<int>(f));
                full.push_back(lifted_faces[f] ? n : -n);
            }
            return solve_rows(full).has_value();
        }
        StepRecord& rec = records[s];
        std::vector<Vec3> own;
        own.reserve(rec.band_begin);
        for (std::size_t f = 0; f < rec.band_begin; ++f) {
            Vec3 n = face_normal(p, static_cast<int>(f));
            own.push_back(rec.side_mask[f] ? n : -n);
        }
        std::vector<Vec3> steered = own;
        for (std::size_t b = rec.band_begin; b < rec.band_begin + rec.band_count; ++b) {
            const auto& quad = p.faces[b];
            Vec3 w = p.vertices[static_cast<std::size_t>(quad[1])] -
                     p.vertices[static_cast<std::size_t>(quad[0])];
            Vec3 row = cross(dhat, w);
            steered.push_back(lifted_faces[b] ? row : -row);
        }
        std::vector<std::pair<Vec3, const std::vector<Vec3>*>> cands;
        for (const Vec3& c : cone_points(steered)) cands.emplace_back(c, &steered);
        for (const Vec3& c : cone_points(own)) {
            bool dup = false;
            for (const auto& [q, sys] : cands)
                if (q == c) dup = true;
            if (!dup) cands.emplace_back(c, &own);
        }
        for (const auto& [cand, sys] : cands) {
            Vec3 tprime = scale * shrink_direction(cand, *sys);
            Vec3 delta = tprime - rec.t;
            Vec3 prev_t = rec.t;
            for (std::size_t v = 0; v < rec.lifted_mask.size(); ++v)
                if (rec.lifted_mask[v]) p.vertices[v] += delta;
            rec.t = tprime;
            if (extend(s + 1)) return true;
            for (std::size_t v = 0; v < rec.lifted_mask.size(); ++v)
                if (rec.lifted_mask[v]) p.vertices[v] = p.vertices[v] - delta;
            rec.t = prev_t;
            if (budget < 0) break;
        }
        return false;
    };

    for (std::size_t r = 1; r <= S && budget > 0; ++r) {
        const std::size_t first = S - r;
        std::vector<Vec3> relaxed;
        relaxed.reserve(records[first].band_begin);
        for (std::size_t f = 0; f < records[first].band_begin; ++f) {
            Vec3 n = face_normal(p, static_cast<int>(f));
            relaxed.push_back(lifted_faces[f] ? n : -n);
        }
        for (const Vec3& cand : cone_points(relaxed)) {
            dhat = cand;
            if (extend(first)) return true;
            if (budget <= 0) break;
        }
    }
    return false;
}

// Expansion order is greedy: each step commits to one point of its cone, and
// a bad early commitment can make a later step's cone empty even though the
// graph is realizable. Attempts are numbered in base 5: digit s selects the
// direction for expansion step s, 0 meaning the default greedy pick and 1-4
// one of the step's sampled cone points. Attempt 0 is the pure greedy run.
DirectionResult pick_direction(const Polyhedron& p,
                               const std::vector<std::pair<int, int>>& cycle_edges,
                               const std::vector<char>& lifted_faces, int variation,
                               std::size_t step) {
    int digit = variation;
    for (std::size_t i = 0; i < step && digit > 0; ++i) digit /= 5;
    digit %= 5;
    if (digit == 0) return find_direction(p, cycle_edges, lifted_faces);

    band_structure(p, cycle_edges, lifted_faces);
    std::vector<Vec3> rows;
    rows.reserve(p.face_count());
    for (std::size_t f = 0; f < p.face_count(); ++f) {
        Vec3 n = face_normal(p, static_cast<int>(f));
        rows.push_back(lifted_faces[f] ? n : -n);
    }
    std::vector<Vec3> menu = cone_points(rows);
    if (menu.empty()) throw InputError(kEmptyCone);
    const Vec3& c = menu[static_cast<std::size_t>(digit - 1) % menu.size()];
    return {shrink_direction(c, rows), true};
}

}  // namespace

DirectionResult find_direction(const Polyhedron& p,
                               const std::vector<std::pair<int, int>>& cycle_edges,
                               const std::vector<char>& lifted_faces) {
    band_structure(p, cycle_edges, lifted_faces);

    std::vector<Vec3> rows;
    rows.reserve(p.face_count());
    bool any_lifted = false, any_fixed = false;
    for (std::size_t f = 0; f < p.face_count(); ++f) {
        Vec3 n = face_normal(p, static_cast<int>(f));
        if (lifted_faces[f]) {
            any_lifted = true;
            rows.push_back(n);
        } else {
            any_fixed = true;
            rows.push_back(-n);
        }
    }
    if (!any_lifted || !any_fixed)
        throw InputError("expansion needs faces on both sides of the cycle");

    Vec3 d{};
    for (std::size_t f = 0; f < p.face_count(); ++f)
        if (lifted_faces[f]) d += primitive(face_normal(p, static_cast<int>(f)));
    if (satisfies(d, rows)) return {shrink_direction(primitive(d), rows), false};

    auto sol = solve_rows(rows);
    if (!sol) throw InputError(kEmptyCone);
    Vec3 exact = primitive(*sol);
    require(satisfies(exact, rows), "cone solution satisfies the strict system");
    return {shrink_direction(exact, rows), true};
}

Expansion expand_zone(const Polyhedron& p, const std::vector<std::pair<int, int>>& cycle_edges,
                      const std::vector<char>& lifted_faces, const Vec3& t) {
    FaceStructure fs = band_structure(p, cycle_edges, lifted_faces);
    for (std::size_t f = 0; f < p.face_count(); ++f) {
        int s = sgn(dot(face_normal(p, static_cast<int>(f)), t));
        if (lifted_faces[f] ? s <= 0 : s >= 0)
            throw InputError("direction is not strictly compatible with the lifted side");
    }

    const int V = static_cast<int>(p.vertex_count());
    std::vector<char> on_lift(static_cast<std::size_t>(V), 0), on_fix(static_cast<std::size_t>(V), 0);
    for (std::size_t f = 0; f < p.face_count(); ++f)
        for (int v : p.faces[f]) (lifted_faces[f] ? on_lift : on_fix)[static_cast<std::size_t>(v)] = 1;

    Expansion ex;
    ex.poly.vertices = p.vertices;
    ex.moved.assign(static_cast<std::size_t>(V), 0);
    ex.lifted_copy.assign(static_cast<std::size_t>(V), -1);
    for (int v = 0; v < V; ++v) {
        require(on_lift[static_cast<std::size_t>(v)] || on_fix[static_cast<std::size_t>(v)],
                "every vertex lies on some face");
        if (on_lift[static_cast<std::size_t>(v)] && !on_fix[static_cast<std::size_t>(v)]) {
            ex.poly.vertices[static_cast<std::size_t>(v)] =
                p.vertices[static_cast<std::size_t>(v)] + t;
            ex.moved[static_cast<std::size_t>(v)] = 1;
        } else if (on_lift[static_cast<std::size_t>(v)] && on_fix[static_cast<std::size_t>(v)]) {
            ex.lifted_copy[static_cast<std::size_t>(v)] = static_cast<int>(ex.poly.vertices.size());
            ex.poly.vertices.push_back(p.vertices[static_cast<std::size_t>(v)] + t);
        }
    }
    for (const auto& [a, b] : cycle_edges)
        require(ex.lifted_copy[static_cast<std::size_t>(a)] >= 0 &&
                    ex.lifted_copy[static_cast<std::size_t>(b)] >= 0,
                "cycle endpoints straddle the band");

    for (std::size_t f = 0; f < p.face_count(); ++f) {
        std::vector<int> cyc = p.faces[f];
        if (lifted_faces[f])
            for (int& v : cyc)
                if (ex.lifted_copy[static_cast<std::size_t>(v)] >= 0)
                    v = ex.lifted_copy[static_cast<std::size_t>(v)];
        ex.poly.faces.push_back(std::move(cyc));
    }

    // Stitch one parallelogram per cycle edge, oriented against the fixed
    // face's traversal so the surface stays consistently oriented.
    for (auto [a, b] : cycle_edges) {
        int e = fs.edge_id(a, b);
        require(e >= 0, "cycle edge exists");
        int x = -1, y = -1;
        for (const auto& [f, pos] : fs.edge_sides[static_cast<std::size_t>(e)]) {
            if (!lifted_faces[static_cast<std::size_t>(f)]) {
                x = fs.faces[static_cast<std::size_t>(f)][static_cast<std::size_t>(pos)];
                y = fs.faces[static_cast<std::size_t>(f)]
                            [static_cast<std::size_t>((pos + 1) % fs.faces[static_cast<std::size_t>(f)].size())];
            }
        }
        require(x >= 0, "cycle edge has a fixed side");
        ex.poly.faces.push_back({y, x, ex.lifted_copy[static_cast<std::size_t>(x)],
                                 ex.lifted_copy[static_cast<std::size_t>(y)]});
        ++ex.band_faces;
    }
    return ex;
}

namespace {

Polyhedron realize_attempt(const RotationGraph& g, const ZoneCertificate& cert,
                           const ReductionTrace& trace, const Rat& scale, RealizationLog* log,
                           int variation, int repair_budget) {
    if (sgn(scale) <= 0) throw InputError("scale must be positive");
    if (trace.graphs.size() != trace.steps.size() + 1 || trace.graphs.front().n != g.n ||
        static_cast<int>(trace.steps.size()) != cert.zone_count - 3)
        throw InputError("trace does not belong to this graph and certificate");

    Polyhedron P = realize_cube(trace.graphs.back(), scale);
    std::vector<int> label(P.vertex_count());
    std::iota(label.begin(), label.end(), 0);
    std::vector<StepRecord> records;
    if (log) {
        log->generators = {scale * Vec3(1, 0, 0), scale * Vec3(0, 1, 0), scale * Vec3(0, 0, 1)};
        log->band_sizes.clear();
        log->fallback_count = 0;
        log->backtrack_count = 0;
    }

    for (int k = static_cast<int>(trace.steps.size()) - 1; k >= 0; --k) {
        const ReductionStep& st = trace.steps[static_cast<std::size_t>(k)];
        const RotationGraph& gp = trace.graphs[static_cast<std::size_t>(k)];
        const RotationGraph& gn = trace.graphs[static_cast<std::size_t>(k) + 1];

        // Split gp along the zone's crossing edges; the two components are
        // the sides of the band.
        std::set<std::pair<int, int>> zedges;
        for (auto [u, v] : st.zone.zone_edges) zedges.emplace(std::min(u, v), std::max(u, v));
        std::vector<int> comp(static_cast<std::size_t>(gp.n), -1);
        int ncomp = 0;
        for (int v0 = 0; v0 < gp.n; ++v0) {
            if (comp[static_cast<std::size_t>(v0)] != -1) continue;
            comp[static_cast<std::size_t>(v0)] = ncomp;
            std::vector<int> stack = {v0};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : gp.rot[static_cast<std::size_t>(v)]) {
                    if (comp[static_cast<std::size_t>(w)] != -1) continue;
                    if (zedges.count({std::min(v, w), std::max(v, w)})) continue;
                    comp[static_cast<std::size_t>(w)] = comp[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                }
            }
            ++ncomp;
        }
        require(ncomp == 2, "zone crossing edges split the graph into two sides");
        int lift_side = comp[static_cast<std::size_t>(
            std::min(st.zone.zone_edges[0].first, st.zone.zone_edges[0].second))];

        FaceStructure fsn = extract_faces(gn);
        FaceStructure fsp = extract_faces(gp);
        std::map<std::vector<int>, int> by_cycle;
        for (std::size_t j = 0; j < fsn.faces.size(); ++j)
            by_cycle.emplace(normalized_cycle(fsn.faces[j]), static_cast<int>(j));
        std::vector<int> inv_face(fsn.face_count(), -1);
        for (std::size_t i = 0; i < st.face_map.size(); ++i)
            if (st.face_map[i] >= 0) inv_face[static_cast<std::size_t>(st.face_map[i])] =
                static_cast<int>(i);
        for (int j : inv_face) require(j >= 0, "every contracted face has a source face");

        std::vector<char> liftedP(P.face_count(), 0);
        for (std::size_t fi = 0; fi < P.face_count(); ++fi) {
            std::vector<int> labeled;
            for (int v : P.faces[fi]) labeled.push_back(label[static_cast<std::size_t>(v)]);
            auto it = by_cycle.find(normalized_cycle(labeled));
            require(it != by_cycle.end(), "realized face matches a graph face");
            int src = inv_face[static_cast<std::size_t>(it->second)];
            int side = comp[static_cast<std::size_t>(
                fsp.faces[static_cast<std::size_t>(src)][0])];
            liftedP[fi] = (side == lift_side);
        }

        std::vector<int> pid(static_cast<std::size_t>(gn.n), -1);
        for (std::size_t v = 0; v < P.vertex_count(); ++v)
            pid[static_cast<std::size_t>(label[v])] = static_cast<int>(v);
        std::vector<std::pair<int, int>> cycleP = zone_cycle(st);
        for (auto& [a, b] : cycleP) {
            a = pid[static_cast<std::size_t>(a)];
            b = pid[static_cast<std::size_t>(b)];
        }

        DirectionResult dr;
        try {
            dr = pick_direction(P, cycleP, liftedP, variation, records.size());
        } catch (const InputError& err) {
            if (std::string(err.what()) != kEmptyCone ||
                !repair_translations(P, liftedP, records, scale, repair_budget))
                throw;
            if (log) {
                ++log->backtrack_count;
                for (std::size_t s = 0; s < records.size(); ++s)
                    log->generators[3 + s] = records[s].t;
            }
            dr = find_direction(P, cycleP, liftedP);
        }
        Vec3 t = scale * dr.d;
        Expansion ex = expand_zone(P, cycleP, liftedP, t);

        StepRecord rec;
        rec.side_mask = liftedP;
        rec.band_begin = P.face_count();
        rec.band_count = static_cast<std::size_t>(ex.band_faces);
        rec.t = t;
        rec.lifted_mask.assign(ex.poly.vertex_count(), 0);
        for (std::size_t v = 0; v < P.vertex_count(); ++v) {
            if (ex.moved[v]) rec.lifted_mask[v] = 1;
            if (ex.lifted_copy[v] >= 0)
                rec.lifted_mask[static_cast<std::size_t>(ex.lifted_copy[v])] = 1;
        }
        // A translated copy of a vertex keeps riding every earlier
        // translation its source rode; membership in the earlier lifted sets
        // must follow the copy or later re-solves would tear faces apart.
        for (StepRecord& old : records) {
            old.lifted_mask.resize(ex.poly.vertex_count(), 0);
            for (std::size_t v = 0; v < P.vertex_count(); ++v)
                if (ex.lifted_copy[v] >= 0 && old.lifted_mask[v])
                    old.lifted_mask[static_cast<std::size_t>(ex.lifted_copy[v])] = 1;
        }

        // Pull labels back from gn to gp: the fixed copy of a cycle vertex
        // takes the fixed-side endpoint, the translated copy the lifted-side
        // one; everything else has a unique source.
        std::vector<std::vector<int>> pre(static_cast<std::size_t>(gn.n));
        for (int u = 0; u < gp.n; ++u)
            pre[static_cast<std::size_t>(st.vertex_map[static_cast<std::size_t>(u)])].push_back(u);
        std::vector<int> new_label(ex.poly.vertex_count(), -1);
        for (std::size_t v = 0; v < P.vertex_count(); ++v) {
            int w = label[v];
            const auto& srcs = pre[static_cast<std::size_t>(w)];
            if (ex.lifted_copy[v] >= 0) {
                require(srcs.size() == 2, "cycle vertex has two sources");
                int ua = srcs[0], ub = srcs[1];
                if (comp[static_cast<std::size_t>(ua)] != lift_side) std::swap(ua, ub);
                require(comp[static_cast<std::size_t>(ua)] == lift_side &&
                            comp[static_cast<std::size_t>(ub)] != lift_side,
                        "cycle vertex sources sit on opposite sides");
                new_label[v] = ub;
                new_label[static_cast<std::size_t>(ex.lifted_copy[v])] = ua;
            } else {
                require(srcs.size() == 1, "interior vertex has a unique source");
                require((comp[static_cast<std::size_t>(srcs[0])] == lift_side) ==
                            (ex.moved[v] != 0),
                        "graph side matches the geometric side");
                new_label[v] = srcs[0];
            }
        }
        P = std::move(ex.poly);
        label = std::move(new_label);
        records.push_back(std::move(rec));
        for (int l : label) require(l >= 0, "labels are total");

        if (log) {
            log->band_sizes.push_back(ex.band_faces);
            log->generators.push_back(t);
            log->fallback_count += dr.fallback_used ? 1 : 0;
        }
    }

    require(static_cast<int>(P.vertex_count()) == g.n, "realization has one vertex per graph vertex");
    Polyhedron out;
    out.vertices.resize(P.vertex_count());
    std::vector<char> hit(P.vertex_count(), 0);
    for (std::size_t v = 0; v < P.vertex_count(); ++v) {
        int l = label[v];
        require(l >= 0 && l < g.n && !hit[static_cast<std::size_t>(l)], "labels are a bijection");
        hit[static_cast<std::size_t>(l)] = 1;
        out.vertices[static_cast<std::size_t>(l)] = P.vertices[v];
    }
    out.faces = P.faces;
    for (auto& cyc : out.faces)
        for (int& v : cyc) v = label[static_cast<std::size_t>(v)];

    require(same_embedding(graph_of(out), g) != EmbeddingMatch::none,
            "realization induces the input embedding");
    return out;
}

}  // namespace

Polyhedron realize(const RotationGraph& g, const ZoneCertificate& cert,
                   const ReductionTrace& trace, const Rat& scale, RealizationLog* log) {
    // Attempt 0 runs the greedy construction with the full repair budget;
    // the remaining attempts vary the first expansion step's direction and
    // keep repair on a short leash, since a trace that resists all of them
    // is better served by a different construction order (realize_search).
    constexpr int kAttempts = 5;
    for (int variation = 0;; ++variation) {
        try {
            return realize_attempt(g, cert, trace, scale, log, variation,
                                   variation == 0 ? 2000 : 300);
        } catch (const InputError& err) {
            if (variation + 1 >= kAttempts || std::string(err.what()) != kEmptyCone) throw;
        }
    }
}

RealizeSearchResult realize_search(const RotationGraph& g, const ZoneCertificate& cert,
                                   const Rat& scale, RealizationLog* log) {
    // The canonical order gets the full arsenal; alternates only need the
    // cheap greedy pass, because realizable graphs have many workable orders
    // and scanning them is faster than searching hard inside one.
    constexpr int kOrders = 24;
    RealizeSearchResult res;
    res.trace = reduce_to_cube(g, cert);
    try {
        res.poly = realize(g, cert, res.trace, scale, log);
        return res;
    } catch (const InputError& err) {
        if (std::string(err.what()) != kEmptyCone) throw;
    }
    for (int order = 1;; ++order) {
        res.trace = reduce_to_cube(g, cert, order);
        res.orders_tried = order + 1;
        try {
            res.poly = realize_attempt(g, cert, res.trace, scale, log, 0, 300);
            return res;
        } catch (const InputError& err) {
            if (order + 1 >= kOrders || std::string(err.what()) != kEmptyCone) throw;
        }
    }
}

}  // namespace zg
