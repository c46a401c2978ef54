#include "zg/recognizer.hpp"

#include <sstream>
#include <stdexcept>

#include "zg/exact.hpp"

namespace zg {

const char* reason_string(Rejection::Reason r) {
    switch (r) {
        case Rejection::Reason::too_small: return "too_small";
        case Rejection::Reason::not_planar_embedding: return "not_planar_embedding";
        case Rejection::Reason::not_3_connected: return "not_3_connected";
        case Rejection::Reason::non_quad_face: return "non_quad_face";
        case Rejection::Reason::zone_self_intersection: return "zone_self_intersection";
        case Rejection::Reason::face_membership_defect: return "face_membership_defect";
        case Rejection::Reason::pair_intersection_defect: return "pair_intersection_defect";
        case Rejection::Reason::chain_defect: return "chain_defect";
    }
    return "unknown";
}

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("recognizer invariant failed: ") + what);
}

}  // namespace

RecognizeResult recognize(const RotationGraph& g) {
    if (g.n < 4) {
        Rejection rej{Rejection::Reason::too_small, {}, ""};
        rej.detail = "graph has " + std::to_string(g.n) +
                     " vertices; no polyhedron graph has fewer than 4 (a zonohedron graph "
                     "has at least 8)";
        rej.witness.v = g.n;
        return rej;
    }

    FaceStructure fs = extract_faces(g);
    PlanarityVerdict pv = check_planarity(g, fs);
    if (!pv.genus_zero) {
        Rejection rej{Rejection::Reason::not_planar_embedding, {}, ""};
        rej.witness.v = pv.v;
        rej.witness.e = pv.e;
        rej.witness.f = pv.f;
        rej.detail = "rotation system is not a sphere embedding: V - E + F = " +
                     std::to_string(pv.v) + " - " + std::to_string(pv.e) + " + " +
                     std::to_string(pv.f) + " = " + std::to_string(pv.euler_characteristic) +
                     ", expected 2";
        return rej;
    }

    if (auto cw = check_three_connected(g)) {
        Rejection rej{Rejection::Reason::not_3_connected, {}, cw->describe()};
        rej.witness.vertices = cw->vertices;
        switch (cw->kind) {
            case ConnectivityWitness::Kind::disconnected:
                rej.witness.connectivity_kind = "disconnected";
                break;
            case ConnectivityWitness::Kind::cut_vertex:
                rej.witness.connectivity_kind = "cut_vertex";
                break;
            case ConnectivityWitness::Kind::cut_pair:
                rej.witness.connectivity_kind = "cut_pair";
                break;
        }
        return rej;
    }

    auto traced = trace_zones(fs);
    if (std::holds_alternative<ZoneDefect>(traced)) {
        const ZoneDefect& d = std::get<ZoneDefect>(traced);
        switch (d.kind) {
            case ZoneDefect::Kind::non_quadrilateral: {
                Rejection rej{Rejection::Reason::non_quad_face, {}, ""};
                rej.witness.face = d.face;
                rej.witness.face_vertices = fs.faces[static_cast<std::size_t>(d.face)];
                rej.detail = "face " + std::to_string(d.face) + " has " +
                             std::to_string(rej.witness.face_vertices.size()) +
                             " sides, every face of a zonohedron graph is a quadrilateral";
                return rej;
            }
            case ZoneDefect::Kind::pinched_edge:
                // An edge bounded by one face on both sides needs a cut
                // vertex, which the connectivity check already rejected.
                require(false, "pinched edge after 3-connectivity passed");
                break;
            case ZoneDefect::Kind::self_intersection: {
                Rejection rej{Rejection::Reason::zone_self_intersection, {}, ""};
                rej.witness.face = d.face;
                rej.witness.face_vertices = fs.faces[static_cast<std::size_t>(d.face)];
                rej.witness.orbit_faces = d.orbit_faces;
                rej.witness.orbit_edges = d.orbit_edges;
                rej.detail = "the zone through face " + std::to_string(d.orbit_faces[0]) +
                             " crosses itself at face " + std::to_string(d.face) + " after " +
                             std::to_string(d.orbit_faces.size() - 1) + " steps";
                return rej;
            }
        }
    }

    ZoneDecomposition decomp = std::get<ZoneDecomposition>(std::move(traced));

    // Each face must lie in exactly two distinct zones. With quadrilateral
    // faces and simple orbits this cannot fail, but it is part of the
    // contract, so recheck rather than assume.
    for (std::size_t f = 0; f < decomp.face_zones.size(); ++f) {
        const auto& [z0, z1] = decomp.face_zones[f];
        if (z0 < 0 || z1 < 0 || z0 == z1) {
            Rejection rej{Rejection::Reason::face_membership_defect, {}, ""};
            rej.witness.face = static_cast<int>(f);
            rej.detail = "face " + std::to_string(f) + " does not lie in two distinct zones";
            return rej;
        }
    }

    if (auto pd = build_pair_table(decomp)) {
        if (pd->kind == ZonePairDefect::Kind::intersection_count) {
            Rejection rej{Rejection::Reason::pair_intersection_defect, {}, ""};
            rej.witness.zones = {pd->z1, pd->z2};
            rej.witness.shared_faces = pd->shared_faces;
            rej.detail = "zones " + std::to_string(pd->z1) + " and " + std::to_string(pd->z2) +
                         " share " + std::to_string(pd->shared_faces.size()) +
                         " face(s), expected exactly 2";
            return rej;
        }
        Rejection rej{Rejection::Reason::chain_defect, {}, ""};
        rej.witness.zones = {pd->z1, pd->z2};
        rej.witness.shared_faces = pd->shared_faces;
        rej.witness.chains = pd->chains;
        rej.detail = "zones " + std::to_string(pd->z1) + " and " + std::to_string(pd->z2) +
                     " are split into chains of lengths " + std::to_string(pd->chains[0][0]) +
                     "/" + std::to_string(pd->chains[0][1]) + " and " +
                     std::to_string(pd->chains[1][0]) + "/" + std::to_string(pd->chains[1][1]) +
                     ", which must be equal and non-empty";
        return rej;
    }

    // Everything the verdict implies about the numbers is forced; make sure.
    int k = static_cast<int>(decomp.zones.size());
    require(k >= 3, "an accepted graph has at least three zones");
    long F = static_cast<long>(fs.face_count());
    require(F == static_cast<long>(k) * (k - 1), "face count must be k(k-1)");
    require(g.n == k * (k - 1) + 2, "vertex count must be k(k-1)+2");
    ZoneCertificate cert;
    cert.zone_count = k;
    for (const Zone& z : decomp.zones) {
        require(static_cast<long>(z.length()) == 2L * (k - 1), "zone length must be 2(k-1)");
        cert.zone_lengths.push_back(static_cast<int>(z.length()));
    }
    cert.decomposition = std::move(decomp);
    return cert;
}

std::string explain(const RecognizeResult& r) {
    std::ostringstream out;
    if (accepted(r)) {
        const ZoneCertificate& c = std::get<ZoneCertificate>(r);
        out << "accepted: graph of a zonohedron with " << c.zone_count << " zones\n";
        out << "zone lengths:";
        for (int l : c.zone_lengths) out << " " << l;
        out << "\n";
        for (const Zone& z : c.decomposition.zones) {
            out << "  zone " << z.id << " faces:";
            for (int f : z.face_cycle) out << " " << f;
            out << "\n";
        }
        return out.str();
    }
    const Rejection& rej = std::get<Rejection>(r);
    out << "rejected: " << reason_string(rej.reason) << "\n";
    out << rej.detail << "\n";
    const RejectionWitness& w = rej.witness;
    if (!w.vertices.empty()) {
        out << "witness vertices:";
        for (int v : w.vertices) out << " " << v;
        out << "\n";
    }
    if (w.face >= 0 && !w.face_vertices.empty()) {
        out << "witness face " << w.face << ":";
        for (int v : w.face_vertices) out << " " << v;
        out << "\n";
    }
    if (!w.orbit_faces.empty()) {
        out << "orbit faces:";
        for (int f : w.orbit_faces) out << " " << f;
        out << "\n";
    }
    if (w.zones[0] >= 0) {
        out << "zones " << w.zones[0] << " and " << w.zones[1] << "; shared faces:";
        for (int f : w.shared_faces) out << " " << f;
        out << "\n";
    }
    return out.str();
}

}  // namespace zg
