#include "zg/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace zg {

using nlohmann::json;

RotationGraph parse_graph(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object()) throw InputError("graph file must be a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("missing integer field \"n\"");
    if (!j.contains("adj") || !j["adj"].is_array())
        throw InputError("missing array field \"adj\"");

    RotationGraph g;
    g.n = j["n"].get<int>();
    if (g.n < 0) throw InputError("\"n\" must be nonnegative");
    const json& adj = j["adj"];
    if (static_cast<int>(adj.size()) != g.n)
        throw InputError("\"adj\" has " + std::to_string(adj.size()) +
                         " entries, expected n = " + std::to_string(g.n));
    g.rot.resize(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
        const json& row = adj[static_cast<std::size_t>(v)];
        if (!row.is_array())
            throw InputError("adj[" + std::to_string(v) + "] is not an array");
        for (const json& x : row) {
            if (!x.is_number_integer())
                throw InputError("adj[" + std::to_string(v) + "] holds a non-integer");
            g.rot[static_cast<std::size_t>(v)].push_back(x.get<int>());
        }
    }
    g.validate();
    return g;
}

std::string emit_graph(const RotationGraph& g) {
    json j;
    j["n"] = g.n;
    j["adj"] = g.rot;
    return j.dump();
}

std::string rat_to_decimal(const Rat& q, int digits) {
    if (digits < 0) throw InputError("precision must be nonnegative");
    Int num = q.get_num(), den = q.get_den();
    bool neg = sgn(num) < 0;
    Int scaled = abs(num);
    Int pow10 = 1;
    for (int i = 0; i < digits; ++i) pow10 *= 10;
    scaled *= pow10;
    Int r = (2 * scaled + den) / (2 * den);  // nonnegative, so truncation rounds half up
    std::string body;
    if (digits == 0) {
        body = r.get_str();
    } else {
        Int ip = r / pow10, fp = r % pow10;
        std::string frac = fp.get_str();
        body = ip.get_str() + "." +
               std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    }
    if (neg && sgn(r) != 0) body.insert(body.begin(), '-');
    return body;
}

Rat parse_rational(const std::string& token) {
    if (token.empty()) throw InputError("empty number");
    std::string t = token;
    bool neg = false;
    if (t[0] == '+' || t[0] == '-') {
        neg = t[0] == '-';
        t.erase(t.begin());
    }
    auto digits_only = [](const std::string& s) {
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    Rat q;
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string ip = t.substr(0, dot), fp = t.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || !digits_only(ip) || !digits_only(fp))
            throw InputError("bad number '" + token + "'");
        Int pow10 = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) pow10 *= 10;
        Int whole = ip.empty() ? Int(0) : Int(ip);
        Int frac = fp.empty() ? Int(0) : Int(fp);
        Int num = whole * pow10 + frac;
        q = Rat(num, pow10);
    } else {
        auto slash = t.find('/');
        std::string ns = slash == std::string::npos ? t : t.substr(0, slash);
        std::string ds = slash == std::string::npos ? "1" : t.substr(slash + 1);
        if (ns.empty() || ds.empty() || !digits_only(ns) || !digits_only(ds))
            throw InputError("bad number '" + token + "'");
        Int den(ds);
        if (sgn(den) == 0) throw InputError("zero denominator in '" + token + "'");
        q = Rat(Int(ns), den);
    }
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string emit_off(const Polyhedron& p, int digits) {
    std::size_t half_edges = 0;
    for (const auto& f : p.faces) half_edges += f.size();
    std::ostringstream out;
    out << "OFF\n"
        << p.vertex_count() << " " << p.face_count() << " " << half_edges / 2 << "\n";
    for (const Vec3& v : p.vertices)
        out << rat_to_decimal(v.x, digits) << " " << rat_to_decimal(v.y, digits) << " "
            << rat_to_decimal(v.z, digits) << "\n";
    for (const auto& f : p.faces) {
        out << f.size();
        for (int v : f) out << " " << v;
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<std::string> off_tokens(const std::string& text) {
    std::vector<std::string> toks;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
    }
    return toks;
}

long take_count(const std::vector<std::string>& toks, std::size_t& at, const char* what) {
    if (at >= toks.size()) throw InputError(std::string("OFF file ends before ") + what);
    const std::string& t = toks[at++];
    try {
        std::size_t used = 0;
        long v = std::stol(t, &used);
        if (used != t.size() || v < 0) throw std::invalid_argument(t);
        return v;
    } catch (const std::exception&) {
        throw InputError("bad " + std::string(what) + " '" + t + "' in OFF file");
    }
}

}  // namespace

Polyhedron parse_off(const std::string& text) {
    std::vector<std::string> toks = off_tokens(text);
    std::size_t at = 0;
    if (at >= toks.size() || toks[at] != "OFF")
        throw InputError("missing OFF header");
    ++at;
    long nv = take_count(toks, at, "vertex count");
    long nf = take_count(toks, at, "face count");
    take_count(toks, at, "edge count");  // informational in OFF

    Polyhedron p;
    p.vertices.reserve(static_cast<std::size_t>(nv));
    for (long v = 0; v < nv; ++v) {
        Vec3 q;
        for (Rat* c : {&q.x, &q.y, &q.z}) {
            if (at >= toks.size())
                throw InputError("OFF file ends inside vertex " + std::to_string(v));
            *c = parse_rational(toks[at++]);
        }
        p.vertices.push_back(std::move(q));
    }
    for (long f = 0; f < nf; ++f) {
        long k = take_count(toks, at, "face size");
        if (k < 3) throw InputError("face " + std::to_string(f) + " has fewer than 3 vertices");
        std::vector<int> cyc;
        for (long i = 0; i < k; ++i) {
            long id = take_count(toks, at, "face vertex id");
            if (id >= nv)
                throw InputError("face " + std::to_string(f) + " references vertex " +
                                 std::to_string(id) + " of " + std::to_string(nv));
            cyc.push_back(static_cast<int>(id));
        }
        p.faces.push_back(std::move(cyc));
    }
    if (at != toks.size()) throw InputError("trailing content in OFF file");
    return p;
}

namespace {

json edge_list(const std::vector<std::pair<int, int>>& edges) {
    json a = json::array();
    for (const auto& [u, v] : edges) a.push_back({u, v});
    return a;
}

}  // namespace

std::string report_json(const RotationGraph& g, const RecognizeResult& r) {
    json j;
    j["n"] = g.n;
    j["accepted"] = accepted(r);
    if (accepted(r)) {
        const ZoneCertificate& c = std::get<ZoneCertificate>(r);
        j["e"] = g.edge_count();
        j["f"] = c.decomposition.face_zones.size();
        j["zones"] = c.zone_count;
        j["zone_lengths"] = c.zone_lengths;
        json zone_list = json::array();
        for (const Zone& z : c.decomposition.zones) {
            json zj;
            zj["id"] = z.id;
            zj["faces"] = z.face_cycle;
            zj["crossing_edges"] = edge_list(z.zone_edges);
            zone_list.push_back(std::move(zj));
        }
        j["zone_list"] = std::move(zone_list);
        return j.dump(2);
    }

    const Rejection& rej = std::get<Rejection>(r);
    j["reason"] = reason_string(rej.reason);
    j["detail"] = rej.detail;
    const RejectionWitness& w = rej.witness;
    json wj;
    switch (rej.reason) {
        case Rejection::Reason::too_small:
            wj["n"] = g.n;
            break;
        case Rejection::Reason::not_planar_embedding:
            wj["v"] = w.v;
            wj["e"] = w.e;
            wj["f"] = w.f;
            wj["euler_characteristic"] = w.v - w.e + w.f;
            break;
        case Rejection::Reason::not_3_connected:
            wj["kind"] = w.connectivity_kind;
            wj["vertices"] = w.vertices;
            break;
        case Rejection::Reason::non_quad_face:
            wj["face"] = w.face;
            wj["face_vertices"] = w.face_vertices;
            break;
        case Rejection::Reason::zone_self_intersection:
            wj["face"] = w.face;
            wj["orbit_faces"] = w.orbit_faces;
            wj["orbit_edges"] = edge_list(w.orbit_edges);
            break;
        case Rejection::Reason::face_membership_defect:
            wj["face"] = w.face;
            break;
        case Rejection::Reason::pair_intersection_defect:
            wj["zones"] = w.zones;
            wj["shared_faces"] = w.shared_faces;
            break;
        case Rejection::Reason::chain_defect:
            wj["zones"] = w.zones;
            wj["shared_faces"] = w.shared_faces;
            wj["chains"] = w.chains;
            break;
    }
    j["witness"] = std::move(wj);
    return j.dump(2);
}

std::string trace_json(const ReductionTrace& trace, const RealizationLog* log) {
    json j;
    j["input_vertices"] = trace.graphs.empty() ? 0 : trace.graphs.front().n;
    json steps = json::array();
    for (const ReductionStep& st : trace.steps) {
        json sj;
        sj["zone_faces"] = st.zone.face_cycle;
        sj["zone_edges"] = edge_list(st.zone.zone_edges);
        sj["zone_cycle"] = edge_list(zone_cycle(st));
        sj["vertex_map"] = st.vertex_map;
        sj["result_vertices"] = st.result_vertices;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    if (log) {
        json gens = json::array();
        for (const Vec3& v : log->generators)
            gens.push_back({v.x.get_str(), v.y.get_str(), v.z.get_str()});
        j["generators"] = std::move(gens);
        j["band_sizes"] = log->band_sizes;
        j["fallback_count"] = log->fallback_count;
        j["backtrack_count"] = log->backtrack_count;
    }
    return j.dump(2);
}

Stats compute_stats(const RotationGraph& g, const ZoneCertificate& cert) {
    Stats s;
    s.n = g.n;
    s.e = static_cast<long>(g.edge_count());
    s.f = static_cast<long>(cert.decomposition.face_zones.size());
    if (s.n - s.e + s.f != 2)
        throw std::logic_error("certified graph violates Euler's formula");
    s.zone_count = cert.zone_count;
    s.zone_lengths = cert.zone_lengths;
    long length_sum = 0;
    for (int l : cert.zone_lengths) {
        s.zone_length_histogram[l] += 1;
        s.max_zone_length = std::max(s.max_zone_length, l);
        length_sum += l;
    }
    if (length_sum != 2 * s.f)
        throw std::logic_error("zone lengths do not sum to twice the face count");
    s.ratio = static_cast<double>(s.zone_count) / std::sqrt(static_cast<double>(s.n));
    long m = s.zone_count;
    s.formula_exact = (2 * m - 1) * (2 * m - 1) == 4 * s.n - 7;
    s.bound_ok = (m - 1) * (m - 1) <= s.n;
    return s;
}

std::string stats_json(const Stats& s) {
    json j;
    j["n"] = s.n;
    j["e"] = s.e;
    j["f"] = s.f;
    j["m"] = s.zone_count;
    j["zone_lengths"] = s.zone_lengths;
    json hist = json::object();
    for (const auto& [len, count] : s.zone_length_histogram) hist[std::to_string(len)] = count;
    j["zone_length_histogram"] = std::move(hist);
    j["max_zone_length"] = s.max_zone_length;
    j["ratio_m_over_sqrt_n"] = s.ratio;
    j["zone_count_formula_exact"] = s.formula_exact;
    j["zone_count_bound_ok"] = s.bound_ok;
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
    if (!out.flush()) throw InputError("write to '" + path + "' failed");
}

}  // namespace zg
