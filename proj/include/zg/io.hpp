#pragma once

#include <map>
#include <string>
#include <vector>

#include "zg/polyhedron.hpp"
#include "zg/realizer.hpp"
#include "zg/recognizer.hpp"
#include "zg/reducer.hpp"
#include "zg/rotation_graph.hpp"

namespace zg {

// Graph files are JSON objects {"n": <int>, "adj": [<neighbor list>, ...]}
// where adj[v] lists the neighbors of v counterclockwise. Parsing validates
// the full rotation-system contract and throws InputError with a field-level
// message.
RotationGraph parse_graph(const std::string& text);
std::string emit_graph(const RotationGraph& g);

// Exact decimal rendering with `digits` fractional digits, rounding ties away
// from zero. digits == 0 renders an integer with no decimal point.
std::string rat_to_decimal(const Rat& q, int digits);

// Accepts integers, fractions "p/q" and plain decimals; exact.
Rat parse_rational(const std::string& token);

// Standard OFF: "OFF", then "V F E", V coordinate lines, F face lines
// "k i1 ... ik". Coordinates are decimals with the given precision.
std::string emit_off(const Polyhedron& p, int digits);
Polyhedron parse_off(const std::string& text);

// Recognizer verdict as a JSON object: zone listing on accept, reason code
// plus a reason-specific witness object on reject.
std::string report_json(const RotationGraph& g, const RecognizeResult& r);

// Replay record: per step the deleted zone's faces, its crossing edges, the
// cycle it leaves, and the vertex map; plus the realization's expansion
// vectors when a log is given.
std::string trace_json(const ReductionTrace& trace, const RealizationLog* log = nullptr);

struct Stats {
    long n = 0, e = 0, f = 0;
    int zone_count = 0;
    std::vector<int> zone_lengths;
    std::map<int, int> zone_length_histogram;
    int max_zone_length = 0;
    double ratio = 0.0;          // zone_count / sqrt(n)
    bool formula_exact = false;  // (2m-1)^2 == 4n-7, the oracle-shape identity
    bool bound_ok = false;       // (m-1)^2 <= n, the zone-count bound
};

Stats compute_stats(const RotationGraph& g, const ZoneCertificate& cert);
std::string stats_json(const Stats& s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace zg
