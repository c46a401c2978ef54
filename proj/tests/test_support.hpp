#pragma once

#include <functional>
#include <string>

#include "zg/io.hpp"
#include "zg/oracle.hpp"

inline std::string fixture_path(const std::string& name) {
    return std::string(ZG_FIXTURE_DIR) + "/" + name;
}

inline zg::RotationGraph load_fixture(const std::string& name) {
    return zg::parse_graph(zg::read_file(fixture_path(name)));
}

inline zg::RotationGraph oracle_graph(int m, uint64_t seed) {
    return zg::graph_of(zg::build_zonotope(zg::sample_generators(m, seed)));
}

// Runs f, returns the InputError message it throws, or "" when it does not.
inline std::string input_error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const zg::InputError& e) {
        return e.what();
    }
    return "";
}

inline bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}
