#pragma once

#include <array>
#include <optional>
#include <vector>

#include "zg/exact.hpp"

namespace zg {

// One linear inequality a[0] x0 + a[1] x1 + a[2] x2 <= b. Problems in fewer
// variables leave the trailing coefficients zero.
struct HalfSpace {
    std::array<Rat, 3> a{};
    Rat b;
};

// Exact maximization of c . x over the half-spaces intersected with the box
// |x_i| <= box, which keeps the problem bounded. Returns a maximizing vertex,
// or nullopt when the intersection is empty. Incremental with a fixed
// insertion shuffle, so results are deterministic; expected linear time in
// the number of constraints.
std::optional<std::array<Rat, 3>> solve_lp3(const std::vector<HalfSpace>& hs,
                                            const std::array<Rat, 3>& c, const Rat& box);

}  // namespace zg
