#include "zg/lp.hpp"

#include <cstdint>

namespace zg {

namespace {

// Seidel's algorithm, specialized to at most three variables. Constraints
// are inserted one at a time in a pseudo-shuffled order while tracking the
// current optimum; a violated constraint must be tight at the new optimum,
// so the variable with the largest pivot is eliminated and the prefix is
// re-solved one dimension lower.

std::uint64_t mix(std::uint64_t s) {
    s ^= s >> 33;
    s *= 0xff51afd7ed558ccdULL;
    s ^= s >> 33;
    s *= 0xc4ceb9fe1a85ec53ULL;
    s ^= s >> 33;
    return s;
}

std::optional<std::array<Rat, 3>> lp_rec(const std::vector<HalfSpace>& hs,
                                         const std::array<Rat, 3>& c, const Rat& box, int dim,
                                         std::uint64_t salt) {
    if (dim == 1) {
        Rat lo = -box, hi = box;
        for (const HalfSpace& h : hs) {
            int s = sgn(h.a[0]);
            if (s == 0) {
                if (sgn(h.b) < 0) return std::nullopt;
            } else if (s > 0) {
                Rat bound = h.b / h.a[0];
                if (bound < hi) hi = bound;
            } else {
                Rat bound = h.b / h.a[0];
                if (bound > lo) lo = bound;
            }
        }
        if (lo > hi) return std::nullopt;
        return std::array<Rat, 3>{sgn(c[0]) < 0 ? lo : hi, Rat(0), Rat(0)};
    }

    std::vector<std::size_t> order(hs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(mix(salt + i) % i);
        std::swap(order[i - 1], order[j]);
    }

    std::array<Rat, 3> x{};
    for (int i = 0; i < dim; ++i) x[i] = sgn(c[i]) < 0 ? -box : box;

    for (std::size_t step = 0; step < order.size(); ++step) {
        const HalfSpace& h = hs[order[step]];
        Rat lhs(0);
        for (int i = 0; i < dim; ++i) lhs += h.a[i] * x[i];
        if (lhs <= h.b) continue;

        // The optimum under the prefix lies on this hyperplane; substitute
        // out the variable with the largest coefficient.
        int p = 0;
        for (int i = 1; i < dim; ++i)
            if (abs(h.a[i]) > abs(h.a[p])) p = i;
        if (sgn(h.a[p]) == 0) return std::nullopt;

        // x_p = (h.b - sum_{j != p} h.a[j] x_j) / h.a[p]
        std::array<int, 2> keep{};
        int nk = 0;
        for (int i = 0; i < dim; ++i)
            if (i != p) keep[nk++] = i;

        auto reduce = [&](const std::array<Rat, 3>& a, const Rat& b) {
            HalfSpace r;
            Rat f = a[p] / h.a[p];
            for (int j = 0; j < nk; ++j) r.a[j] = a[keep[j]] - f * h.a[keep[j]];
            r.b = b - f * h.b;
            return r;
        };

        std::vector<HalfSpace> sub;
        sub.reserve(step + 3);
        for (std::size_t q = 0; q <= step; ++q) sub.push_back(reduce(hs[order[q]].a, hs[order[q]].b));
        {
            std::array<Rat, 3> bx{};
            bx[p] = 1;
            sub.push_back(reduce(bx, box));
            bx[p] = -1;
            sub.push_back(reduce(bx, box));
        }
        std::array<Rat, 3> cs{};
        {
            Rat f = c[p] / h.a[p];
            for (int j = 0; j < nk; ++j) cs[j] = c[keep[j]] - f * h.a[keep[j]];
        }

        auto low = lp_rec(sub, cs, box, dim - 1, mix(salt ^ (step + 1)));
        if (!low) return std::nullopt;
        Rat acc = h.b;
        for (int j = 0; j < nk; ++j) {
            x[keep[j]] = (*low)[j];
            acc -= h.a[keep[j]] * (*low)[j];
        }
        x[p] = acc / h.a[p];
    }
    return x;
}

}  // namespace

std::optional<std::array<Rat, 3>> solve_lp3(const std::vector<HalfSpace>& hs,
                                            const std::array<Rat, 3>& c, const Rat& box) {
    if (sgn(box) <= 0) throw InputError("box must be positive");
    return lp_rec(hs, c, box, 3, 0x9e3779b97f4a7c15ULL + hs.size());
}

}  // namespace zg
