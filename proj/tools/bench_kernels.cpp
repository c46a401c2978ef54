// Compares the parallel kernels against their serial reference
// implementations: the 3-connectivity sweep and the convexity scan inside
// verify_zonohedron. Usage: bench_kernels [m] [repeats], defaults 12 and 3.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "zg/oracle.hpp"
#include "zg/polyhedron.hpp"
#include "zg/realizer.hpp"
#include "zg/recognizer.hpp"
#include "zg/reducer.hpp"
#include "zg/rotation_graph.hpp"

namespace {

template <typename F>
double best_ms(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const std::string& name, double serial, double parallel) {
    std::cout << name << ": serial " << serial << " ms, parallel " << parallel
              << " ms, speedup " << serial / parallel << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
    int m = argc > 1 ? std::atoi(argv[1]) : 12;
    int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    if (m < 4 || repeats < 1) {
        std::cerr << "usage: bench_kernels [m >= 4] [repeats >= 1]\n";
        return 2;
    }

    zg::GeneratorSet gens = zg::sample_generators(m, 1);
    zg::Polyhedron zono = zg::build_zonotope(gens);
    zg::RotationGraph g = zg::graph_of(zono);
    std::cout << "oracle graph: m = " << m << ", n = " << g.n << ", e = " << g.edge_count()
              << ", f = " << zono.face_count() << "\n";

    bool kernel_cut = zg::check_three_connected(g).has_value();
    bool reference_cut = zg::check_three_connected_reference(g).has_value();
    if (kernel_cut || reference_cut) {
        std::cerr << "kernel disagreement: oracle graph reported as not 3-connected\n";
        return 1;
    }
    double conn_par = best_ms(repeats, [&] { (void)zg::check_three_connected(g); });
    double conn_ser = best_ms(repeats, [&] { (void)zg::check_three_connected_reference(g); });
    row("3-connectivity sweep", conn_ser, conn_par);

    zg::RecognizeResult r = zg::recognize(g);
    if (!zg::accepted(r)) {
        std::cerr << "oracle graph rejected\n";
        return 1;
    }
    const zg::ZoneCertificate& cert = std::get<zg::ZoneCertificate>(r);
    zg::ReductionTrace trace = zg::reduce_to_cube(g, cert);
    zg::Polyhedron p = zg::realize(g, cert, trace, 1);
    if (!zg::verify_zonohedron(p, true).ok() || !zg::verify_zonohedron(p, false).ok()) {
        std::cerr << "kernel disagreement: realization failed verification\n";
        return 1;
    }
    double ver_par = best_ms(repeats, [&] { (void)zg::verify_zonohedron(p, true); });
    double ver_ser = best_ms(repeats, [&] { (void)zg::verify_zonohedron(p, false); });
    row("convexity verification", ver_ser, ver_par);
    return 0;
}
