// Benchmark comparing the OpenMP region-scan and corpus-enumeration kernels
// against their serial reference implementations.

#include <chrono>
#include <iostream>

#include "orthantgeo/oracle_enum.hpp"
#include "orthantgeo/parallel.hpp"
#include "orthantgeo/verifier.hpp"

using namespace og;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    std::cout << "workers: " << worker_count() << "\n";

    {
        const ConvexGeometry g = random_geometry(9, 3, 2024);
        const HalfspaceSystem sys = realize_cone(g, CircuitChoice::All);
        auto t0 = Clock::now();
        const auto par = verify_exhaustive(sys, g.family());
        const double t_par = ms_since(t0);
        t0 = Clock::now();
        const auto ser = verify_exhaustive_serial(sys, g.family());
        const double t_ser = ms_since(t0);
        std::cout << "verify_exhaustive n=9 |cone|=" << sys.cone.size()
                  << ": parallel " << t_par << " ms, serial " << t_ser
                  << " ms, speedup " << t_ser / t_par
                  << " (verdicts " << par.verdict << "/" << ser.verdict << ")\n";
    }

    {
        auto t0 = Clock::now();
        const auto par = enumerate_convex_geometries(4);
        const double t_par = ms_since(t0);
        t0 = Clock::now();
        const auto ser = enumerate_convex_geometries_serial(4);
        const double t_ser = ms_since(t0);
        std::cout << "enumerate n=4: parallel " << t_par << " ms, serial " << t_ser
                  << " ms, speedup " << t_ser / t_par
                  << " (counts " << par.size() << "/" << ser.size() << ")\n";
    }

    {
        const TreeRealization tr = realize_tree(
            {{"r", "a"}, {"r", "b"}, {"a", "c"}, {"a", "d"}, {"b", "e"}, {"d", "f"}, {"d", "g"}},
            "r");
        auto t0 = Clock::now();
        const auto rep = verify_bfs(tr.system, tr.family, tr.signs[0]);
        std::cout << "verify_bfs tree |V|=8: " << ms_since(t0) << " ms (regions "
                  << rep.found_regions << ")\n";
    }
    return 0;
}
