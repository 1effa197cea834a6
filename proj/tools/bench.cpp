// Serial vs OpenMP timings for the enumeration kernels.
#include <chrono>
#include <cstdio>
#include <string>

#include "cherrylab/extremal.hpp"
#include "cherrylab/oracle.hpp"
#include "cherrylab/pairwalk.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace cherrylab;

namespace {

template <class F>
double time_ms(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial_ms, double par_ms, int jobs) {
    std::printf("%-38s %10.1f ms %10.1f ms   x%.2f (jobs=%d)\n", name.c_str(), serial_ms,
                par_ms, par_ms > 0 ? serial_ms / par_ms : 0.0, jobs);
}

}  // namespace

int main(int argc, char** argv) {
    int jobs = 2;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    bool heavy = argc > 1 && std::string(argv[1]) == "--heavy";

    std::printf("%-38s %13s %13s\n", "kernel", "serial", "parallel");

    {
        double s = time_ms([&] { oracle::max_cherries(5, 1); });
        double p = time_ms([&] { oracle::max_cherries(5, jobs); });
        row("oracle max-cherries n=5", s, p, jobs);
    }
    {
        double s = time_ms([&] { oracle::max_edges_odd_free(5, 1); });
        double p = time_ms([&] { oracle::max_edges_odd_free(5, jobs); });
        row("oracle max-edges n=5", s, p, jobs);
    }
    {
        auto h = blow_up(tight_cycle(9), 4);  // 36 vertices, large pair digraph
        double s = time_ms([&] { diameter(h, 1); });
        double p = time_ms([&] { diameter(h, jobs); });
        row("diameter C9[4]", s, p, jobs);
    }
    {
        auto h = construct_iterated(optimal_profile(40));
        double s = time_ms([&] { diameter(h, 1); });
        double p = time_ms([&] { diameter(h, jobs); });
        row("diameter H(opt 40)", s, p, jobs);
    }
    if (heavy) {
        double s = time_ms([&] { oracle::max_edges_odd_free(6, 1); });
        double p = time_ms([&] { oracle::max_edges_odd_free(6, jobs); });
        row("oracle max-edges n=6", s, p, jobs);
    }
    return 0;
}
