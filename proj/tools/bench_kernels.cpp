// Compares the serial spanning-tree enumeration kernel with the
// OpenMP-parallel one on a few hosts and checks that the results agree.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sft/exact.hpp"
#include "sft/generators.hpp"

using namespace sft;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main() {
    int hw = 1;
#ifdef _OPENMP
    hw = omp_get_max_threads();
#endif
    std::printf("threads available: %d\n", hw);
    std::printf("%-14s %10s %12s %12s %8s %6s\n", "host", "trees", "serial_ms",
                "parallel_ms", "speedup", "agree");

    struct Host {
        const char* name;
        Graph g;
    };
    std::vector<Host> hosts;
    hosts.push_back({"K8", gen_complete(8)});
    hosts.push_back({"grid4x4", gen_grid(4, 4)});
    hosts.push_back({"wheel10", gen_wheel(10)});
    hosts.push_back({"ER(13,0.3)", gen_erdos_renyi(13, 0.3, 7)});
    hosts.push_back({"G5", gen_gomega(5, GOmegaVariant::G)});

    for (const Host& h : hosts) {
        BigInt count = count_spanning_trees(h.g);
        ExactResult serial, parallel;
        double ts = time_ms([&] { serial = solve_exact_serial(h.g, 's'); });
        double tp = time_ms([&] { parallel = solve_exact(h.g, 's', kDefaultTreeCap, hw); });
        bool agree = serial.optimum == parallel.optimum &&
                     serial.argmax == parallel.argmax &&
                     serial.optimal_count == parallel.optimal_count;
        std::printf("%-14s %10s %12.1f %12.1f %7.2fx %6s\n", h.name,
                    count.str().c_str(), ts, tp, ts / tp, agree ? "yes" : "NO");
        if (!agree) return 1;
    }
    return 0;
}
