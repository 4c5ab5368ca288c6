// Compares the serial reference kernels against the OpenMP ones on the
// same instances and prints per-instance timings. Answers and stage sizes
// must agree exactly; any divergence aborts.
//
//   ./bench_compare [threads]

#include "homsolve/dp.hpp"
#include "homsolve/graph.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace homsolve;

namespace {

Graph random_instance(std::mt19937& rng, int n, double extra_density) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    std::bernoulli_distribution coin(extra_density);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 2; v <= n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

double run_once(const Graph& g, const Graph& h, Mode mode, int threads, bool& yes,
                std::vector<std::uint64_t>& sizes) {
    SolveOptions opts;
    opts.threads = threads;
    auto t0 = std::chrono::steady_clock::now();
    SolveResult res = solve(g, h, mode, opts);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
    yes = res.yes;
    sizes = res.stats.stage_sizes;
    return ms;
}

} // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
#else
    int threads = 1;
    (void)argc;
    (void)argv;
    std::printf("built without OpenMP; timing the serial path only\n");
#endif

    struct Case {
        std::string name;
        Graph g;
        Graph h;
        Mode mode;
    };
    std::vector<Case> cases;
    std::mt19937 rng(4242);
    cases.push_back({"hom   n=13 -> P4", random_instance(rng, 13, 0.25), make_path(4), Mode::hom});
    cases.push_back({"hom   n=14 -> P4", random_instance(rng, 14, 0.25), make_path(4), Mode::hom});
    cases.push_back({"hom   n=13 -> C6", random_instance(rng, 13, 0.3), make_cycle(6), Mode::hom});
    cases.push_back({"lihom n=14 -> C7", random_instance(rng, 14, 0.15), make_cycle(7),
                     Mode::locally_injective});
    cases.push_back(
        {"hom   n=12 -> C9^2", random_instance(rng, 12, 0.3), power(make_cycle(9), 2), Mode::hom});

    std::printf("%-20s %10s %12s %12s %9s\n", "instance", "answer", "serial ms", "parallel ms",
                "speedup");
    for (auto& c : cases) {
        bool yes_serial = false, yes_parallel = false;
        std::vector<std::uint64_t> sizes_serial, sizes_parallel;
        double serial_ms = run_once(c.g, c.h, c.mode, 1, yes_serial, sizes_serial);
        double parallel_ms =
            threads > 1 ? run_once(c.g, c.h, c.mode, threads, yes_parallel, sizes_parallel)
                        : serial_ms;
        if (threads > 1 && (yes_serial != yes_parallel || sizes_serial != sizes_parallel)) {
            std::printf("kernel mismatch on %s\n", c.name.c_str());
            return 1;
        }
        std::printf("%-20s %10s %12.1f %12.1f %8.2fx\n", c.name.c_str(),
                    yes_serial ? "yes" : "no", serial_ms, parallel_ms,
                    serial_ms / (parallel_ms > 0 ? parallel_ms : 1));
    }
#ifdef _OPENMP
    std::printf("threads: %d\n", threads);
#endif
    return 0;
}
