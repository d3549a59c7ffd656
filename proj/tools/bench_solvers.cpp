// Benchmark of the enumeration kernels: the unpruned serial oracle as the
// reference, then the bounded solvers at one worker and at the hardware
// worker count. Also cross-checks that all three agree.

#include <chrono>
#include <cstdio>

#include "ehcut/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace ehcut;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Case {
    const char* name;
    Topology graph;
    int h;
    CutKind kind;
};

int hardware_workers() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

int main() {
    const int hw = hardware_workers();
    std::printf("kernel benchmark (hardware workers: %d)\n", hw);
    std::printf("%-22s %-7s %12s %12s %12s  %s\n", "case", "kind", "oracle[s]", "1 worker[s]",
                "N workers[s]", "value");

    Case cases[] = {
        {"eh(2,2) h=1", build_eh({2, 2}), 1, CutKind::VertexCut},
        {"eh(2,2) h=2", build_eh({2, 2}), 2, CutKind::VertexCut},
        {"eh(2,2) h=1", build_eh({2, 2}), 1, CutKind::EdgeCut},
        {"eh(2,2) h=2", build_eh({2, 2}), 2, CutKind::EdgeCut},
        {"q4 h=2", build_qn(4), 2, CutKind::VertexCut},
        {"q4 h=2", build_qn(4), 2, CutKind::EdgeCut},
        {"q4 h=3", build_qn(4), 3, CutKind::EdgeCut},
    };

    int failures = 0;
    for (const Case& c : cases) {
        SolveBudget serial;
        serial.workers = 1;
        SolveBudget parallel;
        parallel.workers = hw;

        auto solve = [&](const SolveBudget& budget) {
            return c.kind == CutKind::VertexCut ? kappa_h_exact(c.graph, c.h, budget)
                                                : lambda_h_exact(c.graph, c.h, budget);
        };

        auto t0 = std::chrono::steady_clock::now();
        const ConnectivityReport one = solve(serial);
        const double t_one = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const ConnectivityReport many = solve(parallel);
        const double t_many = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        const auto oracle = brute_force_oracle(c.graph, c.h, c.kind,
                                               static_cast<int>(*one.found_value), 100'000'000, 1);
        const double t_oracle = seconds_since(t0);

        const bool agree = one.found_value == many.found_value && oracle &&
                           *oracle == *one.found_value &&
                           to_line(one, c.graph.bit_length()) ==
                               to_line(many, c.graph.bit_length());
        if (!agree) ++failures;

        std::printf("%-22s %-7s %12.4f %12.4f %12.4f  %llu%s\n", c.name,
                    c.kind == CutKind::VertexCut ? "vertex" : "edge", t_oracle, t_one, t_many,
                    static_cast<unsigned long long>(*one.found_value),
                    agree ? "" : "  DISAGREE");
    }

    if (failures) {
        std::printf("%d case(s) disagree\n", failures);
        return 1;
    }
    std::printf("all kernels agree\n");
    return 0;
}
