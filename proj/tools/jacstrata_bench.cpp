// Benchmark comparing the serial reference kernels with the OpenMP ones:
// semimodule enumeration, certificate sweep, invariant-subspace enumeration.

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jacstrata/deform.hpp"
#include "jacstrata/oracle.hpp"
#include "jacstrata/semimodule.hpp"

using namespace jacstrata;

namespace {

double time_ms(const std::function<void()>& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
    std::printf("%-34s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel kernels fall back to serial\n");
#endif
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        // M = C with a large conductor: dense enumeration space
        std::vector<int> gens;
        for (int g = 18; g <= 35; ++g) gens.push_back(g);
        auto s = make_semigroup(gens);
        EnumOptions opt;
        std::size_t n1 = 0, n2 = 0;
        double ts = time_ms([&] { n1 = enumerate_semimodules_serial(s, opt).size(); });
        double tp = time_ms([&] { n2 = enumerate_semimodules(s, opt).size(); });
        row("enumerate_semimodules m=18", ts, tp);
        if (n1 != n2) std::printf("  MISMATCH: %zu vs %zu\n", n1, n2);
    }

    {
        auto s = make_semigroup({5, 6, 7, 8});
        auto target = semimodule_create(s, {2, 5}, CreateMode::Generate);
        SearchBudget budget{3, 3, {1, -1}};
        bool f1 = false, f2 = false;
        double ts = time_ms([&] { f1 = certificate_search_serial(s, target, budget).has_value(); });
        double tp = time_ms([&] { f2 = certificate_search(s, target, budget).has_value(); });
        row("certificate sweep <5,6,7,8>", ts, tp);
        if (f1 != f2) std::printf("  MISMATCH\n");
    }

    {
        auto s = NumericalSemigroup::from_generators({4, 5, 6});
        std::size_t n1 = 0, n2 = 0;
        double ts = time_ms([&] { n1 = enumerate_invariant_subspaces_serial(s, 2, 4).size(); });
        double tp = time_ms([&] { n2 = enumerate_invariant_subspaces(s, 2, 4).size(); });
        row("invariant subspaces F2 d=4", ts, tp);
        if (n1 != n2) std::printf("  MISMATCH: %zu vs %zu\n", n1, n2);
    }

    return 0;
}
