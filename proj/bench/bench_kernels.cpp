// Timing comparison of the serial reference kernels against the OpenMP
// paths: eigensolve, Cheeger subset scan, and batched design-order sweeps.
#include "gdes/bounds.hpp"
#include "gdes/design.hpp"
#include "gdes/families.hpp"
#include "gdes/spectral.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point start) {
    return std::chrono::duration<double, std::milli>(clk::now() - start).count();
}

gdes::Graph random_regular(int n, int d, std::mt19937& rng) {
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = true;
            edges.emplace_back(u, v);
        }
        if (!ok) continue;
        auto g = gdes::Graph::from_edge_list(n, edges);
        if (gdes::is_connected(g)) return g;
    }
    std::fprintf(stderr, "failed to sample a connected %d-regular graph on %d vertices\n", d, n);
    std::exit(1);
}

void bench_jacobi(int n, int d, std::mt19937& rng) {
    auto g = random_regular(n, d, rng);
    auto a = gdes::normalized_adjacency(g);

    auto t0 = clk::now();
    auto cyc = gdes::jacobi_cyclic(a.entries);
    const double t_cyclic = ms_since(t0);

    t0 = clk::now();
    auto rr_s = gdes::jacobi_round_robin(a.entries, gdes::Exec::Serial);
    const double t_rr_serial = ms_since(t0);

    t0 = clk::now();
    auto rr_p = gdes::jacobi_round_robin(a.entries, gdes::Exec::Parallel);
    const double t_rr_parallel = ms_since(t0);

    (void)cyc;
    (void)rr_s;
    (void)rr_p;
    std::printf("jacobi n=%4d       cyclic %9.2f ms   round-robin serial %9.2f ms   parallel %9.2f ms   speedup %.2fx\n",
                n, t_cyclic, t_rr_serial, t_rr_parallel, t_rr_serial / t_rr_parallel);
}

void bench_cheeger(int n, int d, std::mt19937& rng) {
    auto g = random_regular(n, d, rng);

    auto t0 = clk::now();
    auto serial = gdes::cheeger_constant_exact(g, n, gdes::Exec::Serial);
    const double t_serial = ms_since(t0);

    t0 = clk::now();
    auto parallel = gdes::cheeger_constant_exact(g, n, gdes::Exec::Parallel);
    const double t_parallel = ms_since(t0);

    std::printf("cheeger n=%3d       serial %9.2f ms   parallel %9.2f ms   speedup %.2fx   (h=%.6f agree=%d)\n", n,
                t_serial, t_parallel, t_serial / t_parallel,
                serial.h, serial.h == parallel.h && serial.witness == parallel.witness);
}

void bench_design_sweep(int n) {
    auto g = gdes::hypercube(n);
    auto dec = gdes::decompose_graph(g);
    std::vector<gdes::VertexSet> subsets;
    for (int mask = 1; mask < (1 << n) - 1; ++mask) {
        std::vector<int> elems;
        for (int e = 1; e <= n; ++e)
            if (mask & (1 << (e - 1))) elems.push_back(e);
        subsets.push_back(gdes::hypercube_design(n, elems).first);
    }

    auto t0 = clk::now();
    auto serial = gdes::design_orders(g, dec, subsets, 1e-8, gdes::Exec::Serial);
    const double t_serial = ms_since(t0);

    t0 = clk::now();
    auto parallel = gdes::design_orders(g, dec, subsets, 1e-8, gdes::Exec::Parallel);
    const double t_parallel = ms_since(t0);

    bool agree = serial.size() == parallel.size();
    for (size_t i = 0; agree && i < serial.size(); ++i) agree = serial[i].order == parallel[i].order;
    std::printf("design sweep Q_%d   serial %9.2f ms   parallel %9.2f ms   speedup %.2fx   (%zu subsets agree=%d)\n",
                n, t_serial, t_parallel, t_serial / t_parallel, subsets.size(), agree);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("openmp not enabled; parallel paths run the same loops serially\n");
#endif
    std::mt19937 rng(20240901);
    bench_jacobi(128, 4, rng);
    bench_jacobi(256, 4, rng);
    bench_cheeger(22, 4, rng);
    bench_design_sweep(7);
    return 0;
}
