#pragma once

#include "gdes/graph.hpp"
#include "gdes/matrix.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace testutil {

inline gdes::VertexSet vs(std::vector<int> members, int n) { return gdes::VertexSet::of(std::move(members), n); }

// Pairing-model d-regular graph, resampled until simple; n*d must be even.
inline gdes::Graph random_regular_graph(int n, int d, std::mt19937& rng) {
    if ((n * d) % 2 != 0) throw std::invalid_argument("random_regular_graph: n*d must be even");
    std::vector<int> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs.push_back(v);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
            const int u = stubs[i], v = stubs[i + 1];
            if (u == v || seen[u][v]) {
                ok = false;
                break;
            }
            seen[u][v] = seen[v][u] = true;
            edges.emplace_back(u, v);
        }
        if (ok) return gdes::Graph::from_edge_list(n, edges);
    }
    throw std::runtime_error("random_regular_graph: sampling failed");
}

inline gdes::Graph random_connected_regular_graph(int n, int d, std::mt19937& rng) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto g = random_regular_graph(n, d, rng);
        if (gdes::is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_regular_graph: sampling failed");
}

// d-regular bipartite graph on parts {0..m-1} and {m..2m-1}: the union of d
// random perfect matchings, resampled on duplicate edges.
inline gdes::Graph random_connected_bipartite_regular(int m, int d, std::mt19937& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        std::vector<std::vector<bool>> seen(m, std::vector<bool>(m, false));
        bool ok = true;
        for (int k = 0; k < d && ok; ++k) {
            std::vector<int> perm(m);
            for (int i = 0; i < m; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int i = 0; i < m; ++i) {
                if (seen[i][perm[i]]) {
                    ok = false;
                    break;
                }
                seen[i][perm[i]] = true;
                edges.emplace_back(i, m + perm[i]);
            }
        }
        if (!ok) continue;
        auto g = gdes::Graph::from_edge_list(2 * m, edges);
        if (gdes::is_connected(g)) return g;
    }
    throw std::runtime_error("random_connected_bipartite_regular: sampling failed");
}

inline gdes::VertexSet random_proper_subset(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 1);
    while (true) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (coin(rng)) members.push_back(v);
        if (!members.empty() && static_cast<int>(members.size()) < n)
            return gdes::VertexSet::of(std::move(members), n);
    }
}

// Independent oracle for eigenspace projections: with the exact eigenvalue
// list known, P_lambda f = prod_{mu != lambda} (A - mu I) f / (lambda - mu).
// Uses only matrix-vector products, no eigenvector computation.
inline std::vector<double> polynomial_projection(const gdes::Matrix& a,
                                                 const std::vector<double>& exact_eigenvalues, double lambda,
                                                 std::vector<double> f) {
    for (double mu : exact_eigenvalues) {
        if (mu == lambda) continue;
        auto af = a.apply(f);
        for (size_t i = 0; i < f.size(); ++i) f[i] = (af[i] - mu * f[i]) / (lambda - mu);
    }
    return f;
}

inline double squared_norm(const std::vector<double>& f) { return gdes::dot(f, f); }

} // namespace testutil
