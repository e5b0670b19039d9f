#include "gdes/families.hpp"

#include "gdes/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#ifndef GDES_DATA_DIR
#define GDES_DATA_DIR "data"
#endif

namespace gdes {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Next bitmask with the same popcount in increasing numeric order (Gosper).
// Numeric order of k-subset masks is exactly colex order.
uint32_t next_same_popcount(uint32_t x) {
    uint32_t c = x & (0u - x);
    uint32_t r = x + c;
    return (((r ^ x) >> 2) / c) | r;
}

uint32_t subset_mask(int n, const std::vector<int>& elems, const char* what) {
    uint32_t mask = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw invalid_input(std::string(what) + ": element " + std::to_string(e) +
                                                " outside [1," + std::to_string(n) + "]");
        uint32_t bit = 1u << (e - 1);
        if (mask & bit) throw invalid_input(std::string(what) + ": duplicate element " + std::to_string(e));
        mask |= bit;
    }
    return mask;
}

} // namespace

Graph complete(int n) {
    if (n < 2) throw invalid_input("complete: need n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph cycle(int n) {
    if (n < 3) throw invalid_input("cycle: need n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph hypercube(int n) {
    if (n < 1 || n > 12) throw invalid_input("hypercube: need 1 <= n <= 12");
    const int size = 1 << n;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(size) * n / 2);
    for (int v = 0; v < size; ++v)
        for (int b = 0; b < n; ++b) {
            int u = v ^ (1 << b);
            if (u > v) edges.emplace_back(v, u);
        }
    return Graph::from_edge_list(size, edges);
}

namespace {

std::vector<uint32_t> kneser_masks(int n, int k) {
    if (k < 1 || n < 2 * k) throw invalid_input("kneser: need k >= 1 and n >= 2k");
    long long count = binomial(n, k);
    if (count > 4096) throw invalid_input("kneser: C(n,k) exceeds the 4096-vertex guard");
    std::vector<uint32_t> masks;
    masks.reserve(static_cast<size_t>(count));
    uint32_t m = (1u << k) - 1u;
    const uint32_t limit = 1u << n;
    while (m < limit) {
        masks.push_back(m);
        if (m == ((limit - 1u) >> (n - k)) << (n - k)) break; // highest k-subset
        m = next_same_popcount(m);
    }
    return masks;
}

} // namespace

Graph kneser(int n, int k) {
    auto masks = kneser_masks(n, k);
    const int size = static_cast<int>(masks.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if ((masks[i] & masks[j]) == 0) edges.emplace_back(i, j);
    return Graph::from_edge_list(size, edges);
}

std::vector<std::vector<int>> kneser_labels(int n, int k) {
    auto masks = kneser_masks(n, k);
    std::vector<std::vector<int>> labels(masks.size());
    for (size_t i = 0; i < masks.size(); ++i)
        for (int e = 1; e <= n; ++e)
            if (masks[i] & (1u << (e - 1))) labels[i].push_back(e);
    return labels;
}

VertexSet kneser_star(int n, int k, int element) {
    if (element < 1 || element > n) throw invalid_input("kneser star: element out of range");
    auto masks = kneser_masks(n, k);
    std::vector<int> members;
    for (size_t i = 0; i < masks.size(); ++i)
        if (masks[i] & (1u << (element - 1))) members.push_back(static_cast<int>(i));
    return VertexSet::of(std::move(members), static_cast<int>(masks.size()));
}

std::vector<std::vector<int>> permutation_labels(int n) {
    if (n < 2 || n > 6) throw invalid_input("derangement graph: need 2 <= n <= 6");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 1);
    std::vector<std::vector<int>> all;
    do {
        all.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return all;
}

Graph derangement_graph(int n) {
    auto perms = permutation_labels(n);
    const int size = static_cast<int>(perms.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
            bool everywhere = true;
            for (int t = 0; t < n; ++t)
                if (perms[i][t] == perms[j][t]) {
                    everywhere = false;
                    break;
                }
            if (everywhere) edges.emplace_back(i, j);
        }
    return Graph::from_edge_list(size, edges);
}

VertexSet permutation_stabilizer(int n, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw invalid_input("permutation stabilizer: indices out of range");
    auto perms = permutation_labels(n);
    std::vector<int> members;
    for (size_t r = 0; r < perms.size(); ++r)
        if (perms[r][i - 1] == j) members.push_back(static_cast<int>(r));
    return VertexSet::of(std::move(members), static_cast<int>(perms.size()));
}

HypercubeCharacter hypercube_character(int n, const std::vector<int>& I) {
    if (n < 1 || n > 12) throw invalid_input("hypercube character: need 1 <= n <= 12");
    uint32_t mask = subset_mask(n, I, "hypercube character");
    HypercubeCharacter chi;
    chi.elements = I;
    std::sort(chi.elements.begin(), chi.elements.end());
    chi.eigenvalue = 1.0 - 2.0 * static_cast<double>(std::popcount(mask)) / n;
    const int size = 1 << n;
    chi.values.resize(size);
    for (int J = 0; J < size; ++J)
        chi.values[J] = (std::popcount(mask & static_cast<uint32_t>(J)) % 2 == 0) ? 1.0 : -1.0;
    return chi;
}

std::pair<VertexSet, VertexSet> hypercube_design(int n, const std::vector<int>& I) {
    if (n < 1 || n > 12) throw invalid_input("hypercube design: need 1 <= n <= 12");
    uint32_t mask = subset_mask(n, I, "hypercube design");
    if (mask == 0) throw invalid_input("hypercube design: I must be nonempty (S_I would be empty)");
    if (mask == (1u << n) - 1u) throw invalid_input("hypercube design: I must be a proper subset of [n]");
    const int size = 1 << n;
    std::vector<int> s, t;
    for (int J = 0; J < size; ++J)
        (std::popcount(mask & static_cast<uint32_t>(J)) % 2 == 1 ? s : t).push_back(J);
    return {VertexSet::of(std::move(s), size), VertexSet::of(std::move(t), size)};
}

std::string fixture_directory() {
    if (const char* env = std::getenv("GDES_FIXTURE_DIR")) return env;
    return GDES_DATA_DIR;
}

Fixture fixture(const std::string& name) {
    if (name != "sylvester" && name != "truncated_tetrahedron")
        throw invalid_input("fixture: unknown name '" + name + "'");
    const std::string dir = fixture_directory();
    Fixture f;
    f.name = name;
    f.graph = read_graph(dir + "/" + name + ".edges");
    f.design = read_vertex_set(dir + "/" + name + ".design", f.graph.vertex_count());
    return f;
}

} // namespace gdes
