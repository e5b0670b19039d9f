#pragma once

#include "gdes/graph.hpp"
#include "gdes/spectral.hpp"

#include <string>
#include <vector>

namespace gdes {

// Pair labeling for product graphs: (v1, v2) -> v1 * n2 + v2 (row-major).
struct ProductLabeling {
    int n1 = 0;
    int n2 = 0;
    int index(int v1, int v2) const { return v1 * n2 + v2; }
    std::pair<int, int> unindex(int v) const { return {v / n2, v % n2}; }
};

constexpr int kProductVertexCap = 4096;

// Weak (tensor) product: (v1,v2) ~ (u1,u2) iff v1~u1 and v2~u2. Requires
// regular factors; the adjacency matrix is the Kronecker product of the
// factor adjacencies, so eigenvalues multiply. Tensor products of two
// bipartite graphs are disconnected.
Graph weak_product(const Graph& g1, const Graph& g2);

// Cartesian product: (v1,v2) ~ (u1,u2) iff equal in one coordinate and
// adjacent in the other. The r-th cartesian power of K_2 is the hypercube.
Graph cartesian_product(const Graph& g1, const Graph& g2);

// {(a,b) : a in w1, b in w2} under the row-major labeling.
VertexSet product_set(const VertexSet& w1, const VertexSet& w2, const ProductLabeling& labeling);

// Order bookkeeping for a product design W1 x W2 against the bound
// (k1+1)(k2+1)-1, plus the two cylinder designs W1 x V2 and V1 x W2 whose
// orders equal k1 and k2 when no product-eigenvalue collision interferes.
struct ProductOrderRecord {
    int k1 = 0;
    int k2 = 0;
    int k_product = 0;
    int bound = 0; // (k1+1)(k2+1)-1
    bool holds = false;
    int cylinder1_order = 0; // W1 x V2
    int cylinder2_order = 0; // V1 x W2
    bool cylinder_exact = false; // both cylinder orders match exactly
    bool collisions = false; // distinct factor eigenvalue pairs with products within tau
};

// Computes all orders via the design machinery. Throws disconnected_error if
// the weak product is disconnected (two bipartite factors), since design
// analysis is undefined there.
ProductOrderRecord verify_product_order(const Graph& g1, const VertexSet& w1, const Graph& g2, const VertexSet& w2,
                                        double eps = 1e-8, double tau = 1e-7);

} // namespace gdes
