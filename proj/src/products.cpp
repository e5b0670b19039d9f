#include "gdes/products.hpp"

#include "gdes/design.hpp"
#include "gdes/errors.hpp"

#include <cmath>

namespace gdes {

namespace {

void check_cap(const Graph& g1, const Graph& g2) {
    const long long size = static_cast<long long>(g1.vertex_count()) * g2.vertex_count();
    if (size > kProductVertexCap)
        throw cap_exceeded("product: " + std::to_string(size) + " vertices exceeds the " +
                           std::to_string(kProductVertexCap) + "-vertex guard");
}

} // namespace

Graph weak_product(const Graph& g1, const Graph& g2) {
    if (!regular_degree(g1) || !regular_degree(g2))
        throw invalid_input("weak product: both factors must be regular");
    check_cap(g1, g2);
    const ProductLabeling lab{g1.vertex_count(), g2.vertex_count()};
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2ull * g1.edge_count() * g2.edge_count());
    for (auto [a, b] : g1.edges())
        for (auto [c, d] : g2.edges()) {
            edges.emplace_back(lab.index(a, c), lab.index(b, d));
            edges.emplace_back(lab.index(a, d), lab.index(b, c));
        }
    return Graph::from_edge_list(lab.n1 * lab.n2, edges);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
    check_cap(g1, g2);
    const ProductLabeling lab{g1.vertex_count(), g2.vertex_count()};
    std::vector<std::pair<int, int>> edges;
    for (int v1 = 0; v1 < lab.n1; ++v1)
        for (auto [c, d] : g2.edges()) edges.emplace_back(lab.index(v1, c), lab.index(v1, d));
    for (auto [a, b] : g1.edges())
        for (int v2 = 0; v2 < lab.n2; ++v2) edges.emplace_back(lab.index(a, v2), lab.index(b, v2));
    return Graph::from_edge_list(lab.n1 * lab.n2, edges);
}

VertexSet product_set(const VertexSet& w1, const VertexSet& w2, const ProductLabeling& labeling) {
    if (w1.host_n() != labeling.n1 || w2.host_n() != labeling.n2)
        throw invalid_input("product set: factor sets do not match the labeling");
    std::vector<int> members;
    members.reserve(static_cast<size_t>(w1.size()) * w2.size());
    for (int a : w1.members())
        for (int b : w2.members()) members.push_back(labeling.index(a, b));
    return VertexSet::of(std::move(members), labeling.n1 * labeling.n2);
}

ProductOrderRecord verify_product_order(const Graph& g1, const VertexSet& w1, const Graph& g2, const VertexSet& w2,
                                        double eps, double tau) {
    Graph product = weak_product(g1, g2);
    if (!is_connected(product))
        throw disconnected_error("product order: the weak product is disconnected "
                                 "(both factors bipartite); design analysis is undefined on it");

    const SpectralOptions opts{tau, Exec::Parallel};
    const auto dec1 = decompose_graph(g1, opts);
    const auto dec2 = decompose_graph(g2, opts);
    const auto dec = decompose_graph(product, opts);
    const ProductLabeling lab{g1.vertex_count(), g2.vertex_count()};

    ProductOrderRecord rec;
    rec.k1 = design_order(g1, dec1, w1, eps).order;
    rec.k2 = design_order(g2, dec2, w2, eps).order;
    rec.k_product = design_order(product, dec, product_set(w1, w2, lab), eps).order;
    rec.bound = (rec.k1 + 1) * (rec.k2 + 1) - 1;
    rec.holds = rec.k_product <= rec.bound;

    const VertexSet full1 = VertexSet::of([&] {
        std::vector<int> all(g1.vertex_count());
        for (int v = 0; v < g1.vertex_count(); ++v) all[v] = v;
        return all;
    }(), g1.vertex_count());
    const VertexSet full2 = VertexSet::of([&] {
        std::vector<int> all(g2.vertex_count());
        for (int v = 0; v < g2.vertex_count(); ++v) all[v] = v;
        return all;
    }(), g2.vertex_count());
    rec.cylinder1_order = design_order(product, dec, product_set(w1, full2, lab), eps).order;
    rec.cylinder2_order = design_order(product, dec, product_set(full1, w2, lab), eps).order;
    rec.cylinder_exact = rec.cylinder1_order == rec.k1 && rec.cylinder2_order == rec.k2;

    // Distinct factor eigenvalue pairs whose products land within tau of each
    // other can merge in the product spectrum and shrink observed orders.
    std::vector<std::pair<double, std::pair<int, int>>> products;
    for (int i = 0; i < dec1.space_count(); ++i)
        for (int j = 0; j < dec2.space_count(); ++j)
            products.push_back({dec1.spaces()[i].eigenvalue * dec2.spaces()[j].eigenvalue, {i, j}});
    for (size_t a = 0; a < products.size() && !rec.collisions; ++a)
        for (size_t b = a + 1; b < products.size(); ++b)
            if (std::abs(products[a].first - products[b].first) <= tau) {
                rec.collisions = true;
                break;
            }
    return rec;
}

} // namespace gdes
