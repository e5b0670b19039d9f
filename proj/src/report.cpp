#include "gdes/report.hpp"

#include <cstdio>
#include <cstdlib>

namespace gdes {

using nlohmann::json;

double sig12(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return std::strtod(buf, nullptr);
}

json graph_summary_json(const Graph& g) {
    json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    auto d = regular_degree(g);
    j["degree"] = d ? json(*d) : json(nullptr);
    const bool connected = is_connected(g);
    j["connected"] = connected;
    if (connected) {
        j["bipartite"] = bipartition(g).has_value();
    } else {
        j["bipartite"] = nullptr;
    }
    return j;
}

json spectrum_json(const SpectralDecomposition& dec) {
    json out = json::array();
    for (const auto& space : dec.spaces()) {
        out.push_back({{"eigenvalue", sig12(space.eigenvalue)}, {"multiplicity", space.multiplicity()}});
    }
    return out;
}

json to_json(const VertexSet& s) { return json(s.members()); }

json to_json(const DesignReport& r) {
    json actives = json::array();
    for (auto [lambda, norm] : r.active_eigenvalues)
        actives.push_back({{"eigenvalue", sig12(lambda)}, {"squared_norm", sig12(norm)}});
    return json{{"subset", to_json(r.subset)},
                {"order", r.order},
                {"extremal", r.order == 1},
                {"active_eigenvalues", actives},
                {"satisfied_count", r.satisfied_count},
                {"activity_threshold", sig12(r.activity_threshold)}};
}

json to_json(const WitnessBasis& w) {
    json gaps = json::array();
    for (double g : w.mean_gaps) gaps.push_back(sig12(g));
    json lambdas = json::array();
    for (double l : w.eigenvalues) lambdas.push_back(sig12(l));
    return json{{"order", w.order}, {"column_eigenvalues", lambdas}, {"mean_gaps", gaps}};
}

json to_json(const BoundsReport& r) {
    json j;
    j["hoffman_bound"] = sig12(r.hoffman);
    j["cheeger_lower"] = sig12(r.cheeger_lower);
    if (r.independence_ratio) j["independence_ratio"] = sig12(*r.independence_ratio);
    if (r.alpha_witness) j["alpha_witness"] = to_json(*r.alpha_witness);
    if (r.hoffman_sharp) {
        j["hoffman_sharp"] = *r.hoffman_sharp;
        j["hoffman_witness_only"] = r.hoffman_witness_only;
    }
    if (r.cheeger_constant) j["cheeger_constant"] = sig12(*r.cheeger_constant);
    if (r.classic_cheeger) j["classic_cheeger"] = sig12(*r.classic_cheeger);
    if (r.cheeger_witness) j["cheeger_witness"] = to_json(*r.cheeger_witness);
    if (r.cheeger_sharp) j["cheeger_sharp"] = *r.cheeger_sharp;
    return j;
}

json to_json(const std::vector<ChainStep>& chain) {
    json out = json::array();
    for (const auto& step : chain)
        out.push_back({{"label", step.label},
                       {"value", sig12(step.value)},
                       {"relation", step.relation},
                       {"gap", sig12(step.gap)}});
    return out;
}

json to_json(const ProductOrderRecord& r) {
    return json{{"k1", r.k1},
                {"k2", r.k2},
                {"k_product", r.k_product},
                {"bound", r.bound},
                {"holds", r.holds},
                {"cylinder1_order", r.cylinder1_order},
                {"cylinder2_order", r.cylinder2_order},
                {"cylinder_exact", r.cylinder_exact},
                {"collisions", r.collisions}};
}

} // namespace gdes
