#pragma once

#include "gdes/bounds.hpp"
#include "gdes/design.hpp"
#include "gdes/graph.hpp"
#include "gdes/products.hpp"
#include "gdes/spectral.hpp"

#include <json.hpp>

namespace gdes {

inline constexpr const char* kVersion = "0.1.0";

// All numeric report fields are serialized at 12 significant digits so
// repeated runs are byte-identical.
double sig12(double x);

nlohmann::json graph_summary_json(const Graph& g);
nlohmann::json spectrum_json(const SpectralDecomposition& dec);
nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const DesignReport& r);
nlohmann::json to_json(const WitnessBasis& w);
nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const std::vector<ChainStep>& chain);
nlohmann::json to_json(const ProductOrderRecord& r);

} // namespace gdes
