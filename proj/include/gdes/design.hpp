#pragma once

#include "gdes/graph.hpp"
#include "gdes/spectral.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gdes {

// Order of a vertex subset as a graphical design: the number of non-constant
// eigenspaces carrying a nonzero projection of the subset indicator. One
// eigenfunction per active eigenspace suffices (the projection itself) and at
// least one is needed per active eigenspace, since eigenfunctions of distinct
// eigenvalues are linearly independent; so this count is the minimal number
// of non-constant eigenfunctions that, together with the constant, span the
// indicator.
struct DesignReport {
    VertexSet subset;
    int order = 0;
    // (eigenvalue, ||P_lambda 1_W||^2) for each active non-constant eigenspace,
    // in descending eigenvalue order.
    std::vector<std::pair<double, double>> active_eigenvalues;
    // Basis eigenfunctions (out of n) whose mean over W equals their mean over
    // V with uniform weights 1/|W|; always n - order.
    int satisfied_count = 0;
    double activity_threshold = 0.0;
};

constexpr double kDefaultActivityEps = 1e-8;

// Requires g connected and regular, and an empty-nor-full subset. The second
// form reuses a decomposition of g's normalized adjacency.
DesignReport design_order(const Graph& g, const VertexSet& w, double eps = kDefaultActivityEps);
DesignReport design_order(const Graph& g, const SpectralDecomposition& dec, const VertexSet& w,
                          double eps = kDefaultActivityEps);

bool is_extremal(const Graph& g, const VertexSet& w, double eps = kDefaultActivityEps);
bool is_extremal(const Graph& g, const SpectralDecomposition& dec, const VertexSet& w,
                 double eps = kDefaultActivityEps);

// Batch evaluation over many subsets against one decomposition; subsets are
// independent, so the sweep parallelizes without affecting results.
std::vector<DesignReport> design_orders(const Graph& g, const SpectralDecomposition& dec,
                                        const std::vector<VertexSet>& subsets, double eps = kDefaultActivityEps,
                                        Exec exec = Exec::Parallel);

// Orthonormal eigenbasis certifying the order: column 0 is the constant,
// the next `order` columns are the normalized active projections, and every
// remaining column has equal mean over W and over V (mean_gaps records the
// per-column |mean_V - mean_W|).
struct WitnessBasis {
    Matrix basis;
    std::vector<double> eigenvalues; // per column
    int order = 0;
    std::vector<double> mean_gaps; // per column
};
WitnessBasis witness_basis(const Graph& g, const VertexSet& w, double eps = kDefaultActivityEps);
WitnessBasis witness_basis(const Graph& g, const SpectralDecomposition& dec, const VertexSet& w,
                           double eps = kDefaultActivityEps);

// Certificates for the two extremality routes. Preconditions (independence /
// boundary ratio meeting the spectral bound) raise invalid_input; a numeric
// contradiction with the certified conclusion raises certification_error.
struct ExtremalCertificate {
    DesignReport report;
    double active_eigenvalue = 0.0;    // the single active eigenvalue
    double reference_eigenvalue = 0.0; // lambda_min (hoffman) or lambda_2 (cheeger)
    double sharpness_gap = 0.0;        // |achieved ratio - spectral bound|
    std::string kind;                  // "hoffman" or "cheeger"
};

constexpr double kSharpnessTol = 1e-9;

// s must be independent with |S|/|V| equal to the Hoffman bound within tol;
// certifies order 1 with active eigenvalue lambda_min.
ExtremalCertificate extremal_from_hoffman(const Graph& g, const VertexSet& s, double eps = kDefaultActivityEps,
                                          double tol = kSharpnessTol);
ExtremalCertificate extremal_from_hoffman(const Graph& g, const SpectralDecomposition& dec, const VertexSet& s,
                                          double eps = kDefaultActivityEps, double tol = kSharpnessTol);

// The partition (S, V\S) must achieve boundary ratio 1 - lambda_2 within tol;
// certifies order 1 with active eigenvalue lambda_2.
ExtremalCertificate extremal_from_cheeger(const Graph& g, const VertexSet& s, double eps = kDefaultActivityEps,
                                          double tol = kSharpnessTol);
ExtremalCertificate extremal_from_cheeger(const Graph& g, const SpectralDecomposition& dec, const VertexSet& s,
                                          double eps = kDefaultActivityEps, double tol = kSharpnessTol);

// |V| |E(S,V\S)| / (d |S| |V\S|), the boundary ratio minimized by the
// Cheeger constant.
double boundary_ratio(const Graph& g, const VertexSet& s);

} // namespace gdes
