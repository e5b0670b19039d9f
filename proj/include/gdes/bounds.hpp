#pragma once

#include "gdes/graph.hpp"
#include "gdes/spectral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gdes {

// -lambda_min / (1 - lambda_min): the spectral cap on the independence ratio
// of a connected regular graph.
double hoffman_bound(const SpectralDecomposition& dec);

struct IndependenceResult {
    int size = 0;
    VertexSet witness; // lexicographically smallest maximum independent set
    double ratio = 0.0;
};

// Exact maximum independent set by branch and bound over bitset adjacency
// with a greedy clique-cover upper bound and a max-degree pivot.
// Deterministic; throws cap_exceeded beyond the vertex cap.
IndependenceResult independence_ratio_exact(const Graph& g, int cap = 40);

struct CheegerResult {
    double h = 0.0;       // min over proper S of |V||E(S,V\S)| / (d|S||V\S|)
    VertexSet witness;    // lexicographically smallest minimizer
    double h_classic = 0.0; // min of |E(S,V\S)| / min(|S|,|V\S|)
};

// Exact Cheeger constants by Gray-code subset enumeration (subsets containing
// vertex 0; complements cover the rest). Minima are tracked with integer
// fraction comparisons, so the scan order cannot change the result.
CheegerResult cheeger_constant_exact(const Graph& g, int cap = 24, Exec exec = Exec::Parallel);

struct SharpnessResult {
    bool sharp = false;
    double bound = 0.0; // spectral side
    double exact = 0.0; // combinatorial side (or witness ratio if witness_only)
    VertexSet witness;
    bool witness_only = false; // witness meets the bound, maximality unverified
};

constexpr double kBoundSharpnessTol = 1e-9;

SharpnessResult hoffman_sharpness(const Graph& g, const SpectralDecomposition& dec, int cap = 40,
                                  double tol = kBoundSharpnessTol);
// For graphs beyond the oracle cap: checks that a supplied independent set
// meets the bound. Flagged witness_only because no maximality search ran.
SharpnessResult hoffman_sharpness_from_witness(const Graph& g, const SpectralDecomposition& dec,
                                               const VertexSet& witness, double tol = kBoundSharpnessTol);
SharpnessResult cheeger_sharpness(const Graph& g, const SpectralDecomposition& dec, int cap = 24,
                                  double tol = kBoundSharpnessTol, Exec exec = Exec::Parallel);

// One evaluated quantity in a proof chain. relation links this step to the
// previous one; gap is |value - previous| for "=" steps and
// previous - value for ">=" steps (the inequality's slack).
struct ChainStep {
    std::string label;
    double value = 0.0;
    std::string relation; // "", "=" or ">="
    double gap = 0.0;
};

// The displayed chain 0 = <A 1_S,1_S> = sum lambda_i c_i^2 = ... >= ... =
// (1-lambda_n)|S|^2/n + lambda_n |S| for an independent set S. Every "="
// step's residual is tiny for any independent S; the single ">=" slack is
// zero exactly when S meets the Hoffman bound.
std::vector<ChainStep> hoffman_inequality_chain(const Graph& g, const SpectralDecomposition& dec,
                                                const VertexSet& s);

// The chain (1/d)|E(S,T)| = <A 1_S,1_T> = ... >= ... = |S|(n-|S|)/n (1-lambda_2)
// for a proper nonempty S with T = V\S. Zero ">=" slack characterizes
// Cheeger-sharp partitions.
std::vector<ChainStep> cheeger_equality_chain(const Graph& g, const SpectralDecomposition& dec, const VertexSet& s);

struct BoundsOptions {
    bool exact_alpha = false;
    bool exact_cheeger = false;
    int alpha_cap = 40;
    int cheeger_cap = 24;
    std::optional<VertexSet> alpha_witness; // enables the witness_only path
    double tol = kBoundSharpnessTol;
    Exec exec = Exec::Parallel;
};

struct BoundsReport {
    double hoffman = 0.0;       // -lambda_n / (1 - lambda_n)
    double cheeger_lower = 0.0; // 1 - lambda_2
    std::optional<double> independence_ratio;
    std::optional<VertexSet> alpha_witness;
    std::optional<bool> hoffman_sharp;
    bool hoffman_witness_only = false;
    std::optional<double> cheeger_constant;
    std::optional<double> classic_cheeger;
    std::optional<VertexSet> cheeger_witness;
    std::optional<bool> cheeger_sharp;
};

BoundsReport compute_bounds(const Graph& g, const SpectralDecomposition& dec, const BoundsOptions& opts = {});

// Sorted-vertex-list lexicographic order on subsets encoded as bitmasks.
bool mask_lex_less(unsigned long long a, unsigned long long b);

} // namespace gdes
