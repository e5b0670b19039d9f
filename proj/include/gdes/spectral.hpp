#pragma once

#include "gdes/graph.hpp"
#include "gdes/matrix.hpp"

#include <string>
#include <vector>

namespace gdes {

// Execution policy for the data-parallel kernels. Parallel runs use OpenMP
// when the build has it and fall back to serial loops otherwise; both paths
// perform the same arithmetic per element, so results do not depend on the
// policy or the thread count.
enum class Exec { Serial, Parallel };

// A / d for a connected d-regular graph: entry (u,v) = 1/d if u~v else 0.
// Symmetric, row sums 1, operator norm <= 1.
struct NormalizedAdjacency {
    int n = 0;
    int degree = 0;
    Matrix entries;

    std::vector<double> apply(const std::vector<double>& f) const { return entries.apply(f); }
};

NormalizedAdjacency normalized_adjacency(const Graph& g);

// <A f, g>
double rayleigh(const NormalizedAdjacency& a, const std::vector<double>& f, const std::vector<double>& g);

// One merged eigenvalue group: representative value, orthonormal basis
// (columns), and the spread of the raw eigenvalues that were merged.
struct Eigenspace {
    double eigenvalue = 0.0;
    Matrix basis;
    double spread = 0.0;

    int multiplicity() const { return basis.cols(); }
};

struct Projection {
    double eigenvalue = 0.0;
    std::vector<double> component;
    double squared_norm = 0.0;
};

// Full spectrum of a symmetric matrix, with numerically equal eigenvalues
// merged into eigenspaces. Groups are sorted by descending eigenvalue, so for
// a connected regular graph spaces[0] is the constant eigenspace (value 1,
// multiplicity 1).
class SpectralDecomposition {
public:
    int n() const { return n_; }
    double grouping_tolerance() const { return tau_; }
    const std::vector<Eigenspace>& spaces() const { return spaces_; }
    const std::vector<std::string>& warnings() const { return warnings_; }

    int space_count() const { return static_cast<int>(spaces_.size()); }
    double min_eigenvalue() const { return spaces_.back().eigenvalue; }
    // Largest eigenvalue below the top group; requires at least two groups.
    double second_eigenvalue() const { return spaces_.at(1).eigenvalue; }

    Projection project(const std::vector<double>& f, int space_index) const;
    // ||P_lambda f||^2 for every group, in group order.
    std::vector<double> projection_norms(const std::vector<double>& f) const;

private:
    friend SpectralDecomposition group_eigensystem(int n, const std::vector<double>& values, const Matrix& vectors,
                                                   double tau);
    int n_ = 0;
    double tau_ = 0.0;
    std::vector<Eigenspace> spaces_;
    std::vector<std::string> warnings_;
};

struct SpectralOptions {
    // Absolute merge tolerance for eigenvalue grouping; spectra live in [-1,1].
    double tau = 1e-7;
    Exec exec = Exec::Parallel;
};

// Raw symmetric eigensolvers. Both zero off-diagonal mass below
// 1e-12 * ||A||_F and give orthonormal eigenvectors by construction
// (accumulated rotations); they differ only in rotation ordering.
struct EigenSystem {
    std::vector<double> values;
    Matrix vectors; // column k is the eigenvector for values[k]
};

// Classic cyclic Jacobi; the serial reference.
EigenSystem jacobi_cyclic(Matrix a);

// Round-robin (tournament) ordered Jacobi. Each round applies a set of
// rotations on disjoint index pairs in two phases (rows, then columns), so
// pairs can be processed concurrently without races and the result is
// bit-identical for any thread count.
EigenSystem jacobi_round_robin(Matrix a, Exec exec = Exec::Parallel);

// Eigendecomposition of a symmetric matrix with grouping. Throws
// spectral_error if the sweep cap is exceeded.
SpectralDecomposition eigendecompose(const Matrix& a, const SpectralOptions& opts = {});
SpectralDecomposition eigendecompose(const NormalizedAdjacency& a, const SpectralOptions& opts = {});

// Convenience: normalized adjacency of g, decomposed. Requires g connected
// and regular.
SpectralDecomposition decompose_graph(const Graph& g, const SpectralOptions& opts = {});

} // namespace gdes
