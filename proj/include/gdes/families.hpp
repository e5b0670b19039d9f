#pragma once

#include "gdes/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gdes {

// Generators for the graph families under study. All enumeration orders are
// fixed so vertex labels are stable across runs and platforms:
//   - hypercube(n): vertex label = subset bitmask (element e of [n] <-> bit e-1)
//   - kneser(n,k): k-subsets of [n] in colexicographic order
//   - derangement_graph(n): permutations of [n] by lexicographic rank

Graph complete(int n); // n >= 2
Graph cycle(int n);    // n >= 3

// 2^n vertices, n-regular, bipartite by weight parity. 1 <= n <= 12.
Graph hypercube(int n);

// Vertices are the k-subsets of [n], adjacent iff disjoint. Requires
// n >= 2k (and n >= 2k+1 for connectivity); C(n,k) capped at 4096.
Graph kneser(int n, int k);
// Subset of vertex index i, as sorted elements of [n]; colex order.
std::vector<std::vector<int>> kneser_labels(int n, int k);
// All k-subsets containing element e: size C(n-1,k-1), independent.
VertexSet kneser_star(int n, int k, int element);

// Vertices are permutations of [n]; adjacent iff they disagree in every
// position. Degree is the derangement number D_n. 2 <= n <= 6.
Graph derangement_graph(int n);
std::vector<std::vector<int>> permutation_labels(int n);
// {sigma : sigma(i) = j}, size (n-1)!; an intersecting family, hence
// independent in the derangement graph.
VertexSet permutation_stabilizer(int n, int i, int j);

// Character chi_I(J) = (-1)^{|I cap J|} on the hypercube: an exact
// eigenfunction of the normalized adjacency with eigenvalue 1 - 2|I|/n.
struct HypercubeCharacter {
    std::vector<int> elements; // I, sorted elements of [n]
    std::vector<double> values; // entry J in bitmask order, exactly +-1
    double eigenvalue = 0.0;
};
HypercubeCharacter hypercube_character(int n, const std::vector<int>& I);

// S_I = {J : |I cap J| odd}, T_I = its complement. Requires I nonempty and
// proper; 1_{S_I} = (1_V - chi_I)/2, so S_I is an extremal design.
std::pair<VertexSet, VertexSet> hypercube_design(int n, const std::vector<int>& I);

// Bundled graphs transcribed as edge lists, each with a named design set.
struct Fixture {
    std::string name;
    Graph graph;
    VertexSet design;
};
// name in {"sylvester", "truncated_tetrahedron"}. Files are looked up in
// the directory named by the GDES_FIXTURE_DIR environment variable, falling
// back to the bundled data directory.
Fixture fixture(const std::string& name);
std::string fixture_directory();

} // namespace gdes
