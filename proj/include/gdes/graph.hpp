#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gdes {

class Graph;

// Sorted, duplicate-free subset of the vertices of a graph with host_n
// vertices. Indices are the dense labels 0..host_n-1.
class VertexSet {
public:
    VertexSet() = default;

    // Validates range and removes nothing: duplicates are an error.
    static VertexSet of(std::vector<int> members, int host_n);

    // Members given as an indicator over 0..host_n-1.
    static VertexSet from_indicator(const std::vector<bool>& ind);

    const std::vector<int>& members() const { return members_; }
    int host_n() const { return host_n_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool is_proper_nonempty() const { return !members_.empty() && size() < host_n_; }
    bool contains(int v) const;

    VertexSet complement() const;
    std::vector<double> indicator() const;

    bool operator==(const VertexSet& o) const { return host_n_ == o.host_n_ && members_ == o.members_; }

private:
    std::vector<int> members_;
    int host_n_ = 0;
};

// Simple undirected graph on dense vertex labels 0..n-1. No loops, no
// multiple edges. Immutable after construction; adjacency lists are kept
// sorted and symmetric.
class Graph {
public:
    Graph() = default; // empty placeholder; build real graphs via from_edge_list

    // Deduplicates pairs; rejects loops and out-of-range indices.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Edges normalized to u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// d if every vertex has degree d, otherwise empty.
std::optional<int> regular_degree(const Graph& g);

bool is_connected(const Graph& g);

// Two-coloring classes (class containing vertex 0 first) if bipartite.
// Requires a connected graph.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// |E(S, V\S)|: edges with exactly one endpoint in s.
long long edge_boundary(const Graph& g, const VertexSet& s);

bool is_independent(const Graph& g, const VertexSet& s);

// Edge-list file format: header "n m", then m lines "u v" (0 <= u,v < n,
// u != v). Blank lines and '#' comments are ignored. Strict mode rejects
// duplicate edges; lenient mode deduplicates them.
Graph read_graph(const std::string& path, bool lenient = false);
void write_graph(const Graph& g, const std::string& path);

// Vertex-set sidecar format: one index per line, same comment rules.
VertexSet read_vertex_set(const std::string& path, int host_n);
void write_vertex_set(const VertexSet& s, const std::string& path);

} // namespace gdes
