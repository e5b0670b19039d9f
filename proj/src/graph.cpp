#include "gdes/graph.hpp"

#include "gdes/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace gdes {

VertexSet VertexSet::of(std::vector<int> members, int host_n) {
    if (host_n < 1) throw invalid_input("vertex set: host graph must have at least one vertex");
    std::sort(members.begin(), members.end());
    for (size_t i = 0; i < members.size(); ++i) {
        if (members[i] < 0 || members[i] >= host_n)
            throw invalid_input("vertex set: index " + std::to_string(members[i]) + " out of range [0," +
                                std::to_string(host_n) + ")");
        if (i > 0 && members[i] == members[i - 1])
            throw invalid_input("vertex set: duplicate index " + std::to_string(members[i]));
    }
    VertexSet s;
    s.members_ = std::move(members);
    s.host_n_ = host_n;
    return s;
}

VertexSet VertexSet::from_indicator(const std::vector<bool>& ind) {
    std::vector<int> m;
    for (size_t v = 0; v < ind.size(); ++v)
        if (ind[v]) m.push_back(static_cast<int>(v));
    return of(std::move(m), static_cast<int>(ind.size()));
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement() const {
    std::vector<int> out;
    out.reserve(host_n_ - size());
    size_t j = 0;
    for (int v = 0; v < host_n_; ++v) {
        if (j < members_.size() && members_[j] == v) {
            ++j;
        } else {
            out.push_back(v);
        }
    }
    return of(std::move(out), host_n_);
}

std::vector<double> VertexSet::indicator() const {
    std::vector<double> f(host_n_, 0.0);
    for (int v : members_) f[v] = 1.0;
    return f;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 1) throw invalid_input("graph: vertex count must be >= 1");
    std::vector<std::pair<int, int>> es;
    es.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_input("graph: edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
        if (u == v) throw invalid_input("graph: loop edge at vertex " + std::to_string(u));
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(es);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<int> regular_degree(const Graph& g) {
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v)) {
            if (!seen[u]) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == n;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    if (!is_connected(g)) throw disconnected_error("bipartition: graph is not connected");
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int u : g.neighbors(v)) {
            if (color[u] < 0) {
                color[u] = 1 - color[v];
                queue.push_back(u);
            } else if (color[u] == color[v]) {
                return std::nullopt;
            }
        }
    }
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
    return std::make_pair(VertexSet::of(std::move(a), n), VertexSet::of(std::move(b), n));
}

long long edge_boundary(const Graph& g, const VertexSet& s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (int v : s.members()) in[v] = true;
    long long cut = 0;
    for (auto [u, v] : g.edges())
        if (in[u] != in[v]) ++cut;
    return cut;
}

bool is_independent(const Graph& g, const VertexSet& s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (int v : s.members()) in[v] = true;
    for (auto [u, v] : g.edges())
        if (in[u] && in[v]) return false;
    return true;
}

namespace {

// Strips comments, skips blanks, returns meaningful lines.
std::vector<std::string> content_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open file: " + path);
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.push_back(line);
    }
    return out;
}

} // namespace

Graph read_graph(const std::string& path, bool lenient) {
    auto lines = content_lines(path);
    if (lines.empty()) throw invalid_input(path + ": missing header line 'n m'");
    std::istringstream header(lines[0]);
    long long n = 0, m = 0;
    std::string trailing;
    if (!(header >> n >> m) || (header >> trailing) || n < 1 || m < 0)
        throw invalid_input(path + ": malformed header, expected 'n m'");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw invalid_input(path + ": header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(lines.size() - 1));
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(m));
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream es(lines[i]);
        long long u = 0, v = 0;
        if (!(es >> u >> v) || (es >> trailing))
            throw invalid_input(path + ": malformed edge line '" + lines[i] + "'");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw invalid_input(path + ": edge index out of range on line '" + lines[i] + "'");
        if (u == v) throw invalid_input(path + ": loop edge at vertex " + std::to_string(u));
        pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!lenient) {
        auto canon = pairs;
        for (auto& [u, v] : canon)
            if (u > v) std::swap(u, v);
        std::sort(canon.begin(), canon.end());
        if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
            throw invalid_input(path + ": duplicate edge (use lenient mode to deduplicate)");
    }
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

void write_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write file: " + path);
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

VertexSet read_vertex_set(const std::string& path, int host_n) {
    auto lines = content_lines(path);
    std::vector<int> members;
    members.reserve(lines.size());
    for (const auto& line : lines) {
        std::istringstream is(line);
        long long v = 0;
        std::string trailing;
        if (!(is >> v) || (is >> trailing))
            throw invalid_input(path + ": malformed vertex line '" + line + "'");
        members.push_back(static_cast<int>(v));
    }
    return VertexSet::of(std::move(members), host_n);
}

void write_vertex_set(const VertexSet& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw invalid_input("cannot write file: " + path);
    for (int v : s.members()) out << v << '\n';
}

} // namespace gdes
