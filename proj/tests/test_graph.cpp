#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdes/errors.hpp"
#include "gdes/families.hpp"
#include "gdes/graph.hpp"
#include "gdes/spectral.hpp"
#include "testutil.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

using namespace gdes;
using testutil::vs;

namespace {

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("from_edge_list basics") {
    auto k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    // duplicates (in either orientation) collapse
    auto tri = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {1, 2}, {0, 2}});
    CHECK(tri.edge_count() == 3);

    CHECK_THROWS_AS(Graph::from_edge_list(4, {{0, 0}}), invalid_input);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), invalid_input);
    CHECK_THROWS_AS(Graph::from_edge_list(0, {}), invalid_input);
}

TEST_CASE("regular_degree") {
    CHECK(regular_degree(complete(4)) == 3);
    auto path3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
    CHECK_FALSE(regular_degree(path3).has_value());
    CHECK(regular_degree(kneser(6, 2)) == 6);
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete(5)));
    auto two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_edges));
    CHECK(is_connected(hypercube(3)));
}

TEST_CASE("bipartition") {
    auto q4 = hypercube(4);
    auto parts = bipartition(q4);
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() == 8);
    CHECK(parts->second.size() == 8);
    // even-weight class holds vertex 0 and every member has even popcount
    for (int v : parts->first.members()) CHECK(__builtin_popcount(v) % 2 == 0);
    for (int v : parts->second.members()) CHECK(__builtin_popcount(v) % 2 == 1);

    CHECK_FALSE(bipartition(complete(3)).has_value());

    auto c6 = cycle(6);
    auto c6parts = bipartition(c6);
    REQUIRE(c6parts.has_value());
    CHECK(c6parts->first.members() == std::vector<int>{0, 2, 4});

    auto two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(bipartition(two_edges), disconnected_error);
}

TEST_CASE("edge_boundary") {
    for (int n : {4, 6, 9}) {
        auto g = complete(n);
        for (int a = 1; a < n; ++a) {
            std::vector<int> members(a);
            for (int i = 0; i < a; ++i) members[i] = i;
            CHECK(edge_boundary(g, vs(members, n)) == static_cast<long long>(a) * (n - a));
        }
    }
    for (int n : {3, 5}) {
        auto q = hypercube(n);
        auto s = hypercube_design(n, {1}).first; // vertices with bit 0 set
        CHECK(edge_boundary(q, s) == (1LL << (n - 1)));
    }
    auto g = cycle(5);
    CHECK(edge_boundary(g, vs({0, 1, 2, 3, 4}, 5)) == 0);
}

TEST_CASE("is_independent") {
    auto kg = kneser(6, 2);
    CHECK(is_independent(kg, kneser_star(6, 2, 1)));
    CHECK_FALSE(is_independent(complete(3), vs({0, 1}, 3)));
    CHECK(is_independent(complete(3), vs({}, 3)));
}

TEST_CASE("graph file round trip and format errors") {
    const std::string path = temp_file("gdes_test_graph.edges");

    auto g = kneser(5, 2);
    write_graph(g, path);
    auto back = read_graph(path);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());

    write_text(path, "2 1\n0 1\n");
    auto k2 = read_graph(path);
    CHECK(k2.vertex_count() == 2);
    CHECK(k2.edge_count() == 1);

    // comments and blank lines are ignored
    write_text(path, "# triangle\n3 3\n\n0 1\n1 2 # chord\n0 2\n");
    CHECK(read_graph(path).edge_count() == 3);

    write_text(path, "nonsense\n");
    CHECK_THROWS_AS(read_graph(path), invalid_input);
    write_text(path, "3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph(path), invalid_input); // edge count mismatch
    write_text(path, "3 1\n0 7\n");
    CHECK_THROWS_AS(read_graph(path), invalid_input); // out of range
    write_text(path, "3 1\n1 1\n");
    CHECK_THROWS_AS(read_graph(path), invalid_input); // loop
    write_text(path, "3 2\n0 1\n1 0\n");
    CHECK_THROWS_AS(read_graph(path), invalid_input); // duplicate, strict
    CHECK(read_graph(path, true).edge_count() == 1);  // lenient dedupes

    std::remove(path.c_str());
}

TEST_CASE("vertex set file round trip") {
    const std::string path = temp_file("gdes_test_set.txt");
    auto s = vs({0, 3, 7}, 8);
    write_vertex_set(s, path);
    CHECK(read_vertex_set(path, 8) == s);
    write_text(path, "2\n9\n");
    CHECK_THROWS_AS(read_vertex_set(path, 8), invalid_input);
    write_text(path, "2\n2\n");
    CHECK_THROWS_AS(read_vertex_set(path, 8), invalid_input); // duplicate
    std::remove(path.c_str());
}

TEST_CASE("vertex set validation and complement") {
    CHECK_THROWS_AS(VertexSet::of({-1}, 4), invalid_input);
    CHECK_THROWS_AS(VertexSet::of({4}, 4), invalid_input);
    CHECK_THROWS_AS(VertexSet::of({1, 1}, 4), invalid_input);
    auto s = vs({1, 3}, 5);
    CHECK(s.complement().members() == std::vector<int>{0, 2, 4});
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(s.is_proper_nonempty());
    CHECK_FALSE(vs({0, 1, 2, 3, 4}, 5).is_proper_nonempty());
}

TEST_CASE("boundary symmetry and handshake on random graphs") {
    std::mt19937 rng(7101);
    for (int trial = 0; trial < 25; ++trial) {
        auto g = testutil::random_regular_graph(12, 3, rng);
        long long total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2LL * g.edge_count());

        auto s = testutil::random_proper_subset(g.vertex_count(), rng);
        CHECK(edge_boundary(g, s) == edge_boundary(g, s.complement()));
    }
}

TEST_CASE("independence agrees with the quadratic form") {
    std::mt19937 rng(7102);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = testutil::random_connected_regular_graph(10, 3, rng);
        auto a = normalized_adjacency(g);
        auto s = testutil::random_proper_subset(g.vertex_count(), rng);
        const double q = rayleigh(a, s.indicator(), s.indicator());
        if (is_independent(g, s)) {
            CHECK(q == 0.0); // exact: sums of exact zeros
        } else {
            CHECK(q > 0.0);
        }
    }
}
