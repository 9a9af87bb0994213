#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kframe/catalog.hpp"
#include "kframe/graph.hpp"
#include "kframe/graph_io.hpp"

#include <algorithm>
#include <random>

using namespace kframe;

namespace {

Multigraph triangle() { return Multigraph::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}); }
Multigraph path3() { return Multigraph::from_pairs(3, {{0, 1}, {1, 2}}); }
Multigraph cycle(int n) {
    std::vector<std::pair<VertexId, VertexId>> p;
    for (int i = 0; i < n; ++i)
        p.emplace_back(i, (i + 1) % n);
    return Multigraph::from_pairs(n, p);
}

// Two 3-valent vertices 0,1 joined by paths of length 1, 2, 2.
Multigraph theta_subdivision() { return Multigraph::from_pairs(4, {{0, 1}, {0, 2}, {2, 1}, {0, 3}, {3, 1}}); }

bool is_acyclic(const Multigraph &g, const EdgeSet &es) {
    return es.size() + components(g.spanning_subgraph(es)).size() == g.vertex_count();
}

} // namespace

TEST_CASE("multigraph construction rejects bad ids") {
    CHECK_THROWS_AS(Multigraph({0, 0}, {}), InvalidInput);
    CHECK_THROWS_AS(Multigraph({0, 1}, {{0, 0, 2}}), InvalidInput);
    CHECK_THROWS_AS(Multigraph({0, 1}, {{0, 0, 1}, {0, 1, 0}}), InvalidInput);
}

TEST_CASE("loops count twice toward degree") {
    Multigraph g({5}, {{9, 5, 5}});
    CHECK(g.degree(5) == 2);
    CHECK(is_eulerian(g));
}

TEST_CASE("contract_edges") {
    SUBCASE("triangle fully contracted") {
        auto c = contract_edges(triangle(), {0, 1, 2}, true);
        CHECK(c.graph.vertex_count() == 1);
        CHECK(c.graph.edge_count() == 0);
    }
    SUBCASE("theta with one edge contracted") {
        auto c = contract_edges(catalog::theta(), {0}, true);
        CHECK(c.graph.vertex_count() == 1);
        CHECK(c.graph.edge_count() == 0);
        auto kept = contract_edges(catalog::theta(), {0}, false);
        CHECK(kept.graph.edge_count() == 2);
        CHECK(kept.graph.degree(0) == 4);
    }
    SUBCASE("path contracted at one edge") {
        auto c = contract_edges(path3(), {0}, true);
        CHECK(c.graph.vertex_count() == 2);
        CHECK(c.graph.edge_count() == 1);
        CHECK(c.graph.has_edge(1));
        CHECK(c.vertex_map.at(0) == c.vertex_map.at(1));
        CHECK(c.vertex_map.size() == 3);
    }
    SUBCASE("unknown edge") { CHECK_THROWS_AS(contract_edges(path3(), {7}, true), InvalidInput); }
    SUBCASE("edge count conservation on random multigraphs") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng() % 7);
            int m = static_cast<int>(rng() % 12);
            std::vector<std::pair<VertexId, VertexId>> p;
            for (int i = 0; i < m; ++i)
                p.emplace_back(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
            Multigraph g = Multigraph::from_pairs(n, p);
            EdgeSet contracted;
            for (int i = 0; i < m; ++i)
                if (rng() % 3 == 0)
                    contracted.insert(i);
            auto kept = contract_edges(g, contracted, false);
            auto dropped = contract_edges(g, contracted, true);
            std::size_t loops = 0;
            for (const Edge &e : kept.graph.edges())
                loops += e.is_loop() ? 1 : 0;
            CHECK(kept.graph.edge_count() == g.edge_count() - contracted.size());
            CHECK(dropped.graph.edge_count() == g.edge_count() - contracted.size() - loops);
            // Degree parity survives contraction when loops are kept.
            std::map<VertexId, int> merged_degree;
            for (VertexId v : g.vertices())
                merged_degree[kept.vertex_map.at(v)] += g.degree(v);
            for (EdgeId id : contracted)
                merged_degree[kept.vertex_map.at(g.edge(id).a)] -= 2;
            for (VertexId v : kept.graph.vertices())
                CHECK(kept.graph.degree(v) == merged_degree[v]);
        }
    }
}

TEST_CASE("suppress_degree2") {
    SUBCASE("theta subdivision") {
        auto s = suppress_degree2(theta_subdivision());
        CHECK(s.base.vertex_count() == 2);
        CHECK(s.base.edge_count() == 3);
        CHECK(s.base.is_cubic());
        std::vector<std::size_t> lengths;
        for (const auto &[id, path] : s.path_map)
            lengths.push_back(path.size());
        std::sort(lengths.begin(), lengths.end());
        CHECK(lengths == std::vector<std::size_t>{1, 2, 2});
    }
    SUBCASE("cubic input is the identity") {
        auto s = suppress_degree2(catalog::k4());
        CHECK(s.base.edge_count() == 6);
        for (const auto &[id, path] : s.path_map) {
            CHECK(path.size() == 1);
            CHECK(path.front() == id);
        }
    }
    SUBCASE("pure cycle rejected") { CHECK_THROWS_WITH_AS(suppress_degree2(cycle(6)), doctest::Contains("no 3-valent"), InvalidInput); }
    SUBCASE("bad degree rejected") { CHECK_THROWS_AS(suppress_degree2(path3()), InvalidInput); }
    SUBCASE("round trip through resubdivide") {
        for (const Multigraph &h : {theta_subdivision(), catalog::k4(), catalog::petersen()}) {
            auto s = suppress_degree2(h);
            Multigraph back = resubdivide(s);
            CHECK(back.vertex_count() == h.vertex_count());
            CHECK(back.edge_count() == h.edge_count());
            auto s2 = suppress_degree2(back);
            CHECK(s2.base.edge_count() == s.base.edge_count());
            for (const auto &[id, path] : s.path_map)
                CHECK(s2.path_map.at(id).size() == path.size());
        }
    }
}

TEST_CASE("is_bipartite") {
    auto c4 = is_bipartite(cycle(4));
    REQUIRE(c4);
    CHECK(c4->side_a.size() == 2);
    CHECK(c4->side_b.size() == 2);
    CHECK_FALSE(is_bipartite(triangle()));
    CHECK_FALSE(is_bipartite(Multigraph({0}, {{0, 0, 0}})));
    CHECK(is_bipartite(catalog::k33()));
    CHECK_FALSE(is_bipartite(catalog::petersen()));
}

TEST_CASE("eulerian, components, spanning forest") {
    Multigraph two_triangles = Multigraph::from_pairs(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(is_eulerian(two_triangles));
    CHECK(components(two_triangles).size() == 2);
    CHECK_FALSE(is_eulerian(path3()));
    EdgeSet forest = spanning_forest(cycle(4));
    CHECK(forest.size() == 3);
    CHECK(is_acyclic(cycle(4), forest));
    EdgeSet pf = spanning_forest(catalog::petersen());
    CHECK(pf.size() == 9);
    CHECK(is_acyclic(catalog::petersen(), pf));
}

TEST_CASE("two-connectivity") {
    CHECK(is_two_connected(catalog::theta()));
    CHECK(is_two_connected(catalog::petersen()));
    CHECK_FALSE(is_two_connected(path3()));
    CHECK_FALSE(is_two_connected(Multigraph::from_pairs(2, {{0, 1}})));
}

TEST_CASE("graph6 and sparse6") {
    // K4 is "C~" in graph6; Petersen is "IheA@GUAo".
    Multigraph k4 = io::parse_graph6("C~");
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(catalog::isomorphic(k4, catalog::k4()));
    Multigraph pet = io::parse_graph6(">>graph6<<IheA@GUAo");
    CHECK(pet.is_cubic());
    CHECK(catalog::isomorphic(pet, catalog::petersen()));
    CHECK(io::to_graph6(pet) == "IheA@GUAo");
    CHECK_THROWS_AS(io::parse_graph6("C~~"), InvalidInput);

    // sparse6 example from the format description: ":Fa@x^" is a 7-vertex graph
    // with edges 0-1 0-2 1-2 5-6.
    Multigraph s = io::parse_sparse6(":Fa@x^");
    CHECK(s.vertex_count() == 7);
    REQUIRE(s.edge_count() == 4);
    std::set<std::pair<int, int>> got;
    for (const Edge &e : s.edges())
        got.insert({std::min(e.a, e.b), std::max(e.a, e.b)});
    CHECK(got == std::set<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {5, 6}});

    SUBCASE("graph6 round trip over random simple graphs") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 100; ++trial) {
            int n = 1 + static_cast<int>(rng() % 70);
            std::vector<std::pair<VertexId, VertexId>> p;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i)
                    if (rng() % 7 == 0)
                        p.emplace_back(i, j);
            Multigraph g = Multigraph::from_pairs(n, p);
            Multigraph back = io::parse_graph6(io::to_graph6(g));
            CHECK(back.vertex_count() == g.vertex_count());
            CHECK(io::to_graph6(back) == io::to_graph6(g));
        }
    }
}

TEST_CASE("JSON multigraph round trip keeps ids") {
    Multigraph g({3, 8}, {{10, 3, 8}, {11, 3, 8}, {12, 8, 3}});
    Multigraph back = io::multigraph_from_json(io::to_json(g));
    CHECK(back.vertex_count() == 2);
    CHECK(back.edge(12).a == 8);
    CHECK_THROWS_AS(io::multigraph_from_json(nlohmann::json{{"vertices", {1}}, {"edges", {{0, 1}}}}), InvalidInput);
}

TEST_CASE("cubic graph catalogue counts") {
    // Connected cubic graphs on 4, 6, 8, 10 vertices: 1, 2, 5, 19.
    CHECK(catalog::connected_cubic_graphs(4).size() == 1);
    CHECK(catalog::connected_cubic_graphs(6).size() == 2);
    CHECK(catalog::connected_cubic_graphs(8).size() == 5);
    auto ten = catalog::connected_cubic_graphs(10);
    CHECK(ten.size() == 19);
    CHECK(std::any_of(ten.begin(), ten.end(), [](const Multigraph &g) { return catalog::isomorphic(g, catalog::petersen()); }));
    for (const auto &g : ten) {
        CHECK(g.is_cubic());
        CHECK(is_connected(g));
    }
}
