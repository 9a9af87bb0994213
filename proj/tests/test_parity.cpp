#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kframe/parity.hpp"

#include <random>

using namespace kframe;
using namespace kframe::parity;

namespace {

const Tone R = Tone::Red;
const Tone B = Tone::Blue;

// Tries every switch subset directly on the coloring.
bool switchable_by_subsets(const Multigraph &g, const TwoColoring &c) {
    int n = static_cast<int>(g.vertex_count());
    for (int mask = 0; mask < (1 << n); ++mask) {
        bool all_blue = true;
        for (const Edge &e : g.edges()) {
            int flips = 0;
            if (!e.is_loop()) {
                flips += (mask >> g.vertex_index(e.a)) & 1;
                flips += (mask >> g.vertex_index(e.b)) & 1;
            }
            Tone t = flips % 2 ? (c.at(e.id) == R ? B : R) : c.at(e.id);
            all_blue &= t == B;
        }
        if (all_blue)
            return true;
    }
    return false;
}

Multigraph random_multigraph(std::mt19937 &rng, int n, int m) {
    std::uniform_int_distribution<int> v(0, n - 1);
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (int i = 0; i < m; ++i)
        pairs.push_back({v(rng), v(rng)});
    return Multigraph::from_pairs(n, pairs);
}

bool acyclic(const Multigraph &g, const EdgeSet &edges) {
    return spanning_forest(g.spanning_subgraph(edges)).size() == edges.size();
}

bool parity_matches(const Multigraph &g, const EdgeSet &edges, const VertexSet &t) {
    std::map<VertexId, int> d;
    for (EdgeId id : edges) {
        ++d[g.edge(id).a];
        ++d[g.edge(id).b];
    }
    for (VertexId v : g.vertices())
        if ((d[v] % 2 == 1) != t.contains(v))
            return false;
    return true;
}

} // namespace

TEST_CASE("apply_switch") {
    Multigraph edge = Multigraph::from_pairs(2, {{0, 1}});
    CHECK(apply_switch(edge, {{0, R}}, 0).at(0) == B);
    Multigraph loop = Multigraph::from_pairs(1, {{0, 0}});
    CHECK(apply_switch(loop, {{0, R}}, 0).at(0) == R);
    std::mt19937 rng(1);
    for (int trial = 0; trial < 50; ++trial) {
        Multigraph g = random_multigraph(rng, 5, 8);
        TwoColoring c;
        for (const Edge &e : g.edges())
            c[e.id] = rng() % 2 ? R : B;
        VertexId v = static_cast<VertexId>(rng() % 5);
        CHECK(apply_switch(g, apply_switch(g, c, v), v) == c);
        SwitchSequence seq;
        for (int i = 0; i < 6; ++i)
            seq.push_back(static_cast<VertexId>(rng() % 5));
        TwoColoring once = apply_switches(g, c, seq);
        std::shuffle(seq.begin(), seq.end(), rng);
        CHECK(apply_switches(g, c, seq) == once);
    }
    CHECK_THROWS_AS(apply_switch(edge, {{0, R}}, 7), InvalidInput);
}

TEST_CASE("switchable_to_blue examples") {
    SUBCASE("path red-blue-red") {
        Multigraph g = Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}});
        TwoColoring c{{0, R}, {1, B}, {2, R}};
        auto seq = switchable_to_blue(g, c);
        REQUIRE(seq);
        for (const auto &[id, t] : apply_switches(g, c, *seq))
            CHECK(t == B);
    }
    SUBCASE("red triangle") {
        Multigraph g = Multigraph::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
        CHECK_FALSE(switchable_to_blue(g, {{0, R}, {1, R}, {2, R}}));
    }
    SUBCASE("red edge parallel to a blue edge") {
        Multigraph g = Multigraph::from_pairs(2, {{0, 1}, {0, 1}});
        CHECK_FALSE(switchable_to_blue(g, {{0, R}, {1, B}}));
    }
    SUBCASE("red loop") {
        Multigraph g = Multigraph::from_pairs(1, {{0, 0}});
        CHECK_FALSE(switchable_to_blue(g, {{0, R}}));
        CHECK(switchable_to_blue(g, {{0, B}}));
    }
}

TEST_CASE("switchable_to_blue agrees with all switch subsets") {
    std::mt19937 rng(42);
    int yes = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 8);
        Multigraph g = random_multigraph(rng, n, static_cast<int>(rng() % 10));
        TwoColoring c;
        for (const Edge &e : g.edges())
            c[e.id] = rng() % 3 ? B : R;
        auto seq = switchable_to_blue(g, c);
        CHECK(seq.has_value() == switchable_by_subsets(g, c));
        if (seq) {
            ++yes;
            for (const auto &[id, t] : apply_switches(g, c, *seq))
                CHECK(t == B);
        }
    }
    CHECK(yes > 30);
    CHECK(yes < 270);
}

TEST_CASE("acyclic_t_join") {
    Multigraph path = Multigraph::from_pairs(3, {{0, 1}, {1, 2}});
    CHECK(acyclic_t_join(path, {0, 2}) == EdgeSet{0, 1});
    CHECK(acyclic_t_join(path, {}).empty());
    CHECK_THROWS_AS(acyclic_t_join(path, {0}), InvalidInput);
    Multigraph two = Multigraph::from_pairs(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(acyclic_t_join(two, {0, 2}), InvalidInput);
    CHECK(acyclic_t_join(two, {2, 3}) == EdgeSet{1});

    // Triangle, t = {0, 1}: every acyclic edge set with the right parities.
    Multigraph tri = Multigraph::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}});
    std::set<EdgeSet> valid;
    for (int mask = 0; mask < 8; ++mask) {
        EdgeSet s;
        for (int i = 0; i < 3; ++i)
            if (mask >> i & 1)
                s.insert(i);
        if (acyclic(tri, s) && parity_matches(tri, s, {0, 1}))
            valid.insert(s);
    }
    CHECK(valid == std::set<EdgeSet>{{0}, {1, 2}});
    CHECK(valid.contains(acyclic_t_join(tri, {0, 1})));

    std::mt19937 rng(9);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Multigraph g = random_multigraph(rng, n, static_cast<int>(rng() % 14));
        VertexSet t;
        for (const auto &comp : components(g)) {
            std::vector<VertexId> pick;
            for (VertexId v : comp)
                if (rng() % 2)
                    pick.push_back(v);
            if (pick.size() % 2)
                pick.pop_back();
            t.insert(pick.begin(), pick.end());
        }
        EdgeSet j = acyclic_t_join(g, t);
        CHECK(acyclic(g, j));
        CHECK(parity_matches(g, j, t));
        CHECK(acyclic_t_join(g, t) == j);
    }
}

TEST_CASE("resolve_two_row") {
    using rows::RowGraph;
    SUBCASE("single cross edge") {
        RowGraph r(2, 2, {{{1, 0}, {2, 1}, std::nullopt}});
        auto u = resolve_two_row(r);
        CHECK(u.size() == 1);
    }
    SUBCASE("edgeless") { CHECK(resolve_two_row(RowGraph(2, 3, {})).empty()); }
    SUBCASE("two cross edges along a path") {
        RowGraph r(2, 3, {{{1, 0}, {2, 1}, std::nullopt}, {{2, 1}, {2, 2}, std::nullopt}, {{1, 1}, {2, 2}, std::nullopt}});
        CHECK_THROWS_AS(resolve_two_row(r), InvalidInput); // columns 2, 3 joined twice
        RowGraph p(2, 3, {{{1, 0}, {2, 1}, std::nullopt}, {{2, 1}, {2, 2}, std::nullopt}});
        // Only some of the 8 column subsets work; the answer must be one of them.
        auto u = resolve_two_row(p);
        CHECK_FALSE(u.empty());
        CHECK(u.size() <= 2);
        rows::Rearrangement swap = rows::Rearrangement::identity(3);
        for (int c : u)
            swap.row_perm[c] = {0, 2, 1, 3};
        RowGraph straight = rows::rearrange(p, swap);
        for (const auto &e : straight.edges())
            CHECK(e.u.row == e.v.row);
    }
    SUBCASE("random forests") {
        std::mt19937 rng(4);
        for (int trial = 0; trial < 100; ++trial) {
            int s = 2 + static_cast<int>(rng() % 6);
            std::vector<rows::RowEdge> es;
            for (int j = 1; j < s; ++j)
                if (rng() % 4)
                    es.push_back({{1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % j)},
                                  {1 + static_cast<int>(rng() % 2), j}, std::nullopt});
            RowGraph r(2, s, es);
            auto u = resolve_two_row(r);
            rows::Rearrangement swap = rows::Rearrangement::identity(s);
            for (int c : u)
                swap.row_perm[c] = {0, 2, 1, 3};
            RowGraph straight = rows::rearrange(r, swap);
            for (const auto &e : straight.edges())
                CHECK(e.u.row == e.v.row);
        }
    }
    CHECK_THROWS_AS(resolve_two_row(rows::RowGraph(3, 2, {})), InvalidInput);
}
