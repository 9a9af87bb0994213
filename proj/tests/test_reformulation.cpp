#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kframe/reformulation.hpp"
#include "row_oracles.hpp"

using namespace kframe;
using namespace kframe::reform;
using rows::RowEdge;
using rows::RowGraph;

namespace {

std::vector<std::array<bool, 4>> as_grid(const RowGraph &r, const ParityColoring &phi) {
    std::vector<std::array<bool, 4>> grid(r.s());
    for (int j = 0; j < r.s(); ++j)
        for (int i = 1; i <= 3; ++i)
            grid[j][i] = phi[r.index({i, j})];
    return grid;
}

// All per-column row permutations (column order does not matter here).
void for_each_row_arrangement(const RowGraph &r, const std::function<void(const RowGraph &)> &visit) {
    std::vector<int> code(r.s(), 0);
    std::vector<std::array<int, 4>> perms;
    std::array<int, 4> p{0, 1, 2, 3};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin() + 1, p.end()));
    while (true) {
        rows::Rearrangement m = rows::Rearrangement::identity(r.s());
        for (int j = 0; j < r.s(); ++j)
            m.row_perm[j] = perms[code[j]];
        visit(rows::rearrange(r, m));
        int j = 0;
        while (j < r.s() && ++code[j] == 6)
            code[j++] = 0;
        if (j == r.s())
            return;
    }
}

} // namespace

TEST_CASE("parity coloring definitions") {
    RowGraph edgeless(3, 2, {});
    ParityColoring white(6, false);
    CHECK(is_parity_coloring(edgeless, white, ParityMode::Standard));
    CHECK(is_parity_coloring(edgeless, white, ParityMode::Symmetric));
    ParityColoring one = white;
    one[edgeless.index({2, 1})] = true;
    CHECK_FALSE(is_parity_coloring(edgeless, one, ParityMode::Standard));
    CHECK_FALSE(is_parity_coloring(edgeless, one, ParityMode::Symmetric));

    // Literal evaluation agrees with the test oracle on random colorings.
    std::mt19937 rng(6);
    for (int trial = 0; trial < 300; ++trial) {
        RowGraph r = oracle::to_row_graph(oracle::random_row_graph(rng, 3, static_cast<int>(rng() % 7)));
        ParityColoring phi(r.vertex_count());
        for (std::size_t v = 0; v < phi.size(); ++v)
            phi[v] = rng() % 2;
        for (bool sym : {false, true})
            for (bool mult : {true, false})
                CHECK(is_parity_coloring(r, phi, sym ? ParityMode::Symmetric : ParityMode::Standard,
                                         mult ? NeighborCount::EdgeMultiplicity : NeighborCount::DistinctNeighbors) ==
                      oracle::parity_coloring_ok(oracle::plain(r), as_grid(r, phi), sym, mult));
    }
}

TEST_CASE("neighbor counting modes differ on parallel edges") {
    // v_21 - v_12 twice: two edges, one distinct first-row neighbor.
    RowGraph r(3, 2, {{{2, 0}, {1, 1}, std::nullopt}, {{2, 0}, {1, 1}, std::nullopt}});
    bool differ = false;
    for (int mask = 0; mask < 64; ++mask) {
        ParityColoring phi(6);
        for (int v = 0; v < 6; ++v)
            phi[v] = mask >> v & 1;
        differ |= is_parity_coloring(r, phi, ParityMode::Standard, NeighborCount::EdgeMultiplicity) !=
                  is_parity_coloring(r, phi, ParityMode::Standard, NeighborCount::DistinctNeighbors);
    }
    CHECK(differ);
}

TEST_CASE("conversions on the two-edge instance") {
    RowGraph r(3, 2, {{{1, 0}, {1, 1}, std::nullopt}, {{2, 0}, {2, 1}, std::nullopt}});
    auto g = rows::extend_to_amiable(r, rows::identity_vertex_coloring(r));
    REQUIRE(g);
    AmiableColoring a{rows::identity_vertex_coloring(r), *g};
    ParityColoring std_phi = amiable_to_parity(r, a);
    ParityColoring sym_phi = amiable_to_symmetric(r, a);
    CHECK(is_parity_coloring(r, std_phi, ParityMode::Standard));
    CHECK(is_parity_coloring(r, sym_phi, ParityMode::Symmetric));
    CHECK(rows::is_amiable(r, parity_to_amiable(r, std_phi)));
    CHECK(rows::is_amiable(r, symmetric_to_amiable(r, sym_phi)));

    RowGraph edgeless(3, 3, {});
    AmiableColoring trivial{rows::identity_vertex_coloring(edgeless), {}};
    CHECK(amiable_to_symmetric(edgeless, trivial) == ParityColoring(9, false));
    CHECK(parity_to_amiable(edgeless, ParityColoring(9, false)).g.empty());

    AmiableColoring shuffled = a;
    std::swap(shuffled.f[0], shuffled.f[2]);
    std::swap(shuffled.f[4], shuffled.f[2]);
    CHECK_THROWS_AS(amiable_to_parity(r, shuffled), InvalidInput);
    CHECK_THROWS_AS(parity_to_amiable(r, ParityColoring{true, false, false, false, false, false}), InvalidInput);
}

TEST_CASE("three-way agreement at f(v_ij) = i") {
    int instances = 0, positive = 0;
    for (int s = 1; s <= 3; ++s) {
        int max_edges = s == 3 ? 4 : 6;
        rows::for_each_row_graph(3, s, max_edges, false, [&](const RowGraph &r) {
            if (!is_eulerian(rows::row_contract(r)))
                return;
            ++instances;
            auto g = rows::extend_to_amiable(r, rows::identity_vertex_coloring(r));
            auto std_phi = has_parity_coloring_bruteforce(r, ParityMode::Standard);
            auto sym_phi = has_parity_coloring_bruteforce(r, ParityMode::Symmetric);
            auto p = oracle::plain(r);
            CHECK(g.has_value() == oracle::amiable_exists(p, true));
            CHECK(std_phi.has_value() == oracle::parity_coloring_exists(p, false));
            CHECK(sym_phi.has_value() == oracle::parity_coloring_exists(p, true));
            CHECK(g.has_value() == std_phi.has_value());
            CHECK(g.has_value() == sym_phi.has_value());
            if (std_phi) {
                CHECK(is_parity_coloring(r, *std_phi, ParityMode::Standard));
                CHECK(rows::is_amiable(r, parity_to_amiable(r, *std_phi)));
            }
            if (sym_phi) {
                CHECK(is_parity_coloring(r, *sym_phi, ParityMode::Symmetric));
                CHECK(rows::is_amiable(r, symmetric_to_amiable(r, *sym_phi)));
            }
            if (g) {
                ++positive;
                AmiableColoring a{rows::identity_vertex_coloring(r), *g};
                CHECK(is_parity_coloring(r, amiable_to_parity(r, a), ParityMode::Standard));
                CHECK(is_parity_coloring(r, amiable_to_symmetric(r, a), ParityMode::Symmetric));
                CHECK(rows::is_amiable(r, parity_to_amiable(r, amiable_to_parity(r, a))));
                CHECK(rows::is_amiable(r, symmetric_to_amiable(r, amiable_to_symmetric(r, a))));
            }
        });
    }
    CHECK(instances > 500);
    CHECK(positive > 100);
    CHECK(positive < instances);
}

TEST_CASE("amiable iff some rearrangement has a parity coloring") {
    SUBCASE("single cross edge needs the eulerian hypothesis") {
        // Odd column degrees rule out amiable colorings, yet the parity
        // conditions alone are satisfiable.
        RowGraph r(3, 2, {{{1, 0}, {2, 1}, std::nullopt}});
        CHECK_FALSE(is_eulerian(rows::row_contract(r)));
        CHECK_FALSE(rows::brute_force_amiable(r));
        CHECK_FALSE(oracle::amiable_exists(oracle::plain(r)));
        bool any = false;
        for_each_row_arrangement(r, [&](const RowGraph &r2) {
            any |= has_parity_coloring_bruteforce(r2, ParityMode::Standard).has_value();
            CHECK(has_parity_coloring_bruteforce(r2, ParityMode::Standard).has_value() ==
                  oracle::parity_coloring_exists(oracle::plain(r2), false));
        });
        CHECK(any);
    }
    SUBCASE("eulerian instances") {
        std::mt19937 rng(13);
        for (int trial = 0; trial < 60; ++trial) {
            RowGraph r = oracle::to_row_graph(oracle::random_eulerian_row_graph(rng, 2 + trial % 2, 6));
            bool amiable = rows::brute_force_amiable(r).has_value();
            bool std_any = false, sym_any = false;
            for_each_row_arrangement(r, [&](const RowGraph &r2) {
                std_any |= has_parity_coloring_bruteforce(r2, ParityMode::Standard).has_value();
                sym_any |= has_parity_coloring_bruteforce(r2, ParityMode::Symmetric).has_value();
            });
            CHECK(amiable == std_any);
            CHECK(amiable == sym_any);
        }
    }
}

TEST_CASE("normalizing the vertex coloring") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        RowGraph r = oracle::to_row_graph(oracle::random_eulerian_row_graph(rng, 3, 8));
        auto a = rows::brute_force_amiable(r);
        if (!a)
            continue;
        Normalized n = normalize_identity_f(r, *a);
        CHECK(n.a.f == rows::identity_vertex_coloring(n.r));
        CHECK(rows::is_amiable(n.r, n.a));
        CHECK(is_parity_coloring(n.r, amiable_to_symmetric(n.r, n.a), ParityMode::Symmetric));
    }
    RowGraph wide(3, 9, {});
    CHECK_THROWS_AS(has_parity_coloring_bruteforce(wide, ParityMode::Standard), InvalidInput);
}
