#include "kframe/reformulation.hpp"

#include "kframe/parity.hpp"

#include <cstdint>
#include <set>

namespace kframe::reform {

namespace {

using rows::Cell;
using rows::Color;

int next_row(int i) { return i % 3 + 1; }

// d(v, R[V_a ∪ V_b]) for v in row a or b.
int degree_within(const RowGraph &r, Cell v, int a, int b) {
    int d = 0;
    for (int e : r.incident(v)) {
        const auto &re = r.edges()[e];
        Cell w = re.u == v ? re.v : re.u;
        d += (w.row == a || w.row == b) ? 1 : 0;
    }
    return d;
}

int neighbors_in_row(const RowGraph &r, Cell v, int row, NeighborCount count) {
    std::set<Cell> distinct;
    int edges = 0;
    for (int e : r.incident(v)) {
        const auto &re = r.edges()[e];
        Cell w = re.u == v ? re.v : re.u;
        if (w.row == row) {
            ++edges;
            distinct.insert(w);
        }
    }
    return count == NeighborCount::EdgeMultiplicity ? edges : static_cast<int>(distinct.size());
}

// Whether phi(v_1j) == phi(v_2j) and phi(v_2j) == phi(v_3j) are required.
struct ColumnRule {
    bool same12;
    bool same23;
};

ColumnRule column_rule(const RowGraph &r, int j, ParityMode mode, NeighborCount count) {
    ColumnRule rule;
    rule.same12 = (degree_within(r, {1, j}, 1, 2) - neighbors_in_row(r, {2, j}, 1, count)) % 2 == 0;
    int rhs = mode == ParityMode::Standard ? degree_within(r, {3, j}, 2, 3) : neighbors_in_row(r, {3, j}, 2, count);
    rule.same23 = (degree_within(r, {2, j}, 2, 3) - rhs) % 2 == 0;
    return rule;
}

void require_identity_amiable(const RowGraph &r, const AmiableColoring &a) {
    if (!rows::is_amiable(r, a))
        throw InvalidInput("coloring is not amiable");
    if (a.f != rows::identity_vertex_coloring(r))
        throw InvalidInput("conversion needs the vertex coloring f(v_ij) = i");
}

// d_c(v, R[V_row]) for v in that row.
int color_degree_in_row(const RowGraph &r, const AmiableColoring &a, Cell v, Color c) {
    int d = 0;
    for (int e : r.incident(v))
        d += r.is_row_edge(e, v.row) && a.g[e] == c ? 1 : 0;
    return d;
}

std::array<EdgeSet, 4> black_t_joins(const RowGraph &r, const ParityColoring &phi) {
    std::array<EdgeSet, 4> t;
    for (int i = 1; i <= 3; ++i) {
        VertexSet black;
        for (int j = 0; j < r.s(); ++j)
            if (phi[r.index({i, j})])
                black.insert(j);
        t[i] = parity::acyclic_t_join(r.row_graph(i), black);
    }
    return t;
}

void require_valid(const RowGraph &r, const ParityColoring &phi, ParityMode mode) {
    if (r.rows() != 3)
        throw InvalidInput("parity colorings need a 3-row graph");
    if (!is_eulerian(rows::row_contract(r)))
        throw InvalidInput("R_C is not eulerian");
    if (!is_parity_coloring(r, phi, mode))
        throw InvalidInput("not a valid parity coloring for this mode");
}

AmiableColoring checked(const RowGraph &r, AmiableColoring a) {
    if (!rows::is_amiable(r, a))
        throw InvariantViolation("parity coloring produced a non-amiable edge coloring");
    return a;
}

} // namespace

bool is_parity_coloring(const RowGraph &r, const ParityColoring &phi, ParityMode mode, NeighborCount count) {
    if (r.rows() != 3 || static_cast<int>(phi.size()) != r.vertex_count())
        return false;
    for (int j = 0; j < r.s(); ++j) {
        ColumnRule rule = column_rule(r, j, mode, count);
        bool b1 = phi[r.index({1, j})], b2 = phi[r.index({2, j})], b3 = phi[r.index({3, j})];
        if ((b1 == b2) != rule.same12 || (b2 == b3) != rule.same23)
            return false;
    }
    for (int i = 1; i <= 3; ++i)
        for (const auto &comp : components(r.row_graph(i))) {
            int black = 0;
            for (VertexId j : comp)
                black += phi[r.index({i, j})] ? 1 : 0;
            if (black % 2)
                return false;
        }
    return true;
}

ParityColoring amiable_to_symmetric(const RowGraph &r, const AmiableColoring &a) {
    require_identity_amiable(r, a);
    ParityColoring phi(r.vertex_count(), false);
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < r.s(); ++j)
            phi[r.index({i, j})] = color_degree_in_row(r, a, {i, j}, next_row(i)) % 2 == 1;
    return phi;
}

ParityColoring amiable_to_parity(const RowGraph &r, const AmiableColoring &a) {
    require_identity_amiable(r, a);
    ParityColoring phi(r.vertex_count(), false);
    const std::array<Color, 4> color{0, 2, 3, 2};
    for (int i = 1; i <= 3; ++i)
        for (int j = 0; j < r.s(); ++j)
            phi[r.index({i, j})] = color_degree_in_row(r, a, {i, j}, color[i]) % 2 == 1;
    return phi;
}

AmiableColoring symmetric_to_amiable(const RowGraph &r, const ParityColoring &phi) {
    require_valid(r, phi, ParityMode::Symmetric);
    auto t = black_t_joins(r, phi);
    AmiableColoring a{rows::identity_vertex_coloring(r), std::vector<Color>(r.edge_count(), 0)};
    for (std::size_t e = 0; e < r.edge_count(); ++e) {
        const auto &re = r.edges()[e];
        int id = static_cast<int>(e);
        if (re.u.row == re.v.row) {
            int i = re.u.row;
            a.g[e] = t[i].contains(id) ? next_row(i) : next_row(next_row(i));
        } else {
            a.g[e] = 6 - re.u.row - re.v.row;
        }
    }
    return checked(r, a);
}

AmiableColoring parity_to_amiable(const RowGraph &r, const ParityColoring &phi) {
    require_valid(r, phi, ParityMode::Standard);
    auto t = black_t_joins(r, phi);
    // Row edges: color inside the t-join, color outside it.
    const std::array<std::pair<Color, Color>, 4> row_colors{{{0, 0}, {2, 3}, {3, 1}, {2, 1}}};
    AmiableColoring a{rows::identity_vertex_coloring(r), std::vector<Color>(r.edge_count(), 0)};
    for (std::size_t e = 0; e < r.edge_count(); ++e) {
        const auto &re = r.edges()[e];
        if (re.u.row == re.v.row) {
            auto [inside, outside] = row_colors[re.u.row];
            a.g[e] = t[re.u.row].contains(static_cast<int>(e)) ? inside : outside;
        } else {
            a.g[e] = 6 - re.u.row - re.v.row;
        }
    }
    return checked(r, a);
}

std::optional<ParityColoring> has_parity_coloring_bruteforce(const RowGraph &r, ParityMode mode, int max_columns,
                                                             NeighborCount count) {
    if (r.rows() != 3)
        throw InvalidInput("parity colorings need a 3-row graph");
    if (r.s() > max_columns || 3 * r.s() > 30)
        throw InvalidInput("too many columns for exhaustive parity search");
    const int s = r.s();
    std::vector<ColumnRule> rules;
    for (int j = 0; j < s; ++j)
        rules.push_back(column_rule(r, j, mode, count));
    std::vector<std::uint32_t> comp_masks;
    for (int i = 1; i <= 3; ++i)
        for (const auto &comp : components(r.row_graph(i))) {
            std::uint32_t m = 0;
            for (VertexId j : comp)
                m |= 1u << r.index({i, j});
            comp_masks.push_back(m);
        }
    const std::uint32_t total = 1u << (3 * s);
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        bool ok = true;
        for (int j = 0; j < s && ok; ++j) {
            bool b1 = mask >> j & 1, b2 = mask >> (s + j) & 1, b3 = mask >> (2 * s + j) & 1;
            ok = (b1 == b2) == rules[j].same12 && (b2 == b3) == rules[j].same23;
        }
        for (std::size_t c = 0; c < comp_masks.size() && ok; ++c)
            ok = std::popcount(mask & comp_masks[c]) % 2 == 0;
        if (!ok)
            continue;
        ParityColoring phi(r.vertex_count());
        for (int v = 0; v < r.vertex_count(); ++v)
            phi[v] = mask >> v & 1;
        return phi;
    }
    return std::nullopt;
}

Normalized normalize_identity_f(const RowGraph &r, const AmiableColoring &a) {
    if (!rows::is_amiable(r, a))
        throw InvalidInput("coloring is not amiable");
    rows::Rearrangement p = rows::Rearrangement::identity(r.s());
    for (int j = 0; j < r.s(); ++j)
        for (int i = 1; i <= 3; ++i)
            p.row_perm[j][i] = a.at(r, {i, j});
    return {rows::rearrange(r, p), rows::transfer(r, a, p), p};
}

} // namespace kframe::reform
