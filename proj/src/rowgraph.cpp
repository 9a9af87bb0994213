#include "kframe/rowgraph.hpp"

#include <algorithm>
#include <numeric>

namespace kframe::rows {

RowGraph::RowGraph(int rows, int s, std::vector<RowEdge> edges) : rows_(rows), s_(s), edges_(std::move(edges)) {
    if (rows != 2 && rows != 3)
        throw InvalidInput("row graph needs 2 or 3 rows");
    if (s < 0)
        throw InvalidInput("negative column count");
    degree_.assign(rows_ * s_, 0);
    incidence_.assign(rows_ * s_, {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const RowEdge &re = edges_[e];
        if (!contains(re.u) || !contains(re.v))
            throw InvalidInput("row edge endpoint out of range");
        if (re.u.col == re.v.col)
            throw InvalidInput("row edge inside column " + std::to_string(re.u.col + 1));
        for (Cell c : {re.u, re.v}) {
            ++degree_[index(c)];
            incidence_[index(c)].push_back(static_cast<int>(e));
        }
    }
}

Multigraph RowGraph::as_multigraph() const {
    std::vector<VertexId> vs(rows_ * s_);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        es.push_back({static_cast<EdgeId>(e), index(edges_[e].u), index(edges_[e].v)});
    return Multigraph(vs, es);
}

Multigraph RowGraph::row_graph(int row) const {
    std::vector<VertexId> vs(s_);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (std::size_t e = 0; e < edges_.size(); ++e)
        if (is_row_edge(static_cast<int>(e), row))
            es.push_back({static_cast<EdgeId>(e), edges_[e].u.col, edges_[e].v.col});
    return Multigraph(vs, es);
}

RowGraph build_row_graph(const frame::Frame &f, const frame::PerfectColoring &alpha) {
    if (!frame::is_perfect_coloring(f, alpha))
        throw InvalidInput("coloring is not perfect for the frame");
    std::vector<RowEdge> edges;
    for (EdgeId id : f.connecting_edges()) {
        const Edge &e = f.host.edge(id);
        auto cell_of = [&](VertexId v) {
            if (!f.is_two_valent(v))
                throw InvariantViolation("connecting edge at a 3-valent frame vertex");
            return Cell{alpha.vertex_color.at(v), f.component_of.at(v)};
        };
        edges.push_back({cell_of(e.a), cell_of(e.b), id});
    }
    return RowGraph(3, f.s(), std::move(edges));
}

Multigraph row_contract(const RowGraph &r) {
    std::vector<VertexId> vs(r.s());
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (std::size_t e = 0; e < r.edge_count(); ++e)
        es.push_back({static_cast<EdgeId>(e), r.edges()[e].u.col, r.edges()[e].v.col});
    return Multigraph(vs, es);
}

namespace {

std::vector<std::pair<int, int>> pair_multiset(const RowGraph &r) {
    std::vector<std::pair<int, int>> out;
    for (const RowEdge &e : r.edges())
        out.push_back(std::minmax(r.index(e.u), r.index(e.v)));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool identical(const RowGraph &a, const RowGraph &b) {
    return a.rows() == b.rows() && a.s() == b.s() && pair_multiset(a) == pair_multiset(b);
}

Rearrangement Rearrangement::identity(int s) {
    Rearrangement p;
    p.column_perm.resize(s);
    std::iota(p.column_perm.begin(), p.column_perm.end(), 0);
    p.row_perm.assign(s, {0, 1, 2, 3});
    return p;
}

Cell Rearrangement::apply(Cell c) const { return {row_perm[c.col][c.row], column_perm[c.col]}; }

Rearrangement Rearrangement::then(const Rearrangement &next) const {
    Rearrangement out = identity(static_cast<int>(column_perm.size()));
    for (std::size_t j = 0; j < column_perm.size(); ++j) {
        int mid = column_perm[j];
        out.column_perm[j] = next.column_perm[mid];
        for (int i = 1; i <= 3; ++i)
            out.row_perm[j][i] = next.row_perm[mid][row_perm[j][i]];
    }
    return out;
}

Rearrangement Rearrangement::inverse() const {
    Rearrangement out = identity(static_cast<int>(column_perm.size()));
    for (std::size_t j = 0; j < column_perm.size(); ++j) {
        out.column_perm[column_perm[j]] = static_cast<int>(j);
        for (int i = 1; i <= 3; ++i)
            out.row_perm[column_perm[j]][row_perm[j][i]] = i;
    }
    return out;
}

namespace {

void check_rearrangement(const RowGraph &r, const Rearrangement &p) {
    if (static_cast<int>(p.column_perm.size()) != r.s() || static_cast<int>(p.row_perm.size()) != r.s())
        throw InvalidInput("rearrangement has the wrong number of columns");
    std::vector<bool> seen(r.s(), false);
    for (int c : p.column_perm) {
        if (c < 0 || c >= r.s() || seen[c])
            throw InvalidInput("column permutation is not a permutation");
        seen[c] = true;
    }
    for (const auto &rp : p.row_perm) {
        std::vector<bool> hit(r.rows() + 1, false);
        for (int i = 1; i <= r.rows(); ++i) {
            if (rp[i] < 1 || rp[i] > r.rows() || hit[rp[i]])
                throw InvalidInput("row permutation is not a permutation");
            hit[rp[i]] = true;
        }
    }
}

} // namespace

RowGraph rearrange(const RowGraph &r, const Rearrangement &p) {
    check_rearrangement(r, p);
    std::vector<RowEdge> edges;
    for (const RowEdge &e : r.edges())
        edges.push_back({p.apply(e.u), p.apply(e.v), e.origin});
    return RowGraph(r.rows(), r.s(), std::move(edges));
}

bool is_amiable(const RowGraph &r, const AmiableColoring &a) {
    if (r.rows() != 3 || static_cast<int>(a.f.size()) != r.vertex_count() || a.g.size() != r.edge_count())
        return false;
    for (Color c : a.f)
        if (c < 1 || c > 3)
            return false;
    for (Color c : a.g)
        if (c < 1 || c > 3)
            return false;
    // (i) distinct colors within each column.
    for (int j = 0; j < r.s(); ++j) {
        Color x = a.at(r, {1, j}), y = a.at(r, {2, j}), z = a.at(r, {3, j});
        if (x == y || y == z || x == z)
            return false;
    }
    // (ii) no edge shares its color with an endpoint.
    for (std::size_t e = 0; e < r.edge_count(); ++e)
        if (a.g[e] == a.at(r, r.edges()[e].u) || a.g[e] == a.at(r, r.edges()[e].v))
            return false;
    // (iii) per column and color, the color degrees sum to an even number.
    for (int j = 0; j < r.s(); ++j) {
        for (Color c = 1; c <= 3; ++c) {
            int sum = 0;
            for (int i = 1; i <= 3; ++i)
                for (int e : r.incident({i, j}))
                    sum += a.g[e] == c ? 1 : 0;
            if (sum % 2 != 0)
                return false;
        }
    }
    return true;
}

AmiableColoring transfer(const RowGraph &r, const AmiableColoring &a, const Rearrangement &p) {
    check_rearrangement(r, p);
    AmiableColoring out{std::vector<Color>(a.f.size(), 0), a.g};
    for (int v = 0; v < r.vertex_count(); ++v)
        out.f[r.index(p.apply(r.cell(v)))] = a.f[v];
    return out;
}

std::vector<Color> identity_vertex_coloring(const RowGraph &r) {
    std::vector<Color> f(r.vertex_count());
    for (int v = 0; v < r.vertex_count(); ++v)
        f[v] = r.cell(v).row;
    return f;
}

namespace {

void check_limits(const RowGraph &r, const OracleLimits &limits) {
    if (r.rows() != 3)
        throw InvalidInput("amiable colorings need a 3-row graph");
    if (!limits.force && (static_cast<int>(r.edge_count()) > limits.max_edges || r.s() > limits.max_columns))
        throw InvalidInput("instance exceeds the brute-force size guard (" + std::to_string(r.edge_count()) +
                           " edges, " + std::to_string(r.s()) + " columns)");
}

// Depth-first search over edge colors. Each column's three color parities
// are checked as soon as its last incident edge is colored.
class Extender {
  public:
    Extender(const RowGraph &r, const std::vector<Color> &f) : r_(r), f_(f) {
        pending_.assign(r.s(), 0);
        parity_.assign(r.s(), {0, 0, 0, 0});
        for (const RowEdge &e : r.edges()) {
            ++pending_[e.u.col];
            ++pending_[e.v.col];
        }
        g_.assign(r.edge_count(), 0);
    }

    std::optional<std::vector<Color>> run() {
        for (int j = 0; j < r_.s(); ++j)
            if (pending_[j] == 0 && !column_even(j))
                return std::nullopt;
        if (search(0))
            return g_;
        return std::nullopt;
    }

  private:
    bool column_even(int j) const { return parity_[j][1] == 0 && parity_[j][2] == 0 && parity_[j][3] == 0; }

    bool search(std::size_t e) {
        if (e == r_.edge_count())
            return true;
        const RowEdge &re = r_.edges()[e];
        Color fu = f_[r_.index(re.u)], fv = f_[r_.index(re.v)];
        for (Color c = 1; c <= 3; ++c) {
            if (c == fu || c == fv)
                continue;
            g_[e] = c;
            parity_[re.u.col][c] ^= 1;
            parity_[re.v.col][c] ^= 1;
            --pending_[re.u.col];
            --pending_[re.v.col];
            bool ok = (pending_[re.u.col] != 0 || column_even(re.u.col)) &&
                      (pending_[re.v.col] != 0 || column_even(re.v.col)) && search(e + 1);
            ++pending_[re.u.col];
            ++pending_[re.v.col];
            parity_[re.u.col][c] ^= 1;
            parity_[re.v.col][c] ^= 1;
            if (ok)
                return true;
        }
        g_[e] = 0;
        return false;
    }

    const RowGraph &r_;
    const std::vector<Color> &f_;
    std::vector<int> pending_;
    std::vector<std::array<int, 4>> parity_;
    std::vector<Color> g_;
};

constexpr std::array<std::array<Color, 3>, 6> kPermutations{{
    {1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};

} // namespace

std::optional<std::vector<Color>> extend_to_amiable(const RowGraph &r, const std::vector<Color> &f,
                                                   const OracleLimits &limits) {
    check_limits(r, limits);
    if (static_cast<int>(f.size()) != r.vertex_count())
        throw InvalidInput("vertex coloring has the wrong size");
    for (int j = 0; j < r.s(); ++j) {
        Color x = f[r.index({1, j})], y = f[r.index({2, j})], z = f[r.index({3, j})];
        if (x == y || y == z || x == z)
            return std::nullopt;
    }
    return Extender(r, f).run();
}

std::optional<AmiableColoring> brute_force_amiable(const RowGraph &r, const OracleLimits &limits) {
    check_limits(r, limits);
    if (r.s() == 0)
        return AmiableColoring{};
    std::vector<int> choice(r.s(), 0);
    std::vector<Color> f(r.vertex_count());
    while (true) {
        for (int j = 0; j < r.s(); ++j)
            for (int i = 1; i <= 3; ++i)
                f[r.index({i, j})] = kPermutations[choice[j]][i - 1];
        if (auto g = Extender(r, f).run())
            return AmiableColoring{f, *g};
        // Column 0 stays fixed: a global color permutation preserves amiability.
        int j = 1;
        while (j < r.s() && choice[j] == 5)
            choice[j++] = 0;
        if (j >= r.s())
            return std::nullopt;
        ++choice[j];
    }
}

void for_each_row_graph(int rows, int s, int max_edges, bool full_rearrangement,
                        const std::function<void(const RowGraph &)> &visit) {
    if (rows != 2 && rows != 3)
        throw InvalidInput("row graph needs 2 or 3 rows");
    auto idx = [&](int row, int col) { return (row - 1) * s + col; };
    std::vector<std::pair<int, int>> types;
    for (int a = 0; a < rows * s; ++a)
        for (int b = a + 1; b < rows * s; ++b)
            if (a % s != b % s)
                types.push_back({a, b});
    std::map<std::pair<int, int>, int> type_of;
    for (std::size_t t = 0; t < types.size(); ++t)
        type_of[types[t]] = static_cast<int>(t);

    // Every group element as a map on types.
    std::vector<std::vector<int>> group;
    std::vector<int> cols(s);
    std::iota(cols.begin(), cols.end(), 0);
    std::vector<std::array<int, 4>> row_perms;
    std::array<int, 4> rp{0, 1, 2, 3};
    do {
        row_perms.push_back(rp);
    } while (rows == 3 && std::next_permutation(rp.begin() + 1, rp.end()));
    if (rows == 2)
        row_perms.push_back({0, 2, 1, 3});
    do {
        std::vector<int> per_col(s, 0);
        while (true) {
            std::vector<int> cell_map(rows * s);
            for (int j = 0; j < s; ++j)
                for (int i = 1; i <= rows; ++i)
                    cell_map[idx(i, j)] = idx(full_rearrangement ? row_perms[per_col[j]][i] : i, cols[j]);
            std::vector<int> tmap(types.size());
            for (std::size_t t = 0; t < types.size(); ++t)
                tmap[t] = type_of.at(std::minmax(cell_map[types[t].first], cell_map[types[t].second]));
            group.push_back(std::move(tmap));
            if (!full_rearrangement)
                break;
            int j = 0;
            while (j < s && per_col[j] + 1 == static_cast<int>(row_perms.size()))
                per_col[j++] = 0;
            if (j == s)
                break;
            ++per_col[j];
        }
    } while (std::next_permutation(cols.begin(), cols.end()));

    std::vector<int> seq;
    std::vector<int> image;
    auto canonical = [&]() {
        for (const auto &tmap : group) {
            image.clear();
            for (int t : seq)
                image.push_back(tmap[t]);
            std::sort(image.begin(), image.end());
            if (image < seq)
                return false;
        }
        return true;
    };
    auto emit = [&]() {
        std::vector<RowEdge> edges;
        for (int t : seq) {
            int a = types[t].first, b = types[t].second;
            edges.push_back({{a / s + 1, a % s}, {b / s + 1, b % s}, std::nullopt});
        }
        visit(RowGraph(rows, s, std::move(edges)));
    };
    std::function<void(int)> grow = [&](int from) {
        if (canonical())
            emit();
        if (static_cast<int>(seq.size()) == max_edges)
            return;
        for (int t = from; t < static_cast<int>(types.size()); ++t) {
            seq.push_back(t);
            grow(t);
            seq.pop_back();
        }
    };
    grow(0);
}

nlohmann::json to_json(const RowGraph &r) {
    nlohmann::json edges = nlohmann::json::array();
    for (const RowEdge &e : r.edges()) {
        nlohmann::json row = {e.u.row, e.u.col + 1, e.v.row, e.v.col + 1};
        if (e.origin)
            row.push_back(*e.origin);
        edges.push_back(row);
    }
    return {{"rows", r.rows()}, {"s", r.s()}, {"edges", edges}};
}

RowGraph row_graph_from_json(const nlohmann::json &j) {
    try {
        std::vector<RowEdge> edges;
        for (const auto &e : j.at("edges")) {
            if (e.size() != 4 && e.size() != 5)
                throw InvalidInput("row edge needs 4 or 5 entries");
            RowEdge re{{e[0].get<int>(), e[1].get<int>() - 1}, {e[2].get<int>(), e[3].get<int>() - 1}, std::nullopt};
            if (e.size() == 5)
                re.origin = e[4].get<EdgeId>();
            edges.push_back(re);
        }
        return RowGraph(j.value("rows", 3), j.at("s").get<int>(), std::move(edges));
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidInput(std::string("malformed row graph JSON: ") + ex.what());
    }
}

nlohmann::json to_json(const RowGraph &r, const AmiableColoring &a) {
    nlohmann::json f = nlohmann::json::array();
    for (int v = 0; v < r.vertex_count(); ++v) {
        Cell c = r.cell(v);
        f.push_back({c.row, c.col + 1, a.f[v]});
    }
    return {{"f", f}, {"g", a.g}};
}

AmiableColoring amiable_coloring_from_json(const RowGraph &r, const nlohmann::json &j) {
    try {
        AmiableColoring a{std::vector<Color>(r.vertex_count(), 0), j.at("g").get<std::vector<Color>>()};
        for (const auto &entry : j.at("f")) {
            Cell c{entry.at(0).get<int>(), entry.at(1).get<int>() - 1};
            if (!r.contains(c))
                throw InvalidInput("coloring refers to a vertex outside the row graph");
            a.f[r.index(c)] = entry.at(2).get<Color>();
        }
        return a;
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidInput(std::string("malformed coloring JSON: ") + ex.what());
    }
}

nlohmann::json to_json(const Rearrangement &p) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &rp : p.row_perm)
        rows.push_back({rp[1], rp[2], rp[3]});
    return {{"column_perm", p.column_perm}, {"row_perm", rows}};
}

} // namespace kframe::rows
