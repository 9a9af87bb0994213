#include "kframe/construct.hpp"

#include "kframe/parity.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace kframe::construct {

namespace {

constexpr std::array<Color, 4> kEngineF{0, 2, 3, 1};

struct State {
    RowGraph cur;
    Rearrangement acc;
    std::vector<std::string> steps;
    std::vector<Color> g;
    std::vector<BlockTrace> blocks;

    explicit State(const RowGraph &r)
        : cur(r), acc(Rearrangement::identity(r.s())), g(r.edge_count(), 0) {}

    void swap_rows(const std::vector<int> &cols, int a, int b) {
        if (cols.empty() || a == b)
            return;
        Rearrangement m = Rearrangement::identity(cur.s());
        for (int c : cols)
            std::swap(m.row_perm[c][a], m.row_perm[c][b]);
        cur = rows::rearrange(cur, m);
        acc = acc.then(m);
    }
};

std::string column_list(const std::vector<int> &cols) {
    std::string out;
    for (int c : cols)
        out += (out.empty() ? "" : ", ") + std::to_string(c + 1);
    return out;
}

int non_isolated_count(const RowGraph &r, int col) {
    int n = 0;
    for (int i = 1; i <= 3; ++i)
        n += r.degree({i, col}) > 0 ? 1 : 0;
    return n;
}

void require_three_rows_eulerian(const RowGraph &r) {
    if (r.rows() != 3)
        throw InvalidInput("amiable colorings need a 3-row graph");
    if (!is_eulerian(rows::row_contract(r)))
        throw InvalidInput("R_C is not eulerian");
}

// Component id (smallest column) of every first-row vertex in R[V_1].
std::vector<int> row1_components(const RowGraph &r) {
    std::vector<int> comp(r.s(), -1);
    for (const auto &c : components(r.row_graph(1)))
        for (VertexId v : c)
            comp[v] = c.front();
    return comp;
}

std::vector<bool> block_mask(const RowGraph &r, const std::vector<int> &cols) {
    std::vector<bool> in(r.s(), false);
    for (int c : cols)
        in[c] = true;
    return in;
}

bool in_rows(const rows::RowEdge &e, int a, int b) {
    auto ok = [&](int row) { return row == a || row == b; };
    return ok(e.u.row) && ok(e.v.row);
}

Multigraph column_graph(const RowGraph &r, const std::vector<int> &cols, const std::vector<int> &edges) {
    std::vector<VertexId> vs(cols.begin(), cols.end());
    std::vector<Edge> es;
    for (int e : edges)
        es.push_back({e, r.edges()[e].u.col, r.edges()[e].v.col});
    return Multigraph(vs, es);
}

// The t-join engine on one block of columns. Every column outside the core
// component of R[V_1] must have an isolated first-row vertex and at most
// one non-isolated vertex.
void run_block(State &st, std::vector<int> cols, int core) {
    std::sort(cols.begin(), cols.end());
    BlockTrace bt;
    bt.columns = cols;
    bt.core = core;
    std::vector<bool> in = block_mask(st.cur, cols);
    std::vector<int> block_edges;
    for (std::size_t e = 0; e < st.cur.edge_count(); ++e) {
        const auto &re = st.cur.edges()[e];
        if (in[re.u.col] != in[re.v.col])
            throw InvariantViolation("an edge leaves its block");
        if (in[re.u.col])
            block_edges.push_back(static_cast<int>(e));
    }

    std::vector<int> comp = row1_components(st.cur);
    auto in_core = [&](int col) { return comp[col] == comp[core]; };
    for (int m : cols) {
        if (in_core(m))
            continue;
        if (st.cur.degree({1, m}) > 0 || non_isolated_count(st.cur, m) > 1)
            throw InvalidInput("column " + std::to_string(m + 1) +
                               " lies outside the core component but is not reduced to one non-isolated vertex "
                               "off the first row");
    }

    // Rows 2 and 3 identified column by column.
    std::vector<int> r23;
    for (int e : block_edges)
        if (in_rows(st.cur.edges()[e], 2, 3))
            r23.push_back(e);
    Multigraph star23 = column_graph(st.cur, cols, r23);
    VertexSet y23;
    for (int c : cols)
        if (star23.degree(c) % 2)
            y23.insert(c);
    EdgeSet t23 = parity::acyclic_t_join(star23, y23);
    bt.t23.assign(t23.begin(), t23.end());

    // No edge of T*_{2,3} may join row 2 to row 3.
    std::vector<rows::RowEdge> two_row;
    for (int e : bt.t23) {
        const auto &re = st.cur.edges()[e];
        two_row.push_back({{re.u.row - 1, re.u.col}, {re.v.row - 1, re.v.col}, std::nullopt});
    }
    std::set<int> u = parity::resolve_two_row(RowGraph(2, st.cur.s(), two_row));
    bt.swapped_23.assign(u.begin(), u.end());
    st.swap_rows(bt.swapped_23, 2, 3);
    if (!bt.swapped_23.empty())
        st.steps.push_back("rows 2 and 3 exchanged in columns " + column_list(bt.swapped_23) +
                           " so that the t-join stays inside rows");
    for (int e : bt.t23) {
        const auto &re = st.cur.edges()[e];
        if (re.u.row != re.v.row)
            throw InvariantViolation("t-join edge still joins rows 2 and 3");
        (re.u.row == 2 ? bt.t2 : bt.t3).push_back(e);
    }

    for (int e : r23)
        if (!t23.contains(e))
            st.g[e] = 2;

    // R*_{1,2}: first-row edges, edges between rows 1 and 2, and T*_2.
    std::vector<int> star12;
    for (int e : block_edges) {
        const auto &re = st.cur.edges()[e];
        bool row2_only = re.u.row == 2 && re.v.row == 2;
        if (in_rows(re, 1, 2) && !row2_only)
            star12.push_back(e);
    }
    star12.insert(star12.end(), bt.t2.begin(), bt.t2.end());
    std::vector<int> deg12(st.cur.vertex_count(), 0);
    for (int e : star12) {
        ++deg12[st.cur.index(st.cur.edges()[e].u)];
        ++deg12[st.cur.index(st.cur.edges()[e].v)];
    }
    VertexSet y1;
    for (int m : cols) {
        if ((deg12[st.cur.index({1, m})] + deg12[st.cur.index({2, m})]) % 2 == 0)
            continue;
        if (!in_core(m))
            throw InvariantViolation("contradiction: Y_1 contains column " + std::to_string(m + 1) +
                                     " outside the core component");
        y1.insert(m);
        bt.y1.push_back(m);
    }
    std::vector<int> row1;
    for (int e : block_edges)
        if (st.cur.is_row_edge(e, 1))
            row1.push_back(e);
    EdgeSet t1;
    try {
        t1 = parity::acyclic_t_join(column_graph(st.cur, cols, row1), y1);
    } catch (const InvalidInput &ex) {
        throw InvariantViolation(std::string("contradiction: no t-join for Y_1: ") + ex.what());
    }
    bt.t1.assign(t1.begin(), t1.end());
    for (int e : star12)
        if (!t1.contains(e))
            st.g[e] = 1;
    for (int e : block_edges)
        if (st.g[e] == 0)
            st.g[e] = 3;
    st.blocks.push_back(std::move(bt));
}

Construction finish(const RowGraph &input, State &st) {
    Construction out{st.cur, {}, {}, {st.acc, st.steps, st.blocks}};
    out.arranged_coloring.f.resize(st.cur.vertex_count());
    for (int v = 0; v < st.cur.vertex_count(); ++v)
        out.arranged_coloring.f[v] = kEngineF[st.cur.cell(v).row];
    out.arranged_coloring.g = st.g;
    if (!rows::is_amiable(st.cur, out.arranged_coloring))
        throw InvariantViolation("constructed coloring is not amiable");
    out.coloring = rows::transfer(st.cur, out.arranged_coloring, st.acc.inverse());
    if (!rows::is_amiable(input, out.coloring))
        throw InvariantViolation("coloring read back on the input is not amiable");
    return out;
}

std::vector<int> all_columns(const RowGraph &r) {
    std::vector<int> cols(r.s());
    std::iota(cols.begin(), cols.end(), 0);
    return cols;
}

// Moves a lone non-isolated first-row vertex to row 2 in every column that
// is not in `keep`.
void clear_first_row(State &st, const std::vector<bool> &keep, const std::string &why) {
    std::vector<int> moved;
    for (int j = 0; j < st.cur.s(); ++j)
        if (!keep[j] && st.cur.degree({1, j}) > 0 && non_isolated_count(st.cur, j) == 1)
            moved.push_back(j);
    st.swap_rows(moved, 1, 2);
    if (!moved.empty())
        st.steps.push_back("rows 1 and 2 exchanged in columns " + column_list(moved) + " " + why);
}

} // namespace

Construction construct_amiable_main(const RowGraph &r, const std::vector<frame::Kind> &kinds, Color witness_color) {
    require_three_rows_eulerian(r);
    if (static_cast<int>(kinds.size()) != r.s())
        throw InvalidInput("one component kind per column is required");
    if (witness_color < 1 || witness_color > 3)
        throw InvalidInput("witness color must be 1, 2 or 3");
    State st(r);
    if (r.s() == 0)
        return finish(r, st);
    if (witness_color != 1) {
        st.swap_rows(all_columns(r), 1, witness_color);
        st.steps.push_back("colors 1 and " + std::to_string(witness_color) +
                           " exchanged in every component so that H has color 1");
    }
    int core = 0;
    for (int j = 0; j < r.s(); ++j)
        if (kinds[j] == frame::Kind::K) {
            core = j;
            break;
        }
    std::vector<int> comp = row1_components(st.cur);
    std::vector<bool> in_h(r.s(), false);
    for (int j = 0; j < r.s(); ++j) {
        in_h[j] = comp[j] == comp[core];
        if (kinds[j] == frame::Kind::K && !in_h[j])
            throw InvalidInput("the witness does not connect K-column " + std::to_string(j + 1));
    }
    st.steps.push_back("H spans columns " + column_list([&] {
                           std::vector<int> h;
                           for (int j = 0; j < r.s(); ++j)
                               if (in_h[j])
                                   h.push_back(j);
                           return h;
                       }()));
    clear_first_row(st, in_h, "(C-components outside H recolored away from color 1)");
    run_block(st, all_columns(r), core);
    return finish(r, st);
}

bool one_component_applies(const RowGraph &r, int row) {
    if (r.rows() != 3 || row < 1 || row > 3 || !is_eulerian(rows::row_contract(r)))
        return false;
    Multigraph rg = r.row_graph(row);
    int big = 0;
    for (const auto &c : components(rg)) {
        if (c.size() > 1) {
            ++big;
            continue;
        }
        if (non_isolated_count(r, c.front()) > 1)
            return false;
    }
    return big <= 1;
}

Construction construct_amiable_one_component(const RowGraph &r, int row) {
    require_three_rows_eulerian(r);
    if (!one_component_applies(r, row))
        throw InvalidInput("row " + std::to_string(row) + " does not satisfy the single-component hypothesis");
    State st(r);
    if (r.s() == 0)
        return finish(r, st);
    if (row != 1) {
        st.swap_rows(all_columns(r), 1, row);
        st.steps.push_back("rows 1 and " + std::to_string(row) + " exchanged in every column");
    }
    int core = 0;
    std::vector<bool> keep(r.s(), false);
    for (const auto &c : components(st.cur.row_graph(1)))
        if (c.size() > 1) {
            core = c.front();
            for (VertexId v : c)
                keep[v] = true;
        }
    keep[core] = true;
    clear_first_row(st, keep, "(first-row vertices with cross edges only moved off the first row)");
    run_block(st, all_columns(r), core);
    return finish(r, st);
}

Construction construct_amiable_connected_row(const RowGraph &r) {
    for (int row = 1; row <= 3; ++row)
        if (r.s() > 0 && is_connected(r.row_graph(row)))
            return construct_amiable_one_component(r, row);
    throw InvalidInput("no row induces a connected subgraph");
}

bool two_columns_apply(const RowGraph &r, int p, int q) {
    if (r.rows() != 3 || p < 0 || q < 0 || p >= r.s() || q >= r.s() || !is_eulerian(rows::row_contract(r)))
        return false;
    for (int j = 0; j < r.s(); ++j)
        if (j != p && j != q && non_isolated_count(r, j) > 1)
            return false;
    return true;
}

Construction construct_amiable_two_columns(const RowGraph &r, int p, int q) {
    require_three_rows_eulerian(r);
    if (!two_columns_apply(r, p, q))
        throw InvalidInput("some column other than the two special ones has two non-isolated vertices");
    State st(r);
    Multigraph whole = r.as_multigraph();
    // Shortest path from column p to column q, breadth-first.
    std::vector<int> parent(r.vertex_count(), -2);
    std::deque<int> queue;
    for (int i = 1; i <= 3; ++i) {
        parent[r.index({i, p})] = -1;
        queue.push_back(r.index({i, p}));
    }
    int hit = p == q ? r.index({1, p}) : -1;
    while (hit < 0 && !queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (EdgeId id : whole.incident(v)) {
            int w = whole.edge(id).other(v);
            if (parent[w] != -2)
                continue;
            parent[w] = v;
            if (r.cell(w).col == q) {
                hit = w;
                break;
            }
            queue.push_back(w);
        }
    }
    if (hit >= 0) {
        std::vector<Cell> path;
        for (int v = hit; v >= 0; v = parent[v])
            path.push_back(r.cell(v));
        std::vector<bool> on_path(r.s(), false);
        Rearrangement m = Rearrangement::identity(r.s());
        for (Cell c : path) {
            if (on_path[c.col])
                throw InvariantViolation("shortest path visits a column twice");
            on_path[c.col] = true;
            std::swap(m.row_perm[c.col][c.row], m.row_perm[c.col][1]);
        }
        st.cur = rows::rearrange(st.cur, m);
        st.acc = st.acc.then(m);
        std::vector<int> cols;
        for (int j = 0; j < r.s(); ++j)
            if (on_path[j])
                cols.push_back(j);
        st.steps.push_back("shortest path between the special columns moved to row 1 in columns " +
                           column_list(cols));
        clear_first_row(st, on_path, "(columns off the path)");
        run_block(st, all_columns(r), p);
        return finish(r, st);
    }
    // No path: the columns split into the part reachable from p and the rest.
    std::vector<bool> side_p(r.s(), false);
    for (int v = 0; v < r.vertex_count(); ++v)
        if (parent[v] != -2)
            side_p[r.cell(v).col] = true;
    std::vector<int> part_p, part_q;
    for (int j = 0; j < r.s(); ++j)
        (side_p[j] ? part_p : part_q).push_back(j);
    st.steps.push_back("no path between the special columns; columns " + column_list(part_p) + " and " +
                       column_list(part_q) + " are treated separately");
    std::vector<bool> keep(r.s(), false);
    keep[p] = keep[q] = true;
    clear_first_row(st, keep, "(columns other than the special ones)");
    run_block(st, part_p, p);
    run_block(st, part_q, q);
    return finish(r, st);
}

AmiableColoring replay(const RowGraph &r, const ConstructionTrace &trace) {
    RowGraph cur = rows::rearrange(r, trace.arrangement);
    AmiableColoring a;
    a.f.resize(cur.vertex_count());
    for (int v = 0; v < cur.vertex_count(); ++v)
        a.f[v] = kEngineF[cur.cell(v).row];
    a.g.assign(cur.edge_count(), 0);
    for (const BlockTrace &bt : trace.blocks) {
        std::vector<bool> in = block_mask(cur, bt.columns);
        std::set<int> t23(bt.t23.begin(), bt.t23.end()), t1(bt.t1.begin(), bt.t1.end()), t2(bt.t2.begin(), bt.t2.end());
        for (std::size_t e = 0; e < cur.edge_count(); ++e) {
            const auto &re = cur.edges()[e];
            if (!in[re.u.col])
                continue;
            int id = static_cast<int>(e);
            bool row2_only = re.u.row == 2 && re.v.row == 2;
            if (in_rows(re, 2, 3) && !t23.contains(id))
                a.g[e] = 2;
            else if (((in_rows(re, 1, 2) && !row2_only) || t2.contains(id)) && !t1.contains(id))
                a.g[e] = 1;
            else
                a.g[e] = 3;
        }
    }
    return rows::transfer(cur, a, trace.arrangement.inverse());
}

nlohmann::json to_json(const ConstructionTrace &trace) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const BlockTrace &bt : trace.blocks)
        blocks.push_back({{"columns", bt.columns},
                          {"core", bt.core},
                          {"t23", bt.t23},
                          {"t2", bt.t2},
                          {"t3", bt.t3},
                          {"swapped_23", bt.swapped_23},
                          {"y1", bt.y1},
                          {"t1", bt.t1}});
    return {{"arrangement", rows::to_json(trace.arrangement)},
            {"vertex_coloring", "f(v_1j)=2, f(v_2j)=3, f(v_3j)=1 on the arranged graph"},
            {"steps", trace.steps},
            {"blocks", blocks}};
}

ConstructionTrace trace_from_json(const nlohmann::json &j) {
    try {
        ConstructionTrace t;
        const auto &arr = j.at("arrangement");
        t.arrangement.column_perm = arr.at("column_perm").get<std::vector<int>>();
        for (const auto &rp : arr.at("row_perm"))
            t.arrangement.row_perm.push_back({0, rp.at(0).get<int>(), rp.at(1).get<int>(), rp.at(2).get<int>()});
        t.steps = j.at("steps").get<std::vector<std::string>>();
        for (const auto &b : j.at("blocks"))
            t.blocks.push_back({b.at("columns").get<std::vector<int>>(), b.at("core").get<int>(),
                                b.at("t23").get<std::vector<int>>(), b.at("t2").get<std::vector<int>>(),
                                b.at("t3").get<std::vector<int>>(), b.at("swapped_23").get<std::vector<int>>(),
                                b.at("y1").get<std::vector<int>>(), b.at("t1").get<std::vector<int>>()});
        return t;
    } catch (const nlohmann::json::exception &ex) {
        throw InvalidInput(std::string("malformed trace JSON: ") + ex.what());
    }
}

} // namespace kframe::construct
