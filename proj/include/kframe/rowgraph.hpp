#pragma once

#include "kframe/frame.hpp"
#include "kframe/graph.hpp"

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <vector>

#include <json.hpp>

namespace kframe::rows {

using kotzig::Color;

/// A vertex v_{ij} of a row graph: `row` is i (1-based), `col` is j - 1.
struct Cell {
    int row = 1;
    int col = 0;
    auto operator<=>(const Cell &) const = default;
};

struct RowEdge {
    Cell u;
    Cell v;
    /// Host edge id when built from a frame.
    std::optional<EdgeId> origin;
};

/// A 2-row or 3-row graph on `rows * s` vertices whose columns are
/// independent sets. Edges are addressed by their position in `edges()`.
class RowGraph {
  public:
    RowGraph() = default;
    RowGraph(int rows, int s, std::vector<RowEdge> edges);

    int rows() const { return rows_; }
    int s() const { return s_; }
    const std::vector<RowEdge> &edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    int vertex_count() const { return rows_ * s_; }

    /// (row - 1) * s + col.
    int index(Cell c) const { return (c.row - 1) * s_ + c.col; }
    Cell cell(int index) const { return {index / s_ + 1, index % s_}; }
    bool contains(Cell c) const { return c.row >= 1 && c.row <= rows_ && c.col >= 0 && c.col < s_; }

    int degree(Cell c) const { return degree_[index(c)]; }
    /// Edge positions incident with c.
    const std::vector<int> &incident(Cell c) const { return incidence_[index(c)]; }

    /// The whole graph with vertex ids index(cell) and edge ids = positions.
    Multigraph as_multigraph() const;
    /// The row subgraph R[V_i] on vertex ids col, edge ids = positions.
    Multigraph row_graph(int row) const;
    bool is_row_edge(int e, int row) const { return edges_[e].u.row == row && edges_[e].v.row == row; }

  private:
    int rows_ = 3;
    int s_ = 0;
    std::vector<RowEdge> edges_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> incidence_;
};

/// R(G,F,alpha): 2-valent vertices of component j with color i become v_{ij};
/// every edge outside the frame that is not a chord becomes an edge of R.
RowGraph build_row_graph(const frame::Frame &f, const frame::PerfectColoring &alpha);

/// R_C: each column becomes one vertex (id = col); edge ids are positions.
Multigraph row_contract(const RowGraph &r);

/// Same vertex pairs with the same multiplicities (origins ignored).
bool identical(const RowGraph &a, const RowGraph &b);

/// column_perm[j] is the new column of old column j; row_perm[j][i] is the
/// new row of v_{ij} (index 0 unused). Edge positions are kept.
struct Rearrangement {
    std::vector<int> column_perm;
    std::vector<std::array<int, 4>> row_perm;

    static Rearrangement identity(int s);
    Cell apply(Cell c) const;
    /// First this, then `next`.
    Rearrangement then(const Rearrangement &next) const;
    Rearrangement inverse() const;
};

RowGraph rearrange(const RowGraph &r, const Rearrangement &p);

struct AmiableColoring {
    /// Indexed by RowGraph::index.
    std::vector<Color> f;
    /// Indexed by edge position.
    std::vector<Color> g;

    Color at(const RowGraph &r, Cell c) const { return f[r.index(c)]; }
};

/// Checks conditions (i)-(iii) on a 3-row graph literally.
bool is_amiable(const RowGraph &r, const AmiableColoring &a);

/// Moves a coloring of r onto rearrange(r, p).
AmiableColoring transfer(const RowGraph &r, const AmiableColoring &a, const Rearrangement &p);

/// The vertex coloring f(v_{ij}) = i.
std::vector<Color> identity_vertex_coloring(const RowGraph &r);

struct OracleLimits {
    int max_edges = 24;
    int max_columns = 6;
    /// Skips the size guard.
    bool force = false;
};

/// Exhaustive search for an edge coloring g making (f, g) amiable.
std::optional<std::vector<Color>> extend_to_amiable(const RowGraph &r, const std::vector<Color> &f,
                                                   const OracleLimits &limits = {});

/// Exhaustive search over vertex colorings (column 1 fixed up to the global
/// color permutation) and their extensions.
std::optional<AmiableColoring> brute_force_amiable(const RowGraph &r, const OracleLimits &limits = {});

/// Visits every row graph with `rows` rows, s columns and at most
/// `max_edges` edges, one per orbit of the column permutations (and of the
/// per-column row permutations when `full_rearrangement`).
void for_each_row_graph(int rows, int s, int max_edges, bool full_rearrangement,
                        const std::function<void(const RowGraph &)> &visit);

/// {"rows": 3, "s": s, "edges": [[i1, j1, i2, j2, origin?], ...]} with 1-based
/// rows and columns.
nlohmann::json to_json(const RowGraph &r);
RowGraph row_graph_from_json(const nlohmann::json &j);

/// {"f": [[i, j, color], ...], "g": [color, ...]}.
nlohmann::json to_json(const RowGraph &r, const AmiableColoring &a);
AmiableColoring amiable_coloring_from_json(const RowGraph &r, const nlohmann::json &j);

nlohmann::json to_json(const Rearrangement &p);

} // namespace kframe::rows
