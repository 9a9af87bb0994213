#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kframe {

using VertexId = int;
using EdgeId = int;
using EdgeSet = std::set<EdgeId>;
using VertexSet = std::set<VertexId>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (unknown ids, wrong degrees, bad files).
class InvalidInput : public Error {
  public:
    using Error::Error;
};

/// A property that the constructions guarantee was found violated. Raised
/// instead of continuing with a result that could not be trusted.
class InvariantViolation : public Error {
  public:
    explicit InvariantViolation(const std::string &what) : Error("invariant violation: " + what) {}
};

struct Edge {
    EdgeId id;
    VertexId a;
    VertexId b;

    bool is_loop() const { return a == b; }
    VertexId other(VertexId v) const { return v == a ? b : a; }
};

/// Undirected multigraph with stable vertex and edge identities.
///
/// Loops and parallel edges are allowed. A loop contributes 2 to the degree
/// of its vertex and appears twice in that vertex's incidence list.
class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    /// Vertices 0..n-1, edge ids 0..m-1 in the given order.
    static Multigraph from_pairs(int n, const std::vector<std::pair<VertexId, VertexId>> &pairs);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const VertexId> vertices() const { return vertices_; }
    std::span<const Edge> edges() const { return edges_; }

    bool has_vertex(VertexId v) const { return vertex_index_.contains(v); }
    bool has_edge(EdgeId e) const { return edge_index_.contains(e); }
    std::size_t vertex_index(VertexId v) const;
    std::size_t edge_index(EdgeId e) const;
    const Edge &edge(EdgeId e) const { return edges_[edge_index(e)]; }

    /// Edge ids incident with v; loops are listed twice.
    std::span<const EdgeId> incident(VertexId v) const { return incidence_[vertex_index(v)]; }
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
    bool is_cubic() const;

    /// Spanning subgraph keeping only the listed edges (ids preserved).
    Multigraph spanning_subgraph(const EdgeSet &keep) const;
    /// Subgraph induced by a vertex set (ids preserved).
    Multigraph induced_subgraph(const VertexSet &keep) const;
    /// Subgraph formed by the listed edges and their endpoints.
    Multigraph edge_subgraph(const EdgeSet &keep) const;

  private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::unordered_map<VertexId, std::size_t> vertex_index_;
    std::unordered_map<EdgeId, std::size_t> edge_index_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// Old vertex id -> new vertex id, recorded by contractions and identifications.
using VertexMap = std::map<VertexId, VertexId>;

struct Contraction {
    Multigraph graph;
    VertexMap vertex_map;
};

/// Merges the endpoints of every contracted edge. New vertex ids are 0..k-1
/// ordered by the smallest original id in each merged class; surviving edges
/// keep their ids. Loops created by the merge are dropped iff `delete_loops`.
Contraction contract_edges(const Multigraph &g, const EdgeSet &contracted, bool delete_loops);

struct Suppression {
    Multigraph base;
    /// base edge id -> edge ids of the path it replaces, in walk order.
    std::map<EdgeId, std::vector<EdgeId>> path_map;
};

/// Replaces every maximal path through 2-valent vertices by one edge. Base
/// vertices keep their ids; each base edge takes the id of the first edge
/// of its path.
Suppression suppress_degree2(const Multigraph &h);

struct Bipartition {
    VertexSet side_a;
    VertexSet side_b;
};

/// Two-coloring of every component, or nullopt if an odd closed walk
/// (including a loop) exists. The lowest id of each component goes to side_a.
std::optional<Bipartition> is_bipartite(const Multigraph &g);

/// Every degree even; connectivity not required.
bool is_eulerian(const Multigraph &g);

/// Vertex partition into connected components, each sorted, ordered by
/// smallest member.
std::vector<std::vector<VertexId>> components(const Multigraph &g);

bool is_connected(const Multigraph &g);

/// Maximal acyclic edge set, grown breadth-first from the lowest vertex id
/// of each component, taking lowest edge ids first.
EdgeSet spanning_forest(const Multigraph &g);

/// Connected with no cut vertex; a 2-vertex graph needs at least two
/// parallel edges between its vertices.
bool is_two_connected(const Multigraph &g);

/// Subdivides each edge along the recorded path lengths; inverse of
/// suppress_degree2 up to vertex naming. Fresh vertices get ids above max id.
Multigraph resubdivide(const Suppression &s);

} // namespace kframe
