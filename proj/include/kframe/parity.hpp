#pragma once

#include "kframe/graph.hpp"
#include "kframe/rowgraph.hpp"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace kframe::parity {

enum class Tone { Red, Blue };

/// Red/blue coloring of every edge of a multigraph.
using TwoColoring = std::map<EdgeId, Tone>;
/// Vertices to switch, in order; only the parity of each multiplicity matters.
using SwitchSequence = std::vector<VertexId>;

/// Flips every non-loop edge at v. Loops keep their color.
TwoColoring apply_switch(const Multigraph &g, const TwoColoring &c, VertexId v);
TwoColoring apply_switches(const Multigraph &g, const TwoColoring &c, const SwitchSequence &seq);

/// A switch set turning every edge blue, or nullopt. Blue edges are
/// contracted with loops kept; the result must be bipartite, and the side
/// not holding the lowest vertex of each component is switched.
std::optional<SwitchSequence> switchable_to_blue(const Multigraph &g, const TwoColoring &c);

/// Columns (0-based) whose two rows must be exchanged so that no edge joins
/// the two rows. Requires R_C to be a forest.
std::set<int> resolve_two_row(const rows::RowGraph &r2);

/// Forest in which exactly the vertices of t have odd degree. Built on the
/// breadth-first spanning forest by pushing parity from the leaves to the
/// lowest-id root. Throws if some component holds an odd number of t.
EdgeSet acyclic_t_join(const Multigraph &g, const VertexSet &t);

} // namespace kframe::parity
