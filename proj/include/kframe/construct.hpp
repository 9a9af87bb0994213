#pragma once

#include "kframe/frame.hpp"
#include "kframe/rowgraph.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kframe::construct {

using rows::AmiableColoring;
using rows::Cell;
using rows::Color;
using rows::Rearrangement;
using rows::RowGraph;

/// One run of the t-join engine on a set of columns whose edges stay
/// inside the set. Edge sets hold edge positions of the arranged graph.
struct BlockTrace {
    std::vector<int> columns;
    /// Column whose first-row vertex anchors the designated component of R[V_1].
    int core = 0;
    std::vector<int> t23;
    std::vector<int> t2;
    std::vector<int> t3;
    /// Columns whose rows 2 and 3 were exchanged so that no edge of T*_{2,3}
    /// joins row 2 to row 3.
    std::vector<int> swapped_23;
    std::vector<int> y1;
    std::vector<int> t1;
};

/// Replayable record of a construction.
struct ConstructionTrace {
    /// Row moves applied to the input before the engine ran (column order is
    /// never changed).
    Rearrangement arrangement;
    /// Human-readable normalization steps, in order.
    std::vector<std::string> steps;
    std::vector<BlockTrace> blocks;
};

/// The engine colors the arranged graph with f(v_1j) = 2, f(v_2j) = 3,
/// f(v_3j) = 1.
struct Construction {
    /// The input with every recorded row move applied.
    RowGraph arranged;
    AmiableColoring arranged_coloring;
    /// The same coloring read back on the input graph.
    AmiableColoring coloring;
    ConstructionTrace trace;
};

/// Amiable coloring of R(G,F,alpha) for a well connected perfect coloring.
/// `kinds` gives the frame component type of every column; `witness_color`
/// is the color of H. With no K-column, column 1 anchors H.
Construction construct_amiable_main(const RowGraph &r, const std::vector<frame::Kind> &kinds, Color witness_color);

/// Requires R_C eulerian, at most one component of R[V_row] with more than
/// one vertex, and at most one non-isolated vertex in every column that
/// holds an isolated vertex of R[V_row]. Throws InvalidInput otherwise.
Construction construct_amiable_one_component(const RowGraph &r, int row);

/// construct_amiable_one_component for the first row whose subgraph R[V_row] is connected.
Construction construct_amiable_connected_row(const RowGraph &r);

/// Requires R_C eulerian and two isolated vertices in every column other
/// than p and q (0-based). Throws InvalidInput otherwise.
Construction construct_amiable_two_columns(const RowGraph &r, int p, int q);

/// True when the hypothesis of construct_amiable_one_component holds for `row`.
bool one_component_applies(const RowGraph &r, int row);
bool two_columns_apply(const RowGraph &r, int p, int q);

/// Recomputes the coloring of the input graph from the recorded sets alone.
AmiableColoring replay(const RowGraph &r, const ConstructionTrace &trace);

nlohmann::json to_json(const ConstructionTrace &trace);
ConstructionTrace trace_from_json(const nlohmann::json &j);

} // namespace kframe::construct
