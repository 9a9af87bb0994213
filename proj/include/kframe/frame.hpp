#pragma once

#include "kframe/graph.hpp"
#include "kframe/kotzig.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace kframe::frame {

using kotzig::Color;

enum class Kind { C, K };

struct FrameComponent {
    /// 1-based position in the component list (column index + 1).
    int label = 0;
    Kind kind = Kind::C;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    Multigraph subgraph;
    kotzig::ComponentClass cls;
};

/// A validated Kotzig-frame of a cubic host graph.
struct Frame {
    Multigraph host;
    EdgeSet frame_edges;
    std::vector<FrameComponent> components;
    /// Non-frame edges with both ends in one component.
    EdgeSet chords;
    /// Host vertex -> 0-based component index.
    std::map<VertexId, int> component_of;
    /// Non-fatal findings: host not 2-connected, cubic K-components.
    std::vector<std::string> warnings;

    int s() const { return static_cast<int>(components.size()); }
    int k_count() const;
    /// Frame degree 2 (every C-vertex, subdivision vertices of K-components).
    bool is_two_valent(VertexId v) const;
    /// Host edges outside the frame that are not chords.
    EdgeSet connecting_edges() const;
};

/// Builds and checks a frame. Components are ordered K first, then by
/// vertex count, then by smallest vertex id, unless `label_order` lists one
/// vertex per component in the desired order.
Frame validate_frame(const Multigraph &g, const EdgeSet &frame_edges,
                     const std::optional<std::vector<VertexId>> &label_order = std::nullopt);

/// Per-vertex and per-edge colors over a frame. 3-valent vertices of
/// K-components carry no color.
struct PerfectColoring {
    std::map<VertexId, Color> vertex_color;
    std::map<EdgeId, Color> edge_color;
};

bool is_perfect_coloring(const Frame &f, const PerfectColoring &alpha);

/// Applies a color permutation (perm[c] is the new color of c, perm[0]
/// unused) to every vertex and edge of one component.
PerfectColoring recolor_component(const Frame &f, const PerfectColoring &alpha, int component,
                                  const std::array<Color, 4> &perm);

struct ContractedFrame {
    /// Vertex ids are component labels 1..s; edge ids are host edge ids.
    Multigraph graph;
    /// Indexed by label - 1.
    std::vector<Kind> kinds;
};

ContractedFrame contract_frame(const Frame &f);

struct ColoredContraction {
    ContractedFrame contracted;
    /// Colored edges only; an edge is absent when uncolored.
    std::map<EdgeId, Color> edge_color;
};

ColoredContraction build_colored_contraction(const Frame &f, const PerfectColoring &alpha);

struct Witness {
    Color color = 1;
    /// Labels of the contracted vertices in H.
    VertexSet vertices;
    EdgeSet edges;
};

/// A monochromatic connected subgraph of the colored contraction holding all
/// K-vertices, taken as the whole color component. With at most one
/// K-vertex the test always succeeds; the color giving the largest H wins,
/// ties to the smaller color.
std::optional<Witness> well_connected_witness(const Frame &f, const PerfectColoring &alpha);

struct WellConnectedColoring {
    PerfectColoring alpha;
    Witness witness;
};

/// Searches the product of per-component perfect colorings, with the first
/// K-component fixed up to color permutation.
std::optional<WellConnectedColoring> find_well_connected_frame_coloring(const Frame &f);

struct SufficientConditions {
    bool independent_and_connected = false; // (i)
    bool adjacent_to_c_and_connected = false; // (ii)
    bool dominated_by_connected_c = false;   // (iii)

    bool any() const { return independent_and_connected || adjacent_to_c_and_connected || dominated_by_connected_c; }
};

SufficientConditions check_sufficient_conditions(const ContractedFrame &cf);

struct FrameStrategy {
    enum class Kind { TwoFactor, Exhaustive, UserSupplied };
    Kind kind = Kind::Exhaustive;
    /// Exhaustive search is skipped above this many host edges.
    int max_edges = 30;
    EdgeSet user_edges;
};

/// Visits frames until the callback returns false. Exhaustive search walks
/// the complements of all matchings (a frame has minimum degree 2, so its
/// complement is a matching), smallest matchings first.
void for_each_frame(const Multigraph &g, const FrameStrategy &strategy, const std::function<bool(const Frame &)> &visit);

std::vector<Frame> search_frames(const Multigraph &g, const FrameStrategy &strategy, std::size_t limit = SIZE_MAX);

nlohmann::json to_json(const Frame &f);
/// Reads frame_edges (and the component order, if present) and revalidates.
Frame frame_from_json(const Multigraph &g, const nlohmann::json &j);

nlohmann::json to_json(const PerfectColoring &alpha);
PerfectColoring perfect_coloring_from_json(const nlohmann::json &j);

} // namespace kframe::frame
