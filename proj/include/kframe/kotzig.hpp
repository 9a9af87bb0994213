#pragma once

#include "kframe/graph.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace kframe::kotzig {

/// Colors are 1, 2, 3.
using Color = int;
using EdgeColoring3 = std::map<EdgeId, Color>;

/// Proper 3-edge-coloring of a cubic multigraph in which every union of two
/// color classes is a single hamiltonian cycle.
bool is_kotzig_coloring(const Multigraph &k, const EdgeColoring3 &c);

/// Visits Kotzig-colorings until the callback returns false. With
/// `up_to_permutation` only one coloring per orbit of the 6 color
/// permutations is produced (the three edges at the lowest vertex get 1,2,3).
void for_each_kotzig_coloring(const Multigraph &k, bool up_to_permutation,
                              const std::function<bool(const EdgeColoring3 &)> &visit);

std::optional<EdgeColoring3> find_kotzig_coloring(const Multigraph &k);

enum class ComponentKind { Cycle, KotzigSubdivision, Neither };

struct ComponentClass {
    ComponentKind kind = ComponentKind::Neither;
    /// Present for KotzigSubdivision: base cubic graph and path map.
    std::optional<Suppression> subdivision;
    /// A Kotzig-coloring of the base (KotzigSubdivision only).
    EdgeColoring3 witness;

    /// A K-component without 2-valent vertices.
    bool is_cubic() const;
};

/// A cubic graph counts as its own subdivision with every path of length 1.
ComponentClass classify_component(const Multigraph &h);

/// Vertex and edge colors for one frame component. 3-valent vertices of a
/// K-component are left out of `vertex_color`.
struct ComponentColoring {
    std::map<VertexId, Color> vertex_color;
    std::map<EdgeId, Color> edge_color;
};

/// Cycle: the three monochromatic colorings. KotzigSubdivision: every
/// Kotzig-coloring of the base lifted along the path map.
std::vector<ComponentColoring> enumerate_perfect_colorings(const Multigraph &h, const ComponentClass &cls,
                                                           bool up_to_permutation = false);

/// Lifts one base coloring along the path map.
ComponentColoring lift_coloring(const Multigraph &h, const Suppression &sub, const EdgeColoring3 &base);

/// Checks the perfect-coloring conditions on a single component, reading
/// colors from the supplied maps (which may cover more than h).
bool is_perfect_component_coloring(const Multigraph &h, const ComponentClass &cls,
                                   const std::map<VertexId, Color> &vertex_color,
                                   const std::map<EdgeId, Color> &edge_color);

} // namespace kframe::kotzig
