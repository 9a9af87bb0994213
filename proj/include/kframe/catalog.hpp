#pragma once

#include "kframe/graph.hpp"

#include <string>
#include <vector>

namespace kframe::catalog {

/// Two vertices joined by three parallel edges.
Multigraph theta();
Multigraph k4();
Multigraph k33();
/// Triangular prism (two triangles joined by a perfect matching).
Multigraph prism();
/// 3-cube Q3; vertex ids are bit strings, edge ids grouped by dimension.
Multigraph cube();
Multigraph petersen();

/// Looks up one of the graphs above by name ("theta", "k4", ...).
Multigraph by_name(const std::string &name);

/// True for simple graphs (vertex ids 0..n-1) that are isomorphic.
bool isomorphic(const Multigraph &a, const Multigraph &b);

/// All connected simple cubic graphs on n vertices, pairwise non-isomorphic,
/// with vertex ids 0..n-1. Practical for n <= 12.
std::vector<Multigraph> connected_cubic_graphs(int n);

} // namespace kframe::catalog
