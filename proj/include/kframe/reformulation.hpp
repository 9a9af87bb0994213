#pragma once

#include "kframe/rowgraph.hpp"

#include <optional>
#include <vector>

namespace kframe::reform {

using rows::AmiableColoring;
using rows::RowGraph;

enum class ParityMode { Standard, Symmetric };

/// How |N(v) ∩ V_i| is counted when parallel edges exist.
enum class NeighborCount { EdgeMultiplicity, DistinctNeighbors };

/// Black/white vertex coloring indexed by RowGraph::index; true is black.
using ParityColoring = std::vector<bool>;

/// Literal evaluation of the parity-coloring conditions of the chosen mode.
bool is_parity_coloring(const RowGraph &r, const ParityColoring &phi, ParityMode mode,
                        NeighborCount count = NeighborCount::EdgeMultiplicity);

/// Both require an amiable coloring with f(v_ij) = i.
ParityColoring amiable_to_parity(const RowGraph &r, const AmiableColoring &a);
ParityColoring amiable_to_symmetric(const RowGraph &r, const AmiableColoring &a);

/// Edge colorings extending f(v_ij) = i, built from t-joins of the black
/// vertices in each row. Require R_C eulerian and a valid phi.
AmiableColoring parity_to_amiable(const RowGraph &r, const ParityColoring &phi);
AmiableColoring symmetric_to_amiable(const RowGraph &r, const ParityColoring &phi);

/// Tries all 2^{3s} colorings; refuses s > max_columns.
std::optional<ParityColoring> has_parity_coloring_bruteforce(const RowGraph &r, ParityMode mode, int max_columns = 8,
                                                             NeighborCount count = NeighborCount::EdgeMultiplicity);

struct Normalized {
    RowGraph r;
    AmiableColoring a;
    rows::Rearrangement p;
};

/// Rearranges every column so that the coloring reads f(v_ij) = i.
Normalized normalize_identity_f(const RowGraph &r, const AmiableColoring &a);

} // namespace kframe::reform
