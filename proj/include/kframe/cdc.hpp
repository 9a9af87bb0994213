#pragma once

#include "kframe/frame.hpp"
#include "kframe/rowgraph.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace kframe::cdc {

using kotzig::Color;

/// Edge sets indexed by color 1..3; slot 0 is unused.
using ByColor = std::array<EdgeSet, 4>;

/// Chord classes X_1, X_2, X_3: each chord goes to the smallest color that
/// differs from the colors of both of its ends.
ByColor partition_chords(const frame::Frame &f, const frame::PerfectColoring &alpha);

/// For each color i: H_i (frame edges not colored i), E_i (connecting edges
/// with g = i), X_i (chord class); J_i is their union.
struct JDecomposition {
    ByColor h;
    ByColor e;
    ByColor x;
    EdgeSet j(Color i) const;
};

/// `g` colors every connecting edge of the frame by host edge id.
JDecomposition decompose(const frame::Frame &f, const frame::PerfectColoring &alpha,
                         const std::map<EdgeId, Color> &g);

struct TwoCycleCover {
    std::vector<std::vector<EdgeId>> a;
    std::vector<std::vector<EdgeId>> b;
};

/// `cycles` is a 2-regular edge set of g; every edge of `matching` joins two
/// of its vertices, no vertex twice. Each cycle needs an even number of
/// attachment vertices. Covers the cycle edges once and the matching twice.
/// Throws InvalidInput when the shape is wrong.
TwoCycleCover two_cycle_cover_even(const Multigraph &g, const EdgeSet &cycles, const EdgeSet &matching);

/// Cycles of a 2-regular edge set, each listed as a closed walk starting at
/// its lowest vertex along the lower edge id.
std::vector<std::vector<EdgeId>> split_cycles(const Multigraph &g, const EdgeSet &edges);

inline const std::array<std::string, 6> kClassLabels{"1a", "1b", "2a", "2b", "3a", "3b"};

struct LabeledCycle {
    std::string label;
    /// Closed walk of host edge ids.
    std::vector<EdgeId> edges;
};

struct CdcCertificate {
    std::vector<LabeledCycle> cycles;
};

struct CdcReport {
    bool valid = true;
    std::vector<std::string> violations;
    /// How many listed cycles contain each host edge.
    std::map<EdgeId, int> coverage;
};

/// Checks the certificate against g from scratch.
CdcReport verify_cdc(const Multigraph &g, const CdcCertificate &cert);

/// The perfect coloring that makes f(v_ij) = i: every component is
/// recolored by the permutation its column carries.
frame::PerfectColoring fold_back(const frame::Frame &f, const frame::PerfectColoring &alpha,
                                 const rows::AmiableColoring &a);

struct CdcConstruction {
    frame::PerfectColoring alpha;
    std::map<EdgeId, Color> g;
    JDecomposition j;
    CdcCertificate certificate;
};

/// Six-class cycle double cover of the host from an amiable coloring of
/// build_row_graph(f, alpha), given by edge position in that graph.
CdcConstruction construct_6cdc(const frame::Frame &f, const frame::PerfectColoring &alpha,
                               const rows::AmiableColoring &a);

nlohmann::json to_json(const CdcCertificate &cert);
CdcCertificate certificate_from_json(const nlohmann::json &j);
nlohmann::json to_json(const CdcReport &report);

} // namespace kframe::cdc
