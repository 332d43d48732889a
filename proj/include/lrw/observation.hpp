#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/motif.hpp"
#include "lrw/s3p.hpp"
#include "lrw/sample_graph.hpp"
#include "lrw/walk.hpp"

namespace lrw {

using StateSequence = std::vector<NodeId>;

/// Length q + 1 of the state window that reveals one occurrence: 1 for
/// node, edge and two-star, 2 for triangle, 3 for four-cycle and three-path.
std::size_t window_length(MotifKind kind);

/// A motif occurrence seen from a window of the walk.
struct MotifObservation {
    MotifOccurrence occurrence;
    /// Nodes in structural order: cycle order for a four-cycle, path order
    /// for a three-path, center first for a two-star, the observing
    /// window's order otherwise.
    std::vector<NodeId> structure;
    /// The actual observing sequence s_kappa (the window itself).
    StateSequence as3;
    /// Start index t of the window in the trace.
    std::size_t time = 0;
};

/// Occurrences revealed by one window under the observation procedure:
///   node        (h)        the node h
///   edge        (h)        every edge at h
///   two-star    (h)        every pair of edges at h
///   triangle    (i, j)     i ~ j: every triangle on {i, j}
///   four-cycle  (i, j, g)  i ~ j ~ g, i !~ g: every induced cycle i-j-g-h
///   three-path  (x, y, z)  x ~ y ~ z, x !~ z: every induced path
///                          x-y-z-d or a-x-y-z
/// Only rows of the window's nodes are read.
std::vector<MotifObservation> detect_in_window(const GraphView& view, MotifKind kind,
                                               std::span<const NodeId> window, std::size_t time,
                                               MotifValue values = MotifValue::product);

/// All observations over the windows t = 0 .. T - q of the trace.
std::vector<MotifObservation> detect_observations(const WalkTrace& trace, const SampleGraph& sg, MotifKind kind,
                                                  MotifValue values = MotifValue::product);

/// F_kappa: every sequence of the AS3's length that reveals the occurrence
/// minimally, sorted. Sizes: node 1, edge 2, two-star 1, triangle 6,
/// four-cycle 8, three-path 4.
std::vector<StateSequence> es3_set(const MotifObservation& obs);

/// Whether F_kappa lies inside C_s, i.e. every node of every ES3 sequence
/// has an observed row. Proportional-to-probability weights need this.
bool es3_computable(const GraphView& view, const MotifObservation& obs);

enum class WeightScheme { multiplicity, ppw };
std::string_view to_string(WeightScheme s);
WeightScheme parse_weight_scheme(std::string_view text);

struct IncidenceWeights {
    std::vector<StateSequence> sequences;  // F_kappa
    std::vector<double> weights;           // aligned with sequences, sum 1
    bool fell_back = false;                // ppw requested, multiplicity used
    /// Weight of the observing sequence.
    double weight_of(std::span<const NodeId> seq) const;
};

/// Multiplicity weights 1 / |F_kappa|, or ppw weights pi_M / sum_F pi_M.
/// A ppw request on an observation whose F_kappa is not computable throws
/// PpwInfeasibleError unless `fallback` is set, in which case multiplicity
/// weights are returned and flagged.
IncidenceWeights incidence_weights(const MotifObservation& obs, WeightScheme scheme, const S3pModel& model,
                                   bool fallback = false);

}  // namespace lrw
