#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/kernel.hpp"
#include "lrw/random.hpp"

namespace lrw {

/// Realized states X_0..X_T of one walk.
struct WalkTrace {
    std::vector<NodeId> states;
    WalkConfig config;
    /// Distinct visited nodes, sorted.
    std::vector<NodeId> seed_sample;
    /// |seed_sample| / N.
    double traverse = 0.0;
};

/// Draws X_0 per cfg.init, optionally advances `burn_in` unrecorded steps,
/// then records T further steps. With stationary init X_0 ~ (d_h + r) / (2R + rN)
/// and no burn-in is needed.
WalkTrace run_walk(const Graph& g, const WalkConfig& cfg, Rng& rng, std::size_t burn_in = 0);

/// Draws a node from a discrete distribution by inverse CDF.
NodeId sample_node(std::span<const double> cumulative, Rng& rng);

/// Build trace bookkeeping (seed sample, traverse) from a state list.
WalkTrace make_trace(std::vector<NodeId> states, const WalkConfig& cfg, std::size_t node_count);

/// CSV with header "t,state".
void write_trace_csv(std::ostream& out, const WalkTrace& trace);

}  // namespace lrw
