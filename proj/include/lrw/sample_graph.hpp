#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/walk.hpp"

namespace lrw {

/// What a walk has seen: the full adjacency row of every visited node and
/// nothing else. Built by copying those rows, so the original graph is not
/// reachable through it. Queries outside s x U or U x s throw
/// ObservabilityError.
class SampleGraph final : public GraphView {
public:
    SampleGraph(const Graph& g, std::span<const NodeId> seed);

    std::size_t node_count() const override { return n_; }
    std::size_t degree(NodeId v) const override;
    bool adjacent(NodeId u, NodeId v) const override;
    std::span<const NodeId> neighbours(NodeId v) const override;
    /// Node values are observed on U_s = s + Inc(A_s).
    double value(NodeId v) const override;
    bool row_known(NodeId v) const override { return v < n_ && in_seed_[v]; }

    bool in_seed(NodeId v) const { return row_known(v); }
    bool observed(NodeId v) const { return v < n_ && in_observed_[v]; }

    /// s, sorted.
    std::span<const NodeId> seed() const { return seed_; }
    /// U_s, sorted.
    std::span<const NodeId> observed_nodes() const { return observed_nodes_; }
    /// A_s as (i, j) with i < j, sorted.
    std::span<const Edge> observed_edges() const { return observed_edges_; }

private:
    std::size_t n_ = 0;
    std::vector<char> in_seed_;
    std::vector<char> in_observed_;
    std::vector<std::vector<NodeId>> rows_;
    std::vector<double> values_;
    std::vector<NodeId> seed_;
    std::vector<NodeId> observed_nodes_;
    std::vector<Edge> observed_edges_;
};

inline SampleGraph build_sample_graph(const Graph& g, const WalkTrace& trace) {
    return SampleGraph(g, trace.seed_sample);
}

// Sample-graph export:
//
//   N <n>
//   seed <ids of s>
//   observed <ids of U_s>
//   case-nodes <ids in U_s with y = 1>
//   <i> <j>        one line per edge of A_s
void write_sample_graph(std::ostream& out, const SampleGraph& sg);

}  // namespace lrw
