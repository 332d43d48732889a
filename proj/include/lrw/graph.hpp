#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace lrw {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Read access to (part of) a simple undirected graph. The full Graph
/// answers everything; a SampleGraph answers only what the walk observed.
class GraphView {
public:
    virtual ~GraphView() = default;

    virtual std::size_t node_count() const = 0;
    virtual std::size_t degree(NodeId v) const = 0;
    virtual bool adjacent(NodeId u, NodeId v) const = 0;
    /// Sorted neighbour list.
    virtual std::span<const NodeId> neighbours(NodeId v) const = 0;
    virtual double value(NodeId v) const = 0;
    /// Whether degree(v) and v's full adjacency row are available.
    virtual bool row_known(NodeId v) const = 0;
};

/// Immutable simple undirected graph with a real value y_i per node.
class Graph final : public GraphView {
public:
    Graph() = default;
    /// Throws ConfigError on self-loops, duplicate edges, out-of-range ids or
    /// a value vector whose size is not n (an empty value vector means all 0).
    Graph(std::size_t n, std::span<const Edge> edges, std::vector<double> values = {});

    std::size_t node_count() const override { return n_; }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t degree(NodeId v) const override { return nbrs_[v].size(); }
    bool adjacent(NodeId u, NodeId v) const override { return adj_[std::size_t{u} * n_ + v] != 0; }
    std::span<const NodeId> neighbours(NodeId v) const override { return nbrs_[v]; }
    double value(NodeId v) const override { return values_[v]; }
    bool row_known(NodeId) const override { return true; }

    std::span<const double> values() const { return values_; }
    /// Edges as (i, j) with i < j, lexicographically sorted.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_ && a.values_ == b.values_;
    }

private:
    std::size_t n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<std::vector<NodeId>> nbrs_;
    std::vector<double> values_;
};

/// Parameters of the two-class random graph. Node i is a case (y = 1) when
/// i < cases. Each unordered pair carries an edge independently with
/// probability p_case_case, p_case_noncase or p_noncase_noncase according
/// to y_i + y_j = 2, 1, 0.
///
/// The defaults reproduce the mild core-periphery study graph: expected
/// case degree 19 * 0.5 + 80 * 0.05 = 13.5, noncase degree
/// 20 * 0.05 + 79 * 0.0392 = 4.10, about 299 edges and 142 all-case
/// triangles. Seed 29 gives R = 299 with 169 triangles, 139 of them
/// all-case.
struct CaseGraphParams {
    std::size_t nodes = 100;
    std::size_t cases = 20;
    double p_case_case = 0.5;
    double p_case_noncase = 0.05;
    double p_noncase_noncase = 0.0392;
    std::uint64_t seed = 29;
};

Graph generate_case_graph(const CaseGraphParams& params);

/// Graph with node i relabelled to perm[i]; values move with their nodes.
Graph permute(const Graph& g, std::span<const NodeId> perm);

/// Expected degree of a case and of a noncase node under the parameters.
std::pair<double, double> expected_class_degrees(const CaseGraphParams& params);

}  // namespace lrw
