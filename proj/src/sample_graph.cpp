#include "lrw/sample_graph.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "lrw/error.hpp"

namespace lrw {

namespace {

[[noreturn]] void unobserved(const char* what, NodeId v) {
    throw ObservabilityError(std::string(what) + " of node " + std::to_string(v) + " has not been observed");
}

}  // namespace

SampleGraph::SampleGraph(const Graph& g, std::span<const NodeId> seed)
    : n_(g.node_count()), in_seed_(n_, 0), in_observed_(n_, 0), rows_(n_), values_(n_, 0.0) {
    for (auto v : seed) {
        if (v >= n_) throw ConfigError("seed node " + std::to_string(v) + " is not in the graph");
        in_seed_[v] = 1;
    }
    for (NodeId v = 0; v < n_; ++v) {
        if (!in_seed_[v]) continue;
        seed_.push_back(v);
        auto nb = g.neighbours(v);
        rows_[v].assign(nb.begin(), nb.end());
        in_observed_[v] = 1;
        for (auto u : nb) {
            in_observed_[u] = 1;
            if (!in_seed_[u] || v < u) observed_edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
    }
    std::sort(observed_edges_.begin(), observed_edges_.end());
    for (NodeId v = 0; v < n_; ++v)
        if (in_observed_[v]) {
            observed_nodes_.push_back(v);
            values_[v] = g.value(v);
        }
}

std::size_t SampleGraph::degree(NodeId v) const {
    if (!row_known(v)) unobserved("degree", v);
    return rows_[v].size();
}

bool SampleGraph::adjacent(NodeId u, NodeId v) const {
    const auto has = [this](NodeId a, NodeId b) { return std::binary_search(rows_[a].begin(), rows_[a].end(), b); };
    if (row_known(u)) return has(u, v);
    if (row_known(v)) return has(v, u);
    throw ObservabilityError("adjacency of nodes " + std::to_string(u) + " and " + std::to_string(v) +
                             " has not been observed");
}

std::span<const NodeId> SampleGraph::neighbours(NodeId v) const {
    if (!row_known(v)) unobserved("neighbourhood", v);
    return rows_[v];
}

double SampleGraph::value(NodeId v) const {
    if (!observed(v)) unobserved("value", v);
    return values_[v];
}

void write_sample_graph(std::ostream& out, const SampleGraph& sg) {
    const auto ids = [&out](const char* key, auto&& range) {
        out << key;
        for (auto v : range) out << ' ' << v;
        out << '\n';
    };
    out << "N " << sg.node_count() << '\n';
    ids("seed", sg.seed());
    ids("observed", sg.observed_nodes());
    std::vector<NodeId> cases;
    for (auto v : sg.observed_nodes())
        if (sg.value(v) == 1.0) cases.push_back(v);
    ids("case-nodes", cases);
    for (auto [i, j] : sg.observed_edges()) out << i << ' ' << j << '\n';
}

}  // namespace lrw
