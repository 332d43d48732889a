#include "lrw/graph.hpp"

#include <algorithm>
#include <string>

#include "lrw/error.hpp"
#include "lrw/random.hpp"

namespace lrw {

Graph::Graph(std::size_t n, std::span<const Edge> edges, std::vector<double> values)
    : n_(n), adj_(n * n, 0), nbrs_(n), values_(std::move(values)) {
    if (n == 0) throw ConfigError("graph needs at least one node");
    if (values_.empty()) values_.assign(n, 0.0);
    if (values_.size() != n) throw ConfigError("node value count does not match node count");
    for (auto [i, j] : edges) {
        if (i >= n || j >= n)
            throw ConfigError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range");
        if (i == j) throw ConfigError("self-loop at node " + std::to_string(i));
        auto& a = adj_[std::size_t{i} * n + j];
        if (a) throw ConfigError("duplicate edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        a = 1;
        adj_[std::size_t{j} * n + i] = 1;
        nbrs_[i].push_back(j);
        nbrs_[j].push_back(i);
        ++edge_count_;
    }
    for (auto& nb : nbrs_) std::sort(nb.begin(), nb.end());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId i = 0; i < n_; ++i)
        for (NodeId j : nbrs_[i])
            if (i < j) out.emplace_back(i, j);
    return out;
}

Graph generate_case_graph(const CaseGraphParams& p) {
    if (p.nodes == 0) throw ConfigError("graph needs at least one node");
    if (p.cases > p.nodes) throw ConfigError("more cases than nodes");
    for (double q : {p.p_case_case, p.p_case_noncase, p.p_noncase_noncase})
        if (!(q >= 0.0 && q <= 1.0)) throw ConfigError("edge probability outside [0, 1]");

    Rng rng(derive_seed(p.seed, {0x6772617068ULL}));
    std::vector<Edge> edges;
    for (NodeId i = 0; i < p.nodes; ++i) {
        for (NodeId j = i + 1; j < p.nodes; ++j) {
            const int cls = int(i < p.cases) + int(j < p.cases);
            const double q = cls == 2 ? p.p_case_case : cls == 1 ? p.p_case_noncase : p.p_noncase_noncase;
            // One draw per pair regardless of q keeps the stream aligned
            // across parameter choices.
            if (uniform01(rng) < q) edges.emplace_back(i, j);
        }
    }
    std::vector<double> y(p.nodes, 0.0);
    std::fill_n(y.begin(), p.cases, 1.0);
    return Graph(p.nodes, edges, std::move(y));
}

Graph permute(const Graph& g, std::span<const NodeId> perm) {
    const auto n = g.node_count();
    if (perm.size() != n) throw ConfigError("permutation size does not match node count");
    std::vector<Edge> edges;
    for (auto [i, j] : g.edges()) edges.emplace_back(perm[i], perm[j]);
    std::vector<double> y(n);
    for (NodeId i = 0; i < n; ++i) y[perm[i]] = g.value(i);
    return Graph(n, edges, std::move(y));
}

std::pair<double, double> expected_class_degrees(const CaseGraphParams& p) {
    const double c = double(p.cases);
    const double nc = double(p.nodes - p.cases);
    const double case_deg = (c - 1) * p.p_case_case + nc * p.p_case_noncase;
    const double noncase_deg = c * p.p_case_noncase + (nc - 1) * p.p_noncase_noncase;
    return {case_deg, noncase_deg};
}

}  // namespace lrw
