#include "lrw/s3p.hpp"

#include <string>

#include "lrw/error.hpp"

namespace lrw {

std::vector<double> stationary_node(const Graph& g, const WalkConfig& cfg) {
    const double r = cfg.jump_rate;
    if (!(r > 0.0)) throw NonErgodicError("stationary law needs r > 0");
    const double n = double(g.node_count());
    const double c = 2.0 * double(g.edge_count()) + r * n;
    std::vector<double> pi(g.node_count());
    for (NodeId h = 0; h < g.node_count(); ++h) pi[h] = (double(g.degree(h)) + r) / c;
    return pi;
}

std::string_view to_string(Normalization n) {
    switch (n) {
        case Normalization::unnormalized: return "unnormalized";
        case Normalization::exact: return "exact";
        case Normalization::estimated: return "estimated";
    }
    return "?";
}

Normalization parse_normalization(std::string_view text) {
    for (auto n : {Normalization::unnormalized, Normalization::exact, Normalization::estimated})
        if (text == to_string(n)) return n;
    throw ConfigError("unknown normalization '" + std::string(text) + "'");
}

S3pModel::S3pModel(const GraphView& view, const WalkConfig& cfg, Normalization normalization, double size)
    : view_(&view), cfg_(cfg), normalization_(normalization), constant_(1.0) {
    if (normalization != Normalization::unnormalized) {
        constant_ = 2.0 * size + cfg.jump_rate * double(view.node_count());
        if (!(constant_ > 0.0)) throw ConfigError("normalizing constant 2R + rN must be positive");
    }
}

bool S3pModel::computable(std::span<const NodeId> seq) const {
    for (auto v : seq)
        if (!view_->row_known(v)) return false;
    return true;
}

Ssp S3pModel::operator()(std::span<const NodeId> seq) const {
    if (seq.empty()) throw ConfigError("empty state sequence");
    if (!computable(seq)) throw ObservabilityError("sequence probability needs rows of unvisited nodes");
    double p = (double(view_->degree(seq[0])) + cfg_.jump_rate) / constant_;
    if (seq.size() >= 2) p *= lag_free_transition_prob(*view_, cfg_, seq[0], seq[1]);
    for (std::size_t k = 2; k < seq.size(); ++k) p *= transition_prob(*view_, cfg_, seq[k - 2], seq[k - 1], seq[k]);
    if (!(p > 0.0)) throw UnreachableSequenceError("state sequence has zero probability");
    return {p, normalization_};
}

}  // namespace lrw
