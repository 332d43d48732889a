#include "lrw/kernel.hpp"

#include <algorithm>
#include <charconv>

#include "lrw/error.hpp"

namespace lrw {

InitMode parse_init_mode(std::string_view text) {
    if (text == "stationary") return InitMode::stationary();
    if (text == "uniform") return InitMode::uniform();
    if (text.starts_with("fixed:")) {
        auto digits = text.substr(6);
        unsigned long v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty())
            return InitMode::fixed(NodeId(v));
    }
    throw ConfigError("unknown init mode '" + std::string(text) + "'");
}

std::string to_string(const InitMode& init) {
    switch (init.kind) {
        case InitMode::Kind::stationary: return "stationary";
        case InitMode::Kind::uniform: return "uniform";
        case InitMode::Kind::fixed: return "fixed:" + std::to_string(init.node);
    }
    return "?";
}

void validate(const WalkConfig& cfg, std::size_t node_count) {
    if (!(cfg.jump_rate >= 0.0)) throw ConfigError("jump rate r must be >= 0");
    if (!(cfg.backtrack_weight >= 0.0 && cfg.backtrack_weight <= 1.0))
        throw ConfigError("backtracking weight w must lie in [0, 1]");
    if (cfg.init.kind == InitMode::Kind::fixed && cfg.init.node >= node_count)
        throw ConfigError("fixed start node " + std::to_string(cfg.init.node) + " is not in the graph");
}

double transition_prob(const GraphView& g, const WalkConfig& cfg, NodeId prev, NodeId cur, NodeId next) {
    const double n = double(g.node_count());
    const double r = cfg.jump_rate;
    const double d = double(g.degree(cur));
    if (d == 0.0) {
        if (r <= 0.0) throw NonErgodicError("isolated node " + std::to_string(cur) + " with r = 0 is a sink");
        return 1.0 / n;
    }
    const double jump = r / (d + r) / n;
    const double a_next = (next != cur && g.adjacent(cur, next)) ? 1.0 : 0.0;
    if (d == 1.0) return jump + a_next / (d + r);

    const double a_prev = (prev != cur && g.adjacent(prev, cur)) ? 1.0 : 0.0;
    const double w = cfg.backtrack_weight;
    if (next == prev) return jump + w * a_next / (d + r);
    return jump + (d - w * a_prev) / (d + r) * a_next / (d - a_prev);
}

NodeId step(const Graph& g, const WalkConfig& cfg, NodeId prev, NodeId cur, Rng& rng) {
    const double r = cfg.jump_rate;
    const auto nb = g.neighbours(cur);
    const double d = double(nb.size());
    if (nb.empty() && r <= 0.0)
        throw NonErgodicError("isolated node " + std::to_string(cur) + " with r = 0 is a sink");

    if (uniform01(rng) * (d + r) < r) return NodeId(uniform_index(rng, g.node_count()));
    if (nb.size() == 1) return nb[0];

    if (prev == cur || !g.adjacent(prev, cur)) return nb[uniform_index(rng, nb.size())];
    if (uniform01(rng) * d < cfg.backtrack_weight) return prev;
    // Uniform over the d - 1 neighbours other than prev.
    const auto skip = std::size_t(std::lower_bound(nb.begin(), nb.end(), prev) - nb.begin());
    auto k = uniform_index(rng, nb.size() - 1);
    return nb[k >= skip ? k + 1 : k];
}

}  // namespace lrw
