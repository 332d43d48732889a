#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "lrw/graph.hpp"
#include "lrw/random.hpp"

namespace lrw {

/// How X_0 is drawn.
struct InitMode {
    enum class Kind { stationary, uniform, fixed };
    Kind kind = Kind::stationary;
    NodeId node = 0;  // used by fixed

    static InitMode stationary() { return {Kind::stationary, 0}; }
    static InitMode uniform() { return {Kind::uniform, 0}; }
    static InitMode fixed(NodeId v) { return {Kind::fixed, v}; }

    bool operator==(const InitMode&) const = default;
};

/// "stationary", "uniform" or "fixed:<id>".
InitMode parse_init_mode(std::string_view text);
std::string to_string(const InitMode& init);

/// Lagged random walk parameters. r = 0 is accepted for evaluating the
/// kernel but every chain or stationary computation requires r > 0.
struct WalkConfig {
    double jump_rate = 1.0;         // r >= 0
    double backtrack_weight = 1.0;  // w in [0, 1]
    std::size_t walk_length = 1;    // T
    InitMode init = InitMode::stationary();
};

/// Throws ConfigError for r < 0, w outside [0, 1], or a fixed start node
/// outside the graph.
void validate(const WalkConfig& cfg, std::size_t node_count);

/// Pr(X_{t+1} = next | X_t = cur, X_{t-1} = prev).
///
/// The walk jumps to a uniformly chosen node (cur included) with probability
/// r / (d + r), otherwise moves to a neighbour. At a node of degree > 1 it
/// backtracks to an adjacent prev with probability w / (d + r) and spreads
/// the remaining move mass evenly over the other neighbours. A prev that is
/// not adjacent to cur (after a jump, or prev == cur at the start of a walk)
/// gives the lag-free kernel (r/N + a_{cur,next}) / (d + r).
///
/// An isolated node with r > 0 jumps with probability 1; with r = 0 it is a
/// sink and NonErgodicError is thrown.
double transition_prob(const GraphView& g, const WalkConfig& cfg, NodeId prev, NodeId cur, NodeId next);

/// Kernel without lag information, used for a walk's first step and the
/// first transition of a sequence probability.
inline double lag_free_transition_prob(const GraphView& g, const WalkConfig& cfg, NodeId cur, NodeId next) {
    return transition_prob(g, cfg, cur, cur, next);
}

/// Draws X_{t+1} given (X_{t-1}, X_t) = (prev, cur): a jump-or-move coin,
/// then a uniform choice within the selected group.
NodeId step(const Graph& g, const WalkConfig& cfg, NodeId prev, NodeId cur, Rng& rng);

}  // namespace lrw
