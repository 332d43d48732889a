#include "lrw/walk.hpp"

#include <algorithm>
#include <ostream>

#include "lrw/error.hpp"

namespace lrw {

NodeId sample_node(std::span<const double> cumulative, Rng& rng) {
    const double u = uniform01(rng) * cumulative.back();
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    return NodeId(it - cumulative.begin());
}

namespace {

NodeId draw_start(const Graph& g, const WalkConfig& cfg, Rng& rng) {
    switch (cfg.init.kind) {
        case InitMode::Kind::fixed: return cfg.init.node;
        case InitMode::Kind::uniform: return NodeId(uniform_index(rng, g.node_count()));
        case InitMode::Kind::stationary: {
            // Unnormalized weights d_h + r; the constant does not matter.
            std::vector<double> cum(g.node_count());
            double acc = 0.0;
            for (NodeId h = 0; h < g.node_count(); ++h) cum[h] = acc += double(g.degree(h)) + cfg.jump_rate;
            if (!(acc > 0.0)) throw NonErgodicError("stationary start needs r > 0 or at least one edge");
            return sample_node(cum, rng);
        }
    }
    return 0;
}

}  // namespace

WalkTrace make_trace(std::vector<NodeId> states, const WalkConfig& cfg, std::size_t node_count) {
    WalkTrace trace;
    trace.config = cfg;
    trace.seed_sample = states;
    std::sort(trace.seed_sample.begin(), trace.seed_sample.end());
    trace.seed_sample.erase(std::unique(trace.seed_sample.begin(), trace.seed_sample.end()),
                            trace.seed_sample.end());
    trace.traverse = double(trace.seed_sample.size()) / double(node_count);
    trace.states = std::move(states);
    return trace;
}

WalkTrace run_walk(const Graph& g, const WalkConfig& cfg, Rng& rng, std::size_t burn_in) {
    validate(cfg, g.node_count());
    NodeId prev = draw_start(g, cfg, rng);
    NodeId cur = prev;
    for (std::size_t k = 0; k < burn_in; ++k) {
        NodeId next = step(g, cfg, prev, cur, rng);
        prev = cur;
        cur = next;
    }
    std::vector<NodeId> states;
    states.reserve(cfg.walk_length + 1);
    states.push_back(cur);
    for (std::size_t t = 0; t < cfg.walk_length; ++t) {
        NodeId next = step(g, cfg, prev, cur, rng);
        prev = cur;
        cur = next;
        states.push_back(cur);
    }
    return make_trace(std::move(states), cfg, g.node_count());
}

void write_trace_csv(std::ostream& out, const WalkTrace& trace) {
    out << "t,state\n";
    for (std::size_t t = 0; t < trace.states.size(); ++t) out << t << ',' << trace.states[t] << '\n';
}

}  // namespace lrw
