#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "lrw/graph.hpp"
#include "lrw/kernel.hpp"

namespace lrw {

/// Ordered pair x_t = (X_{t-1}, X_t). prev == cur is a valid state: a jump
/// can land on the current node, and walks start at (X_0, X_0).
struct PairState {
    NodeId prev = 0;
    NodeId cur = 0;
    bool operator==(const PairState&) const = default;
};

/// The lagged walk as a Markov chain on the N^2 ordered pairs. State
/// (i, h) has index i * N + h and moves only to states (h, j).
class PairStateChain {
public:
    /// Default cap on N^2 for the matrix-free chain.
    static constexpr std::size_t default_max_states = 4'000'000;
    /// Default cap on N^2 for the explicit sparse matrix (about N^3 entries).
    static constexpr std::size_t default_max_explicit_states = 10'000;

    /// Throws NonErgodicError unless r > 0 and StateSpaceTooLarge when N^2
    /// exceeds max_states.
    PairStateChain(Graph g, WalkConfig cfg, std::size_t max_states = default_max_states);

    const Graph& graph() const { return graph_; }
    const WalkConfig& config() const { return cfg_; }
    std::size_t node_count() const { return graph_.node_count(); }
    std::size_t state_count() const { return node_count() * node_count(); }

    std::size_t index(PairState x) const { return std::size_t{x.prev} * node_count() + x.cur; }
    PairState state(std::size_t index) const {
        return {NodeId(index / node_count()), NodeId(index % node_count())};
    }

    /// Pr(x_{t+1} = to | x_t = from); zero unless to.prev == from.cur.
    double transition(PairState from, PairState to) const;

    /// One forward step of a distribution over pairs, without forming the
    /// matrix. O(N^2 + R).
    std::vector<double> propagate(std::span<const double> dist) const;

    /// Explicit row-stochastic transition matrix. Throws StateSpaceTooLarge
    /// above max_explicit_states.
    Eigen::SparseMatrix<double, Eigen::RowMajor> matrix(
        std::size_t max_explicit_states = default_max_explicit_states) const;

private:
    Graph graph_;
    WalkConfig cfg_;
};

inline PairStateChain build_pair_chain(const Graph& g, const WalkConfig& cfg,
                                       std::size_t max_states = PairStateChain::default_max_states) {
    return PairStateChain(g, cfg, max_states);
}

enum class StationaryMethod { automatic, direct, power };

struct StationaryOptions {
    StationaryMethod method = StationaryMethod::automatic;
    /// Power iteration stops when successive iterates differ by less than
    /// this in max-norm.
    double tolerance = 1e-12;
    long max_iterations = 1'000'000;
    /// automatic uses the direct solve up to this many nodes.
    std::size_t direct_max_nodes = 40;
};

struct PairDistribution {
    std::vector<double> pair;  // indexed like PairStateChain::index
    std::vector<double> node;  // marginal over the first coordinate
    StationaryMethod method = StationaryMethod::direct;
    long iterations = 0;
    double residual = 0.0;     // max |pi P - pi|
};

/// Unique stationary distribution of an irreducible pair chain, by sparse
/// LU on the balance equations or by power iteration. Power iteration
/// throws NonConvergenceError when the iteration cap is hit.
PairDistribution stationary_pair(const PairStateChain& chain, const StationaryOptions& opts = {});

/// Sum over the first coordinate: node[h] = sum_i pair[(i, h)].
std::vector<double> node_marginal(const PairStateChain& chain, std::span<const double> pair);

/// Distribution of X_t when X_0 ~ init. The walk starts in pair state
/// (X_0, X_0), so its first step uses the lag-free kernel.
std::vector<double> marginal_at_t(const PairStateChain& chain, std::span<const double> init, std::size_t t);

/// Per-node residual of the mixed balance equation
///   pi_h = sum_{i ~ h} pi_(i,h) + sum_{i !~ h} pi_i r / ((d_i + r) N).
std::vector<double> mixed_equation_residual(const PairStateChain& chain, const PairDistribution& pi);

/// Exact equilibrium probability of observing `seq` as consecutive states
/// mid-walk: pi_(s0,s1) times the lagged kernel for each later step.
double exact_sequence_probability(const PairStateChain& chain, const PairDistribution& pi,
                                  std::span<const NodeId> seq);

/// Total variation distance between two node distributions.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace lrw
