#include "lrw/pair_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/SparseLU>

#include "lrw/error.hpp"

namespace lrw {

PairStateChain::PairStateChain(Graph g, WalkConfig cfg, std::size_t max_states)
    : graph_(std::move(g)), cfg_(cfg) {
    validate(cfg_, graph_.node_count());
    if (!(cfg_.jump_rate > 0.0)) throw NonErgodicError("pair chain needs r > 0 to be irreducible");
    if (state_count() > max_states)
        throw StateSpaceTooLarge("pair chain with " + std::to_string(state_count()) +
                                 " states exceeds the cap of " + std::to_string(max_states));
}

double PairStateChain::transition(PairState from, PairState to) const {
    if (to.prev != from.cur) return 0.0;
    return transition_prob(graph_, cfg_, from.prev, from.cur, to.cur);
}

std::vector<double> PairStateChain::propagate(std::span<const double> dist) const {
    const std::size_t n = node_count();
    const double r = cfg_.jump_rate;
    const double w = cfg_.backtrack_weight;
    std::vector<double> next(state_count(), 0.0);
    for (NodeId h = 0; h < n; ++h) {
        double mass = 0.0;
        for (std::size_t i = 0; i < n; ++i) mass += dist[i * n + h];
        double* row = next.data() + std::size_t{h} * n;
        const auto nb = graph_.neighbours(h);
        const double d = double(nb.size());
        const double jump = mass * r / (d + r) / double(n);
        for (std::size_t j = 0; j < n; ++j) row[j] += jump;
        if (nb.empty()) continue;
        if (nb.size() == 1) {
            row[nb[0]] += mass / (d + r);
            continue;
        }
        double adj_mass = 0.0;
        for (NodeId i : nb) adj_mass += dist[std::size_t{i} * n + h];
        const double free_mass = mass - adj_mass;  // arrived at h by a jump
        for (NodeId j : nb) {
            const double back = dist[std::size_t{j} * n + h];
            row[j] += free_mass / (d + r) + back * w / (d + r) +
                      (adj_mass - back) * (d - w) / ((d + r) * (d - 1.0));
        }
    }
    return next;
}

Eigen::SparseMatrix<double, Eigen::RowMajor> PairStateChain::matrix(std::size_t max_explicit_states) const {
    if (state_count() > max_explicit_states)
        throw StateSpaceTooLarge("explicit pair-chain matrix with " + std::to_string(state_count()) +
                                 " states exceeds the cap of " + std::to_string(max_explicit_states));
    const std::size_t n = node_count();
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(state_count() * n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId h = 0; h < n; ++h)
            for (NodeId j = 0; j < n; ++j) {
                const double p = transition_prob(graph_, cfg_, i, h, j);
                if (p != 0.0) entries.emplace_back(int(index({i, h})), int(index({h, j})), p);
            }
    const auto size = static_cast<Eigen::Index>(state_count());
    Eigen::SparseMatrix<double, Eigen::RowMajor> m(size, size);
    m.setFromTriplets(entries.begin(), entries.end());
    return m;
}

namespace {

double balance_residual(const PairStateChain& chain, std::span<const double> pi) {
    auto next = chain.propagate(pi);
    double worst = 0.0;
    for (std::size_t k = 0; k < next.size(); ++k) worst = std::max(worst, std::abs(next[k] - pi[k]));
    return worst;
}

std::vector<double> solve_direct(const PairStateChain& chain) {
    // pi (P - I) = 0 with the last balance equation swapped for sum(pi) = 1.
    const auto p = chain.matrix(std::max(chain.state_count(), PairStateChain::default_max_explicit_states));
    const int s = int(chain.state_count());
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(std::size_t(p.nonZeros()) + 2 * std::size_t(s));
    for (int row = 0; row < p.outerSize(); ++row)
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(p, row); it; ++it)
            if (it.col() != s - 1) entries.emplace_back(int(it.col()), row, it.value());
    for (int k = 0; k < s - 1; ++k) entries.emplace_back(k, k, -1.0);
    for (int k = 0; k < s; ++k) entries.emplace_back(s - 1, k, 1.0);
    Eigen::SparseMatrix<double> a(s, s);
    a.setFromTriplets(entries.begin(), entries.end());
    a.makeCompressed();

    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(a);
    if (lu.info() != Eigen::Success) throw Error("sparse LU factorization of the pair chain failed");
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(s);
    rhs[s - 1] = 1.0;
    Eigen::VectorXd x = lu.solve(rhs);
    if (lu.info() != Eigen::Success) throw Error("sparse LU solve of the pair chain failed");
    return {x.data(), x.data() + s};
}

std::vector<double> solve_power(const PairStateChain& chain, const StationaryOptions& opts, long& iterations) {
    std::vector<double> x(chain.state_count(), 1.0 / double(chain.state_count()));
    double delta = 0.0;
    for (iterations = 1; iterations <= opts.max_iterations; ++iterations) {
        auto next = chain.propagate(x);
        const double total = std::accumulate(next.begin(), next.end(), 0.0);
        delta = 0.0;
        for (std::size_t k = 0; k < next.size(); ++k) {
            next[k] /= total;
            delta = std::max(delta, std::abs(next[k] - x[k]));
        }
        x = std::move(next);
        if (delta < opts.tolerance) return x;
    }
    throw NonConvergenceError("power iteration did not converge: step " + std::to_string(delta) + " after " +
                                  std::to_string(opts.max_iterations) + " iterations",
                              delta, opts.max_iterations);
}

}  // namespace

PairDistribution stationary_pair(const PairStateChain& chain, const StationaryOptions& opts) {
    PairDistribution out;
    auto method = opts.method;
    if (method == StationaryMethod::automatic)
        method = chain.node_count() <= opts.direct_max_nodes ? StationaryMethod::direct : StationaryMethod::power;
    out.method = method;
    if (method == StationaryMethod::direct) {
        out.pair = solve_direct(chain);
        out.iterations = 0;
    } else {
        out.pair = solve_power(chain, opts, out.iterations);
    }
    out.node = node_marginal(chain, out.pair);
    out.residual = balance_residual(chain, out.pair);
    return out;
}

std::vector<double> node_marginal(const PairStateChain& chain, std::span<const double> pair) {
    const std::size_t n = chain.node_count();
    std::vector<double> node(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t h = 0; h < n; ++h) node[h] += pair[i * n + h];
    return node;
}

std::vector<double> marginal_at_t(const PairStateChain& chain, std::span<const double> init, std::size_t t) {
    const std::size_t n = chain.node_count();
    if (init.size() != n) throw ConfigError("initial distribution has the wrong length");
    if (t == 0) return {init.begin(), init.end()};
    std::vector<double> x(chain.state_count(), 0.0);
    for (std::size_t i = 0; i < n; ++i) x[i * n + i] = init[i];
    for (std::size_t k = 0; k < t; ++k) x = chain.propagate(x);
    return node_marginal(chain, x);
}

std::vector<double> mixed_equation_residual(const PairStateChain& chain, const PairDistribution& pi) {
    const auto& g = chain.graph();
    const std::size_t n = chain.node_count();
    const double r = chain.config().jump_rate;
    std::vector<double> residual(n);
    for (NodeId h = 0; h < n; ++h) {
        double rhs = 0.0;
        for (NodeId i = 0; i < n; ++i) {
            if (g.adjacent(i, h))
                rhs += pi.pair[chain.index({i, h})];
            else
                rhs += pi.node[i] / (double(g.degree(i)) + r) * (r / double(n));
        }
        residual[h] = pi.node[h] - rhs;
    }
    return residual;
}

double exact_sequence_probability(const PairStateChain& chain, const PairDistribution& pi,
                                  std::span<const NodeId> seq) {
    if (seq.empty()) throw ConfigError("empty state sequence");
    if (seq.size() == 1) return pi.node[seq[0]];
    double p = pi.pair[chain.index({seq[0], seq[1]})];
    for (std::size_t k = 2; k < seq.size(); ++k)
        p *= transition_prob(chain.graph(), chain.config(), seq[k - 2], seq[k - 1], seq[k]);
    return p;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) throw ConfigError("distributions differ in length");
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) s += std::abs(p[k] - q[k]);
    return 0.5 * s;
}

}  // namespace lrw
