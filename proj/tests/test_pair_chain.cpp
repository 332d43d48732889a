#include <doctest.h>

#include <cmath>

#include "lrw/error.hpp"
#include "lrw/pair_chain.hpp"
#include "test_support.hpp"

using namespace lrw;

namespace {

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
    double m = 0;
    for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
}

}  // namespace

TEST_CASE("explicit matrix is row stochastic and matches propagate") {
    auto g = testing::random_graph(7, 0.4, 2);
    PairStateChain chain(g, WalkConfig{0.5, 0.4, 1});
    auto m = chain.matrix();
    CHECK(m.rows() == 49);
    for (int row = 0; row < m.outerSize(); ++row) {
        double sum = 0;
        for (decltype(m)::InnerIterator it(m, row); it; ++it) {
            sum += it.value();
            CHECK(chain.state(std::size_t(it.col())).prev == chain.state(std::size_t(row)).cur);
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
    }
    std::vector<double> dist(49);
    for (std::size_t k = 0; k < 49; ++k) dist[k] = double(k % 5 + 1);
    auto fast = chain.propagate(dist);
    Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(dist.data(), 49);
    Eigen::VectorXd slow = m.transpose() * v;
    for (std::size_t k = 0; k < 49; ++k) CHECK(fast[k] == doctest::Approx(slow[Eigen::Index(k)]));
}

TEST_CASE("chain construction rejects r = 0 and oversize state spaces") {
    auto g = testing::cycle_graph(5);
    CHECK_THROWS_AS(PairStateChain(g, WalkConfig{0.0, 1.0, 1}), NonErgodicError);
    CHECK_THROWS_AS(PairStateChain(g, WalkConfig{1.0, 1.0, 1}, 20), StateSpaceTooLarge);
    PairStateChain chain(g, WalkConfig{1.0, 1.0, 1});
    CHECK_THROWS_AS(chain.matrix(10), StateSpaceTooLarge);
}

TEST_CASE("direct and power solutions agree with the closed form") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto g = testing::random_graph(12, 0.15 + 0.05 * double(seed), seed);
        const double two_r = 2.0 * double(g.edge_count());
        for (double r : {0.1, 6.0})
            for (double w : {0.0, 0.5, 1.0}) {
                PairStateChain chain(g, WalkConfig{r, w, 1});
                const double c = two_r + r * 12;
                auto direct = stationary_pair(chain, {.method = StationaryMethod::direct});
                auto power = stationary_pair(chain, {.method = StationaryMethod::power});
                CHECK(direct.method == StationaryMethod::direct);
                CHECK(power.method == StationaryMethod::power);
                CHECK(power.iterations > 0);
                CHECK(max_abs_diff(direct.pair, power.pair) < 1e-9);
                for (NodeId i = 0; i < 12; ++i) {
                    CHECK(direct.node[i] == doctest::Approx((double(g.degree(i)) + r) / c).epsilon(1e-10));
                    for (NodeId h = 0; h < 12; ++h) {
                        const double expect = ((g.adjacent(i, h) ? 1.0 : 0.0) + r / 12) / c;
                        CHECK(std::abs(direct.pair[chain.index({i, h})] - expect) < 1e-12);
                    }
                }
                for (double res : mixed_equation_residual(chain, direct)) CHECK(std::abs(res) < 1e-12);
            }
    }
}

TEST_CASE("power iteration reports non-convergence") {
    auto g = testing::random_graph(10, 0.3, 4);
    PairStateChain chain(g, WalkConfig{0.05, 0.0, 1});
    StationaryOptions opts{.method = StationaryMethod::power, .tolerance = 1e-15, .max_iterations = 3};
    CHECK_THROWS_AS(stationary_pair(chain, opts), NonConvergenceError);
}

TEST_CASE("node marginal and time-t marginal") {
    auto g = testing::random_graph(9, 0.3, 8);
    PairStateChain chain(g, WalkConfig{1.0, 0.2, 1});
    auto pi = stationary_pair(chain);
    auto node = node_marginal(chain, pi.pair);
    CHECK(max_abs_diff(node, pi.node) < 1e-14);

    // From the stationary node law the walk stays stationary.
    auto at5 = marginal_at_t(chain, pi.node, 5);
    CHECK(max_abs_diff(at5, pi.node) < 1e-12);

    // From a point mass it converges.
    std::vector<double> point(9, 0.0);
    point[0] = 1.0;
    CHECK(marginal_at_t(chain, point, 0) == point);
    CHECK(total_variation(marginal_at_t(chain, point, 200), pi.node) < 1e-10);
    CHECK(total_variation(point, point) == 0.0);
}

TEST_CASE("time-1 marginal uses the lag-free kernel") {
    auto g = testing::path_graph(4);
    WalkConfig cfg{0.5, 0.0, 1};
    PairStateChain chain(g, cfg);
    std::vector<double> point(4, 0.0);
    point[1] = 1.0;
    auto m1 = marginal_at_t(chain, point, 1);
    for (NodeId j = 0; j < 4; ++j) CHECK(m1[j] == doctest::Approx(lag_free_transition_prob(g, cfg, 1, j)));
}

TEST_CASE("exact sequence probability") {
    auto g = testing::random_graph(8, 0.4, 12);
    WalkConfig cfg{0.3, 0.6, 1};
    PairStateChain chain(g, cfg);
    auto pi = stationary_pair(chain);
    std::vector<NodeId> seq = {0, 3, 5};
    const double expect =
        pi.pair[chain.index({0, 3})] * transition_prob(g, cfg, 0, 3, 5);
    CHECK(exact_sequence_probability(chain, pi, seq) == doctest::Approx(expect));
    // Length-3 sequence probabilities form a distribution.
    double sum = 0;
    for (NodeId a = 0; a < 8; ++a)
        for (NodeId b = 0; b < 8; ++b)
            for (NodeId c = 0; c < 8; ++c) {
                std::vector<NodeId> s = {a, b, c};
                sum += exact_sequence_probability(chain, pi, s);
            }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}
