#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/kernel.hpp"

namespace lrw {

/// Closed-form stationary node law pi_h = (d_h + r) / (2R + rN). Needs r > 0.
std::vector<double> stationary_node(const Graph& g, const WalkConfig& cfg);

/// How the constant 2R + rN in a sequence probability is handled.
enum class Normalization {
    unnormalized,  // constant taken as 1; fine wherever it cancels (ratios, weights)
    exact,         // true R
    estimated,     // an estimate of R
};
std::string_view to_string(Normalization n);
Normalization parse_normalization(std::string_view text);

/// Stationary successive sampling probability of an ordered state sequence.
struct Ssp {
    double probability = 0.0;
    Normalization normalization = Normalization::unnormalized;
};

/// Sequence probabilities computed from whatever the view exposes.
///
/// pi_M = pi_{s0} * p(s0 -> s1) * prod_{k >= 2} p(s_{k-1} -> s_k | s_{k-2}),
/// with the lag-free kernel for the first transition. Under that reading
/// pi_{s0} p(s0 -> s1) = (a_{s0 s1} + r/N) / (2R + rN), which is exactly the
/// stationary pair probability, so pi_M is the equilibrium probability of
/// the sequence for every w.
class S3pModel {
public:
    /// `size` is R (exact) or an estimate of R (estimated); ignored when
    /// unnormalized. Throws ConfigError for a non-positive constant.
    S3pModel(const GraphView& view, const WalkConfig& cfg, Normalization normalization, double size = 0.0);

    double constant() const { return constant_; }
    Normalization normalization() const { return normalization_; }
    const WalkConfig& config() const { return cfg_; }

    /// True when every state of the sequence has an observed adjacency row.
    bool computable(std::span<const NodeId> seq) const;

    /// Throws UnreachableSequenceError for a zero-probability sequence and
    /// ObservabilityError when the view lacks a needed row.
    Ssp operator()(std::span<const NodeId> seq) const;

private:
    const GraphView* view_;
    WalkConfig cfg_;
    Normalization normalization_;
    double constant_;
};

/// One-shot form of S3pModel.
inline Ssp s3p(const GraphView& view, const WalkConfig& cfg, std::span<const NodeId> seq,
               Normalization normalization, double size = 0.0) {
    return S3pModel(view, cfg, normalization, size)(seq);
}

}  // namespace lrw
