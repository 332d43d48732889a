#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "lrw/graph.hpp"
#include "lrw/walk.hpp"

namespace lrw {

/// Which states of a trace enter a size estimator: indices offset,
/// offset + stride, ... up to `count` states.
struct Extraction {
    std::size_t offset = 0;
    std::size_t stride = 1;
    std::size_t count = std::numeric_limits<std::size_t>::max();
};

/// Indices selected from a trace of `length` states.
std::vector<std::size_t> extraction_indices(std::size_t length, const Extraction& ex);

/// Degree-weighted coincidences of two independent walks:
/// m = sum_i sum_j [X_{t_i} = Y_{tau_j} = h] / (d_h + r).
struct CollisionStat {
    double m = 0.0;
    std::size_t n_x = 0;
    std::size_t n_y = 0;
    std::size_t raw_collisions = 0;  // unweighted count of matching index pairs
    std::vector<std::size_t> x_indices;
    std::vector<std::size_t> y_indices;
};

/// Degrees are read through `view`, which must know the rows of the
/// visited nodes (the full graph, or a sample graph of either walk).
CollisionStat count_collisions(const WalkTrace& x, const WalkTrace& y, const GraphView& view, double r,
                               const Extraction& ex = {});

enum class SizeMethod { cr, gr, grcr };
std::string_view to_string(SizeMethod m);

struct SizeEstimate {
    SizeMethod method = SizeMethod::gr;
    double edges = 0.0;                                          // R hat
    double nodes = std::numeric_limits<double>::quiet_NaN();     // N hat, GR-CR only
    double mean_degree = std::numeric_limits<double>::quiet_NaN();
    bool negative = false;                                       // CR can go below zero
};

/// Capture-recapture: R = (n_x n_y / m - rN) / 2. Throws NoCollisionError
/// when m = 0; a negative result is returned with `negative` set.
SizeEstimate estimate_size_cr(const CollisionStat& stat, double r, std::size_t n);

/// d_w = sum d/(d+r) / sum 1/(d+r) over the extracted states of all traces.
double weighted_mean_degree(std::span<const WalkTrace> traces, const GraphView& view, double r,
                            const Extraction& ex = {});

/// Generalised ratio: R = N d_w / 2.
SizeEstimate estimate_size_gr(double mean_degree, std::size_t n);

/// GR-CR: N = n_x n_y / (m (r + d_w)), R = n_x n_y d_w / (2 m (r + d_w)).
/// Does not use the known N. Throws NoCollisionError when m = 0.
SizeEstimate estimate_size_grcr(const CollisionStat& stat, double mean_degree, double r);

}  // namespace lrw
