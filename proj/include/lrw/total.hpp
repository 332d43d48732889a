#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lrw/motif.hpp"
#include "lrw/observation.hpp"
#include "lrw/s3p.hpp"
#include "lrw/sample_graph.hpp"
#include "lrw/walk.hpp"

namespace lrw {

/// Which windows enter the combined total.
enum class WindowCombine {
    /// Every evaluable window, including those that reveal nothing
    /// (theta_t = 0). Each term is unbiased, so the average is too.
    all_windows,
    /// Only windows that reveal at least one occurrence. Inflates a total
    /// by 1 / Pr(informative window); ratios are unaffected.
    informative,
};
std::string_view to_string(WindowCombine c);
WindowCombine parse_window_combine(std::string_view text);

struct TotalOptions {
    MotifKind kind = MotifKind::triangle;
    MotifValue values = MotifValue::product;
    WeightScheme scheme = WeightScheme::multiplicity;
    /// Use multiplicity weights where ppw is infeasible instead of dropping
    /// the window.
    bool ppw_fallback = true;
    WindowCombine combine = WindowCombine::all_windows;
};

/// Incidence-weighted estimate from one window (X_t, ..., X_{t+q}):
/// sum over revealed occurrences of w(s_kappa) y_kappa / pi(s_kappa).
struct WindowEstimate {
    std::size_t time = 0;
    double value = 0.0;
    bool informative = false;  // revealed at least one occurrence
    bool evaluable = true;     // false only when ppw is infeasible without fallback
    std::size_t observations = 0;
    std::size_t ppw_fallbacks = 0;
};

WindowEstimate estimate_total_window(const GraphView& view, std::span<const NodeId> window, std::size_t time,
                                     const TotalOptions& opts, const S3pModel& model);

struct TotalEstimate {
    std::vector<WindowEstimate> windows;
    double value = 0.0;
    MotifKind kind{};
    WeightScheme scheme{};
    Normalization normalization{};
    WindowCombine combine{};
    std::size_t used_windows = 0;
    std::size_t informative_windows = 0;
    std::size_t ppw_fallbacks = 0;
};

/// Combined total over windows t = 0 .. T - q:
/// sum_t I_t theta_t / sum_t I_t with I_t chosen by opts.combine. Throws
/// NoObservationError when no window qualifies.
TotalEstimate estimate_total(const WalkTrace& trace, const SampleGraph& sg, const TotalOptions& opts,
                             const S3pModel& model);

/// Ratio of two totals over the same windows, e.g. case triangles over all
/// triangles. The constant 2R + rN cancels, so an unnormalized model is
/// enough. Throws NoObservationError for a zero denominator.
double estimate_ratio(const WalkTrace& trace, const SampleGraph& sg, const TotalOptions& numerator,
                      const TotalOptions& denominator, const S3pModel& model);

}  // namespace lrw
