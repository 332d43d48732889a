#include "lrw/total.hpp"

#include <string>

#include "lrw/error.hpp"

namespace lrw {

std::string_view to_string(WindowCombine c) { return c == WindowCombine::all_windows ? "all-windows" : "informative"; }

WindowCombine parse_window_combine(std::string_view text) {
    if (text == "all-windows") return WindowCombine::all_windows;
    if (text == "informative") return WindowCombine::informative;
    throw ConfigError("unknown window combination '" + std::string(text) + "'");
}

WindowEstimate estimate_total_window(const GraphView& view, std::span<const NodeId> window, std::size_t time,
                                     const TotalOptions& opts, const S3pModel& model) {
    WindowEstimate est;
    est.time = time;
    const auto found = detect_in_window(view, opts.kind, window, time, opts.values);
    est.observations = found.size();
    est.informative = !found.empty();
    if (found.empty()) return est;

    const double inv_pi = 1.0 / model(window).probability;
    double sum = 0.0;
    for (const auto& obs : found) {
        IncidenceWeights w;
        try {
            w = incidence_weights(obs, opts.scheme, model, opts.ppw_fallback);
        } catch (const PpwInfeasibleError&) {
            est.evaluable = false;
            est.value = 0.0;
            return est;
        }
        if (w.fell_back) ++est.ppw_fallbacks;
        sum += w.weight_of(window) * obs.occurrence.value;
    }
    est.value = sum * inv_pi;
    return est;
}

namespace {

std::vector<WindowEstimate> window_estimates(const WalkTrace& trace, const SampleGraph& sg, const TotalOptions& opts,
                                             const S3pModel& model) {
    std::vector<WindowEstimate> out;
    const std::size_t len = window_length(opts.kind);
    const auto& s = trace.states;
    for (std::size_t t = 0; t + len <= s.size(); ++t)
        out.push_back(estimate_total_window(sg, std::span(s).subspan(t, len), t, opts, model));
    return out;
}

bool counts(const WindowEstimate& w, WindowCombine combine) {
    return w.evaluable && (combine == WindowCombine::all_windows || w.informative);
}

}  // namespace

TotalEstimate estimate_total(const WalkTrace& trace, const SampleGraph& sg, const TotalOptions& opts,
                             const S3pModel& model) {
    TotalEstimate est;
    est.kind = opts.kind;
    est.scheme = opts.scheme;
    est.normalization = model.normalization();
    est.combine = opts.combine;
    est.windows = window_estimates(trace, sg, opts, model);
    double sum = 0.0;
    for (const auto& w : est.windows) {
        est.ppw_fallbacks += w.ppw_fallbacks;
        if (w.informative) ++est.informative_windows;
        if (!counts(w, opts.combine)) continue;
        ++est.used_windows;
        sum += w.value;
    }
    if (est.used_windows == 0) throw NoObservationError("no usable window for the " + std::string(to_string(opts.kind)) + " total");
    est.value = sum / double(est.used_windows);
    return est;
}

double estimate_ratio(const WalkTrace& trace, const SampleGraph& sg, const TotalOptions& numerator,
                      const TotalOptions& denominator, const S3pModel& model) {
    const auto num = window_estimates(trace, sg, numerator, model);
    const auto den = window_estimates(trace, sg, denominator, model);
    if (num.size() != den.size()) throw ConfigError("ratio needs numerator and denominator over the same windows");
    double top = 0.0, bottom = 0.0;
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (!num[k].evaluable || !den[k].evaluable) continue;
        top += num[k].value;
        bottom += den[k].value;
    }
    if (!(bottom > 0.0)) throw NoObservationError("ratio denominator is zero");
    return top / bottom;
}

}  // namespace lrw
