#include "lrw/observation.hpp"

#include <algorithm>
#include <string>

#include "lrw/error.hpp"

namespace lrw {

std::size_t window_length(MotifKind kind) {
    switch (kind) {
        case MotifKind::node:
        case MotifKind::edge:
        case MotifKind::two_star: return 1;
        case MotifKind::triangle: return 2;
        case MotifKind::four_cycle:
        case MotifKind::three_path: return 3;
    }
    return 0;
}

namespace {

void add(std::vector<MotifObservation>& out, const GraphView& view, MotifKind kind, std::vector<NodeId> structure,
         std::span<const NodeId> window, std::size_t time, MotifValue values, NodeId center = 0) {
    MotifObservation obs;
    obs.occurrence.kind = kind;
    obs.occurrence.nodes = canonical_nodes(kind, structure, center);
    obs.occurrence.value = motif_value(view, obs.occurrence.nodes, values);
    obs.structure = std::move(structure);
    obs.as3.assign(window.begin(), window.end());
    obs.time = time;
    out.push_back(std::move(obs));
}

std::vector<NodeId> common_neighbours(const GraphView& view, NodeId a, NodeId b) {
    std::vector<NodeId> out;
    std::ranges::set_intersection(view.neighbours(a), view.neighbours(b), std::back_inserter(out));
    return out;
}

bool two_step_path(const GraphView& view, std::span<const NodeId> w) {
    return w[0] != w[1] && w[1] != w[2] && w[0] != w[2] && view.adjacent(w[0], w[1]) && view.adjacent(w[1], w[2]) &&
           !view.adjacent(w[0], w[2]);
}

}  // namespace

std::vector<MotifObservation> detect_in_window(const GraphView& view, MotifKind kind, std::span<const NodeId> window,
                                               std::size_t time, MotifValue values) {
    if (window.size() != window_length(kind)) throw ConfigError("window length does not match the motif");
    std::vector<MotifObservation> out;
    switch (kind) {
        case MotifKind::node:
            add(out, view, kind, {window[0]}, window, time, values);
            break;
        case MotifKind::edge:
            for (NodeId j : view.neighbours(window[0])) add(out, view, kind, {window[0], j}, window, time, values);
            break;
        case MotifKind::two_star: {
            const NodeId h = window[0];
            auto nb = view.neighbours(h);
            for (std::size_t a = 0; a < nb.size(); ++a)
                for (std::size_t b = a + 1; b < nb.size(); ++b)
                    add(out, view, kind, {h, nb[a], nb[b]}, window, time, values, h);
            break;
        }
        case MotifKind::triangle: {
            const NodeId i = window[0], j = window[1];
            if (i == j || !view.adjacent(i, j)) break;
            for (NodeId k : common_neighbours(view, i, j)) add(out, view, kind, {i, j, k}, window, time, values);
            break;
        }
        case MotifKind::four_cycle: {
            if (!two_step_path(view, window)) break;
            const NodeId i = window[0], j = window[1], g = window[2];
            for (NodeId h : common_neighbours(view, i, g))
                if (h != j && !view.adjacent(j, h)) add(out, view, kind, {i, j, g, h}, window, time, values);
            break;
        }
        case MotifKind::three_path: {
            if (!two_step_path(view, window)) break;
            const NodeId x = window[0], y = window[1], z = window[2];
            for (NodeId d : view.neighbours(z))
                if (d != x && d != y && !view.adjacent(y, d) && !view.adjacent(x, d))
                    add(out, view, kind, {x, y, z, d}, window, time, values);
            for (NodeId a : view.neighbours(x))
                if (a != y && a != z && !view.adjacent(a, y) && !view.adjacent(a, z))
                    add(out, view, kind, {a, x, y, z}, window, time, values);
            break;
        }
    }
    return out;
}

std::vector<MotifObservation> detect_observations(const WalkTrace& trace, const SampleGraph& sg, MotifKind kind,
                                                  MotifValue values) {
    std::vector<MotifObservation> out;
    const std::size_t len = window_length(kind);
    const auto& s = trace.states;
    for (std::size_t t = 0; t + len <= s.size(); ++t) {
        auto found = detect_in_window(sg, kind, std::span(s).subspan(t, len), t, values);
        std::move(found.begin(), found.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<StateSequence> es3_set(const MotifObservation& obs) {
    const auto& c = obs.structure;
    std::vector<StateSequence> f;
    switch (obs.occurrence.kind) {
        case MotifKind::node:
        case MotifKind::two_star:
            f = {{c[0]}};
            break;
        case MotifKind::edge:
            f = {{c[0]}, {c[1]}};
            break;
        case MotifKind::triangle:
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b)
                    if (a != b) f.push_back({c[a], c[b]});
            break;
        case MotifKind::four_cycle:
            for (std::size_t m = 0; m < 4; ++m) {
                f.push_back({c[(m + 3) % 4], c[m], c[(m + 1) % 4]});
                f.push_back({c[(m + 1) % 4], c[m], c[(m + 3) % 4]});
            }
            break;
        case MotifKind::three_path:
            f = {{c[0], c[1], c[2]}, {c[2], c[1], c[0]}, {c[1], c[2], c[3]}, {c[3], c[2], c[1]}};
            break;
    }
    std::sort(f.begin(), f.end());
    return f;
}

bool es3_computable(const GraphView& view, const MotifObservation& obs) {
    for (const auto& seq : es3_set(obs))
        for (auto v : seq)
            if (!view.row_known(v)) return false;
    return true;
}

std::string_view to_string(WeightScheme s) { return s == WeightScheme::multiplicity ? "multiplicity" : "ppw"; }

WeightScheme parse_weight_scheme(std::string_view text) {
    if (text == "multiplicity") return WeightScheme::multiplicity;
    if (text == "ppw") return WeightScheme::ppw;
    throw ConfigError("unknown weight scheme '" + std::string(text) + "'");
}

double IncidenceWeights::weight_of(std::span<const NodeId> seq) const {
    for (std::size_t k = 0; k < sequences.size(); ++k)
        if (std::ranges::equal(sequences[k], seq)) return weights[k];
    return 0.0;
}

IncidenceWeights incidence_weights(const MotifObservation& obs, WeightScheme scheme, const S3pModel& model,
                                   bool fallback) {
    IncidenceWeights out;
    out.sequences = es3_set(obs);
    const std::size_t f = out.sequences.size();
    bool ppw = scheme == WeightScheme::ppw;
    if (ppw) {
        bool ok = std::ranges::all_of(out.sequences, [&](const auto& seq) { return model.computable(seq); });
        if (!ok) {
            if (!fallback) throw PpwInfeasibleError("ES3 set of a " + std::string(to_string(obs.occurrence.kind)) +
                                                    " reaches unvisited nodes");
            ppw = false;
            out.fell_back = true;
        }
    }
    if (!ppw) {
        out.weights.assign(f, 1.0 / double(f));
        return out;
    }
    out.weights.resize(f);
    double total = 0.0;
    for (std::size_t k = 0; k < f; ++k) total += out.weights[k] = model(out.sequences[k]).probability;
    for (auto& w : out.weights) w /= total;
    return out;
}

}  // namespace lrw
