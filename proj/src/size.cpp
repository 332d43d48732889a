#include "lrw/size.hpp"

#include <unordered_map>

#include "lrw/error.hpp"

namespace lrw {

std::vector<std::size_t> extraction_indices(std::size_t length, const Extraction& ex) {
    if (ex.stride == 0) throw ConfigError("extraction stride must be positive");
    std::vector<std::size_t> idx;
    for (std::size_t t = ex.offset; t < length && idx.size() < ex.count; t += ex.stride) idx.push_back(t);
    return idx;
}

CollisionStat count_collisions(const WalkTrace& x, const WalkTrace& y, const GraphView& view, double r,
                               const Extraction& ex) {
    CollisionStat stat;
    stat.x_indices = extraction_indices(x.states.size(), ex);
    stat.y_indices = extraction_indices(y.states.size(), ex);
    stat.n_x = stat.x_indices.size();
    stat.n_y = stat.y_indices.size();

    std::unordered_map<NodeId, std::size_t> y_hits;
    for (auto k : stat.y_indices) ++y_hits[y.states[k]];
    for (auto k : stat.x_indices) {
        const NodeId h = x.states[k];
        auto it = y_hits.find(h);
        if (it == y_hits.end()) continue;
        stat.raw_collisions += it->second;
        stat.m += double(it->second) / (double(view.degree(h)) + r);
    }
    return stat;
}

std::string_view to_string(SizeMethod m) {
    switch (m) {
        case SizeMethod::cr: return "cr";
        case SizeMethod::gr: return "gr";
        case SizeMethod::grcr: return "grcr";
    }
    return "?";
}

SizeEstimate estimate_size_cr(const CollisionStat& stat, double r, std::size_t n) {
    if (!(stat.m > 0.0)) throw NoCollisionError("no collisions between the two walks");
    SizeEstimate e;
    e.method = SizeMethod::cr;
    e.edges = (double(stat.n_x) * double(stat.n_y) / stat.m - r * double(n)) / 2.0;
    e.negative = e.edges < 0.0;
    return e;
}

double weighted_mean_degree(std::span<const WalkTrace> traces, const GraphView& view, double r,
                            const Extraction& ex) {
    double num = 0.0, den = 0.0;
    for (const auto& tr : traces)
        for (auto k : extraction_indices(tr.states.size(), ex)) {
            const double d = double(view.degree(tr.states[k]));
            num += d / (d + r);
            den += 1.0 / (d + r);
        }
    if (!(den > 0.0)) throw ConfigError("weighted mean degree needs at least one extracted state");
    return num / den;
}

SizeEstimate estimate_size_gr(double mean_degree, std::size_t n) {
    SizeEstimate e;
    e.method = SizeMethod::gr;
    e.mean_degree = mean_degree;
    e.edges = double(n) * mean_degree / 2.0;
    return e;
}

SizeEstimate estimate_size_grcr(const CollisionStat& stat, double mean_degree, double r) {
    if (!(stat.m > 0.0)) throw NoCollisionError("no collisions between the two walks");
    if (!(r + mean_degree > 0.0)) throw ConfigError("GR-CR needs r + d_w > 0");
    SizeEstimate e;
    e.method = SizeMethod::grcr;
    e.mean_degree = mean_degree;
    const double nn = double(stat.n_x) * double(stat.n_y);
    e.nodes = nn / (stat.m * (r + mean_degree));
    e.edges = nn * mean_degree / (2.0 * stat.m * (r + mean_degree));
    return e;
}

}  // namespace lrw
