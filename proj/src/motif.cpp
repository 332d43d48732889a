#include "lrw/motif.hpp"

#include <algorithm>
#include <string>

#include "lrw/error.hpp"

namespace lrw {

std::size_t motif_order(MotifKind kind) {
    switch (kind) {
        case MotifKind::node: return 1;
        case MotifKind::edge: return 2;
        case MotifKind::two_star:
        case MotifKind::triangle: return 3;
        case MotifKind::four_cycle:
        case MotifKind::three_path: return 4;
    }
    return 0;
}

std::string_view to_string(MotifKind kind) {
    switch (kind) {
        case MotifKind::node: return "node";
        case MotifKind::edge: return "edge";
        case MotifKind::two_star: return "two-star";
        case MotifKind::triangle: return "triangle";
        case MotifKind::four_cycle: return "four-cycle";
        case MotifKind::three_path: return "three-path";
    }
    return "?";
}

MotifKind parse_motif_kind(std::string_view name) {
    for (auto k : {MotifKind::node, MotifKind::edge, MotifKind::two_star, MotifKind::triangle,
                   MotifKind::four_cycle, MotifKind::three_path})
        if (name == to_string(k)) return k;
    throw ConfigError("unknown motif '" + std::string(name) + "'");
}

std::string_view to_string(MotifValue v) { return v == MotifValue::product ? "product" : "ones"; }

MotifValue parse_motif_value(std::string_view name) {
    if (name == "product") return MotifValue::product;
    if (name == "ones") return MotifValue::ones;
    throw ConfigError("unknown motif value mode '" + std::string(name) + "'");
}

std::vector<NodeId> canonical_nodes(MotifKind kind, std::vector<NodeId> nodes, NodeId center) {
    if (kind == MotifKind::two_star) {
        auto it = std::find(nodes.begin(), nodes.end(), center);
        if (nodes.size() != 3 || it == nodes.end()) throw ConfigError("two-star needs its center among 3 nodes");
        std::iter_swap(nodes.begin(), it);
        std::sort(nodes.begin() + 1, nodes.end());
    } else {
        std::sort(nodes.begin(), nodes.end());
    }
    return nodes;
}

double motif_value(const GraphView& g, std::span<const NodeId> nodes, MotifValue mode) {
    if (mode == MotifValue::ones) return 1.0;
    double y = 1.0;
    for (auto v : nodes) y *= g.value(v);
    return y;
}

namespace {

void emit(std::vector<MotifOccurrence>& out, const Graph& g, MotifKind kind,
          std::vector<NodeId> nodes, MotifValue mode) {
    double y = motif_value(g, nodes, mode);
    out.push_back({kind, std::move(nodes), y});
}

}  // namespace

std::vector<MotifOccurrence> enumerate_motifs(const Graph& g, MotifKind kind, MotifValue mode) {
    std::vector<MotifOccurrence> out;
    const auto n = NodeId(g.node_count());
    switch (kind) {
        case MotifKind::node:
            for (NodeId i = 0; i < n; ++i) emit(out, g, kind, {i}, mode);
            break;
        case MotifKind::edge:
            for (auto [i, j] : g.edges()) emit(out, g, kind, {i, j}, mode);
            break;
        case MotifKind::two_star:
            for (NodeId h = 0; h < n; ++h) {
                auto nb = g.neighbours(h);
                for (std::size_t a = 0; a < nb.size(); ++a)
                    for (std::size_t b = a + 1; b < nb.size(); ++b) emit(out, g, kind, {h, nb[a], nb[b]}, mode);
            }
            break;
        case MotifKind::triangle:
            for (NodeId i = 0; i < n; ++i)
                for (NodeId j : g.neighbours(i)) {
                    if (j <= i) continue;
                    for (NodeId k : g.neighbours(j))
                        if (k > j && g.adjacent(i, k)) emit(out, g, kind, {i, j, k}, mode);
                }
            break;
        case MotifKind::four_cycle:
            // Diagonal (i, g) with i the smallest node; the other diagonal
            // (j, h) is a non-adjacent pair of common neighbours.
            for (NodeId i = 0; i < n; ++i)
                for (NodeId gg = i + 1; gg < n; ++gg) {
                    if (g.adjacent(i, gg)) continue;
                    std::vector<NodeId> common;
                    std::ranges::set_intersection(g.neighbours(i), g.neighbours(gg), std::back_inserter(common));
                    for (std::size_t a = 0; a < common.size(); ++a)
                        for (std::size_t b = a + 1; b < common.size(); ++b) {
                            NodeId j = common[a], h = common[b];
                            if (j < i || h < i || g.adjacent(j, h)) continue;
                            emit(out, g, kind, canonical_nodes(kind, {i, j, gg, h}), mode);
                        }
                }
            break;
        case MotifKind::three_path:
            // Middle edge (b, c) with b < c, ends a ~ b and d ~ c.
            for (auto [b, c] : g.edges())
                for (NodeId a : g.neighbours(b)) {
                    if (a == c || g.adjacent(a, c)) continue;
                    for (NodeId d : g.neighbours(c)) {
                        if (d == b || d == a || g.adjacent(b, d) || g.adjacent(a, d)) continue;
                        emit(out, g, kind, canonical_nodes(kind, {a, b, c, d}), mode);
                    }
                }
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

double graph_total(std::span<const MotifOccurrence> occurrences) {
    double total = 0.0;
    for (const auto& o : occurrences) total += o.value;
    return total;
}

}  // namespace lrw
