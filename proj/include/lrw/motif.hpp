#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lrw/graph.hpp"

namespace lrw {

enum class MotifKind { node, edge, two_star, triangle, four_cycle, three_path };

/// Number of nodes in an occurrence: 1, 2, 3, 3, 4, 4.
std::size_t motif_order(MotifKind kind);
std::string_view to_string(MotifKind kind);
/// Accepts the names printed by to_string ("node", "edge", "two-star",
/// "triangle", "four-cycle", "three-path").
MotifKind parse_motif_kind(std::string_view name);

/// How y_kappa is derived from node values.
enum class MotifValue { product, ones };
std::string_view to_string(MotifValue v);
MotifValue parse_motif_value(std::string_view name);

/// One occurrence of a motif.
///
/// Node order is canonical so that equal occurrences compare equal:
/// two-star is (center, leaf, leaf) with sorted leaves; every other kind
/// lists its nodes in increasing order. Two-stars are not induced (a
/// triangle holds three of them); four-cycles and three-paths are induced.
struct MotifOccurrence {
    MotifKind kind{};
    std::vector<NodeId> nodes;
    double value = 0.0;

    auto operator<=>(const MotifOccurrence& o) const {
        if (auto c = kind <=> o.kind; c != 0) return c;
        return nodes <=> o.nodes;
    }
    bool operator==(const MotifOccurrence& o) const { return kind == o.kind && nodes == o.nodes; }
};

/// Canonical node order for an occurrence given in any order. For
/// two-stars `center` names the center node.
std::vector<NodeId> canonical_nodes(MotifKind kind, std::vector<NodeId> nodes, NodeId center = 0);

double motif_value(const GraphView& g, std::span<const NodeId> nodes, MotifValue mode);

/// Every occurrence of `kind` in g, each exactly once, sorted. Exhaustive
/// search; worst case O(N^order), intended for graphs of a few hundred
/// nodes.
std::vector<MotifOccurrence> enumerate_motifs(const Graph& g, MotifKind kind,
                                              MotifValue mode = MotifValue::product);

/// Sum of y_kappa.
double graph_total(std::span<const MotifOccurrence> occurrences);

}  // namespace lrw
