#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpc {

/// Per-vertex color lists, indexed by vertex id. Lists are ordered; all
/// algorithms iterate them in stored order.
class ColorLists {
public:
    void set(VertexId v, std::vector<int> colors);
    const std::vector<int>& at(VertexId v) const;
    bool contains(VertexId v, int color) const;

private:
    std::vector<std::vector<int>> by_id_;
    static const std::vector<int> empty_;
};

/// Partial matching between the endpoint lists of one edge. Pairs are
/// (color at u, color at v) relative to the edge's stored endpoint order
/// and are kept sorted for deterministic iteration.
struct PartialMatching {
    std::vector<std::pair<int, int>> pairs;

    bool empty() const { return pairs.empty(); }
    bool forbids(int color_u, int color_v) const;
    /// Color at v matched with `color_u` at u, if any (at most one by the
    /// matching property).
    std::optional<int> partner_of_u(int color_u) const;
    std::optional<int> partner_of_v(int color_v) const;
    void normalize();
};

enum class EdgeClass : std::uint8_t {
    Straight, // nonempty, every pair has equal colors
    Twisted,  // some pair has distinct colors
    Empty,    // no pairs: imposes no constraint
};

struct Violation {
    std::string kind;
    std::string subject;
    std::string message;
};

/// Lists plus one partial matching per edge, optionally with an
/// orientation of the same graph.
struct CorrespondenceInstance {
    Multigraph graph;
    ColorLists lists;
    std::vector<PartialMatching> matchings; // by edge id
    std::optional<Biorientation> orientation;

    const PartialMatching& matching(EdgeId e) const;

    EdgeClass classify(EdgeId e) const;
    /// Spanning subgraph of the Straight (resp. Twisted) edges; Empty edges
    /// appear in neither.
    Multigraph straight_subgraph() const;
    Multigraph twisted_subgraph() const;

    /// True iff no pair of the matching has equal colors (vacuously true
    /// for empty matchings).
    bool is_partial_derangement(EdgeId e) const;

    struct DerangementCheck {
        bool ok = false;
        std::vector<EdgeId> violating_edges;
    };
    /// Every Twisted edge must be a partial derangement; Straight and Empty
    /// edges never violate.
    DerangementCheck derangement_check() const;

    /// Deletes `deleted` from the graph, removes `removed_colors[v]` from
    /// each surviving list, and drops every matching pair that mentions a
    /// removed color or a deleted endpoint. `removed_colors` is indexed by
    /// vertex id and may be shorter than the id bound.
    CorrespondenceInstance restricted(std::span<const VertexId> deleted,
        const std::vector<std::vector<int>>& removed_colors) const;

    /// Structural well-formedness: matching property per edge, pair colors
    /// drawn from the endpoint lists, no duplicate colors in a list,
    /// orientation over the same graph. Returns violations, never throws.
    std::vector<Violation> validate() const;

    /// Label-level equality, so instances survive serialization round-trips.
    bool operator==(const CorrespondenceInstance& other) const;
};

/// Pairs (c, c) for every c in L(u) ∩ L(v), in list order of u.
PartialMatching identity_matching(const CorrespondenceInstance& inst, EdgeId e);
PartialMatching identity_pairs(const std::vector<int>& list_u, const std::vector<int>& list_v);

} // namespace dpc
