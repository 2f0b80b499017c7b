#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dpcolor/error.hpp"

namespace dpc {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    EdgeId id;
    VertexId u;
    VertexId v;
};

/// Finite loopless multigraph. Vertices and edges carry external string
/// labels and internal dense ids. Ids assigned at construction are never
/// reused: subgraph operations keep the surviving ids, so positions in
/// id-indexed side tables (directions, lists, matchings) stay valid.
class Multigraph {
public:
    VertexId add_vertex(std::string label);
    /// Rejects loops (u == v) and undeclared endpoints.
    EdgeId add_edge(std::string label, VertexId u, VertexId v);

    std::span<const VertexId> vertices() const { return vertex_order_; }
    std::span<const Edge> edges() const { return edge_list_; }
    std::size_t vertex_count() const { return vertex_order_.size(); }
    std::size_t edge_count() const { return edge_list_.size(); }

    bool has_vertex(VertexId v) const;
    bool has_edge(EdgeId e) const;
    const Edge& edge(EdgeId e) const;
    const std::string& vertex_label(VertexId v) const;
    const std::string& edge_label(EdgeId e) const;
    std::optional<VertexId> find_vertex(std::string_view label) const;

    /// Induced subgraph on `keep`: vertex set becomes `keep`, edges are
    /// exactly those with both endpoints in `keep`, all ids preserved.
    Multigraph induced(std::span<const VertexId> keep) const;

    /// Spanning subgraph keeping the full vertex set and only the listed
    /// edges; ids preserved.
    Multigraph edge_subgraph(std::span<const EdgeId> keep_edges) const;

    int degree(VertexId v) const;

    /// One past the largest vertex (edge) id ever allocated; sizes for
    /// id-indexed side tables.
    std::size_t vertex_id_bound() const { return vertex_labels_.size(); }
    std::size_t edge_id_bound() const { return edge_labels_.size(); }

    /// Structural equality over labels: same vertex label sequence and the
    /// same edge sequence (label, endpoint labels in stored order). Ids do
    /// not participate, so a parsed copy compares equal to its original.
    bool operator==(const Multigraph& other) const;

private:
    void check_vertex(VertexId v) const;

    std::vector<std::string> vertex_labels_; // by id
    std::vector<std::string> edge_labels_;   // by id
    std::vector<char> vertex_present_;       // by id
    std::vector<std::int32_t> edge_pos_;     // by id, index into edge_list_ or -1
    std::vector<VertexId> vertex_order_;     // present vertices, declaration order
    std::vector<Edge> edge_list_;            // present edges, insertion order
};

/// Per-edge direction tag, relative to the edge's stored endpoint order:
/// Forward contributes the arc (u,v), Backward the arc (v,u), Both both.
enum class EdgeDir : std::uint8_t { Forward, Backward, Both };

/// A multigraph together with a direction tag on every edge; the digraph
/// view exposes arcs, out-degrees and strongly connected components.
class Biorientation {
public:
    Biorientation() = default;
    /// `directions` is aligned with `graph.edges()` order.
    Biorientation(Multigraph graph, const std::vector<EdgeDir>& directions);

    const Multigraph& graph() const { return graph_; }
    EdgeDir direction(EdgeId e) const;

    /// Out-degree in the digraph view; a Both edge contributes one outgoing
    /// arc at each endpoint.
    int out_degree(VertexId v) const;

    /// Edges tagged Both, in edge order.
    std::vector<EdgeId> bidirected_edges() const;

    Biorientation induced(std::span<const VertexId> keep) const;
    Biorientation without_vertices(std::span<const VertexId> remove) const;

    /// All arcs in deterministic order: per edge in edge order, the (u,v)
    /// arc before the (v,u) arc for Both edges.
    std::vector<std::pair<VertexId, VertexId>> arcs() const;
    bool has_arc(VertexId from, VertexId to) const;

    /// Partition of the vertex set into strongly connected components of
    /// the digraph view, terminal components first (reverse topological
    /// order of the condensation: every cross-component arc points from a
    /// later component to an earlier one). Deterministic given vertex and
    /// edge order.
    std::vector<std::vector<VertexId>> strongly_connected_components() const;

    bool operator==(const Biorientation& other) const;

private:
    Multigraph graph_;
    std::vector<EdgeDir> dir_;    // by edge id
    std::vector<int> out_degree_; // by vertex id
};

} // namespace dpc
