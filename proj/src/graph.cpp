#include "dpcolor/graph.hpp"

#include <algorithm>
#include <functional>

namespace dpc {

VertexId Multigraph::add_vertex(std::string label)
{
    auto id = static_cast<VertexId>(vertex_labels_.size());
    vertex_labels_.push_back(std::move(label));
    vertex_present_.push_back(1);
    vertex_order_.push_back(id);
    return id;
}

EdgeId Multigraph::add_edge(std::string label, VertexId u, VertexId v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw InputError("loop rejected: edge '" + label + "' joins vertex '"
            + vertex_label(u) + "' to itself");
    auto id = static_cast<EdgeId>(edge_labels_.size());
    edge_labels_.push_back(std::move(label));
    edge_pos_.push_back(static_cast<std::int32_t>(edge_list_.size()));
    edge_list_.push_back(Edge{id, u, v});
    return id;
}

bool Multigraph::has_vertex(VertexId v) const
{
    return v >= 0 && static_cast<std::size_t>(v) < vertex_present_.size()
        && vertex_present_[static_cast<std::size_t>(v)];
}

bool Multigraph::has_edge(EdgeId e) const
{
    return e >= 0 && static_cast<std::size_t>(e) < edge_pos_.size()
        && edge_pos_[static_cast<std::size_t>(e)] >= 0;
}

const Edge& Multigraph::edge(EdgeId e) const
{
    if (!has_edge(e))
        throw InputError("unknown edge id " + std::to_string(e));
    return edge_list_[static_cast<std::size_t>(edge_pos_[static_cast<std::size_t>(e)])];
}

const std::string& Multigraph::vertex_label(VertexId v) const
{
    check_vertex(v);
    return vertex_labels_[static_cast<std::size_t>(v)];
}

const std::string& Multigraph::edge_label(EdgeId e) const
{
    if (!has_edge(e))
        throw InputError("unknown edge id " + std::to_string(e));
    return edge_labels_[static_cast<std::size_t>(e)];
}

std::optional<VertexId> Multigraph::find_vertex(std::string_view label) const
{
    for (VertexId v : vertex_order_)
        if (vertex_labels_[static_cast<std::size_t>(v)] == label)
            return v;
    return std::nullopt;
}

Multigraph Multigraph::induced(std::span<const VertexId> keep) const
{
    std::vector<char> in_keep(vertex_labels_.size(), 0);
    for (VertexId v : keep) {
        check_vertex(v);
        in_keep[static_cast<std::size_t>(v)] = 1;
    }
    Multigraph sub;
    sub.vertex_labels_ = vertex_labels_;
    sub.edge_labels_ = edge_labels_;
    sub.vertex_present_.assign(vertex_labels_.size(), 0);
    sub.edge_pos_.assign(edge_labels_.size(), -1);
    for (VertexId v : vertex_order_) {
        if (in_keep[static_cast<std::size_t>(v)]) {
            sub.vertex_present_[static_cast<std::size_t>(v)] = 1;
            sub.vertex_order_.push_back(v);
        }
    }
    for (const Edge& e : edge_list_) {
        if (in_keep[static_cast<std::size_t>(e.u)] && in_keep[static_cast<std::size_t>(e.v)]) {
            sub.edge_pos_[static_cast<std::size_t>(e.id)] =
                static_cast<std::int32_t>(sub.edge_list_.size());
            sub.edge_list_.push_back(e);
        }
    }
    return sub;
}

Multigraph Multigraph::edge_subgraph(std::span<const EdgeId> keep_edges) const
{
    std::vector<char> keep(edge_labels_.size(), 0);
    for (EdgeId e : keep_edges) {
        if (!has_edge(e))
            throw InputError("unknown edge id " + std::to_string(e));
        keep[static_cast<std::size_t>(e)] = 1;
    }
    Multigraph sub;
    sub.vertex_labels_ = vertex_labels_;
    sub.edge_labels_ = edge_labels_;
    sub.vertex_present_ = vertex_present_;
    sub.vertex_order_ = vertex_order_;
    sub.edge_pos_.assign(edge_labels_.size(), -1);
    for (const Edge& e : edge_list_) {
        if (keep[static_cast<std::size_t>(e.id)]) {
            sub.edge_pos_[static_cast<std::size_t>(e.id)] =
                static_cast<std::int32_t>(sub.edge_list_.size());
            sub.edge_list_.push_back(e);
        }
    }
    return sub;
}

int Multigraph::degree(VertexId v) const
{
    check_vertex(v);
    int d = 0;
    for (const Edge& e : edge_list_)
        d += (e.u == v) + (e.v == v);
    return d;
}

bool Multigraph::operator==(const Multigraph& other) const
{
    if (vertex_count() != other.vertex_count() || edge_count() != other.edge_count())
        return false;
    for (std::size_t i = 0; i < vertex_order_.size(); ++i)
        if (vertex_label(vertex_order_[i]) != other.vertex_label(other.vertex_order_[i]))
            return false;
    for (std::size_t i = 0; i < edge_list_.size(); ++i) {
        const Edge& a = edge_list_[i];
        const Edge& b = other.edge_list_[i];
        if (edge_label(a.id) != other.edge_label(b.id)
            || vertex_label(a.u) != other.vertex_label(b.u)
            || vertex_label(a.v) != other.vertex_label(b.v))
            return false;
    }
    return true;
}

void Multigraph::check_vertex(VertexId v) const
{
    if (!has_vertex(v))
        throw InputError("unknown vertex id " + std::to_string(v));
}

Biorientation::Biorientation(Multigraph graph, const std::vector<EdgeDir>& directions)
    : graph_(std::move(graph))
{
    if (directions.size() != graph_.edge_count())
        throw InputError("direction tags must cover exactly the edges: got "
            + std::to_string(directions.size()) + " tags for "
            + std::to_string(graph_.edge_count()) + " edges");
    dir_.assign(graph_.edge_id_bound(), EdgeDir::Forward);
    out_degree_.assign(graph_.vertex_id_bound(), 0);
    std::size_t i = 0;
    for (const Edge& e : graph_.edges()) {
        EdgeDir d = directions[i++];
        dir_[static_cast<std::size_t>(e.id)] = d;
        if (d == EdgeDir::Forward || d == EdgeDir::Both)
            ++out_degree_[static_cast<std::size_t>(e.u)];
        if (d == EdgeDir::Backward || d == EdgeDir::Both)
            ++out_degree_[static_cast<std::size_t>(e.v)];
    }
}

EdgeDir Biorientation::direction(EdgeId e) const
{
    graph_.edge(e); // existence check
    return dir_[static_cast<std::size_t>(e)];
}

int Biorientation::out_degree(VertexId v) const
{
    if (!graph_.has_vertex(v))
        throw InputError("unknown vertex id " + std::to_string(v));
    return out_degree_[static_cast<std::size_t>(v)];
}

std::vector<EdgeId> Biorientation::bidirected_edges() const
{
    std::vector<EdgeId> out;
    for (const Edge& e : graph_.edges())
        if (dir_[static_cast<std::size_t>(e.id)] == EdgeDir::Both)
            out.push_back(e.id);
    return out;
}

Biorientation Biorientation::induced(std::span<const VertexId> keep) const
{
    Multigraph sub = graph_.induced(keep);
    std::vector<EdgeDir> dirs;
    dirs.reserve(sub.edge_count());
    for (const Edge& e : sub.edges())
        dirs.push_back(dir_[static_cast<std::size_t>(e.id)]);
    return Biorientation(std::move(sub), dirs);
}

Biorientation Biorientation::without_vertices(std::span<const VertexId> remove) const
{
    std::vector<char> gone(graph_.vertex_id_bound(), 0);
    for (VertexId v : remove) {
        if (!graph_.has_vertex(v))
            throw InputError("unknown vertex id " + std::to_string(v));
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<VertexId> keep;
    for (VertexId v : graph_.vertices())
        if (!gone[static_cast<std::size_t>(v)])
            keep.push_back(v);
    return induced(keep);
}

std::vector<std::pair<VertexId, VertexId>> Biorientation::arcs() const
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (const Edge& e : graph_.edges()) {
        EdgeDir d = dir_[static_cast<std::size_t>(e.id)];
        if (d == EdgeDir::Forward || d == EdgeDir::Both)
            out.emplace_back(e.u, e.v);
        if (d == EdgeDir::Backward || d == EdgeDir::Both)
            out.emplace_back(e.v, e.u);
    }
    return out;
}

bool Biorientation::has_arc(VertexId from, VertexId to) const
{
    for (const Edge& e : graph_.edges()) {
        EdgeDir d = dir_[static_cast<std::size_t>(e.id)];
        bool fwd = d == EdgeDir::Forward || d == EdgeDir::Both;
        bool bwd = d == EdgeDir::Backward || d == EdgeDir::Both;
        if (fwd && e.u == from && e.v == to)
            return true;
        if (bwd && e.v == from && e.u == to)
            return true;
    }
    return false;
}

std::vector<std::vector<VertexId>> Biorientation::strongly_connected_components() const
{
    // Tarjan; pop order emits terminal components first.
    std::size_t bound = graph_.vertex_id_bound();
    std::vector<std::vector<VertexId>> adj(bound);
    for (auto [from, to] : arcs())
        adj[static_cast<std::size_t>(from)].push_back(to);

    std::vector<int> index(bound, -1);
    std::vector<int> lowlink(bound, 0);
    std::vector<char> on_stack(bound, 0);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> comps;
    int counter = 0;

    std::function<void(VertexId)> visit = [&](VertexId v) {
        auto vi = static_cast<std::size_t>(v);
        index[vi] = lowlink[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
        for (VertexId w : adj[vi]) {
            auto wi = static_cast<std::size_t>(w);
            if (index[wi] < 0) {
                visit(w);
                lowlink[vi] = std::min(lowlink[vi], lowlink[wi]);
            } else if (on_stack[wi]) {
                lowlink[vi] = std::min(lowlink[vi], index[wi]);
            }
        }
        if (lowlink[vi] == index[vi]) {
            std::vector<VertexId> comp;
            VertexId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack[static_cast<std::size_t>(w)] = 0;
                comp.push_back(w);
            } while (w != v);
            std::sort(comp.begin(), comp.end());
            comps.push_back(std::move(comp));
        }
    };

    for (VertexId v : graph_.vertices())
        if (index[static_cast<std::size_t>(v)] < 0)
            visit(v);
    return comps;
}

bool Biorientation::operator==(const Biorientation& other) const
{
    if (!(graph_ == other.graph_))
        return false;
    auto es = graph_.edges();
    auto os = other.graph_.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (dir_[static_cast<std::size_t>(es[i].id)]
            != other.dir_[static_cast<std::size_t>(os[i].id)])
            return false;
    return true;
}

} // namespace dpc
