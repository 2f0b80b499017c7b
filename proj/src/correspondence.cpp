#include "dpcolor/correspondence.hpp"

#include <algorithm>
#include <set>

namespace dpc {

const std::vector<int> ColorLists::empty_{};

void ColorLists::set(VertexId v, std::vector<int> colors)
{
    auto i = static_cast<std::size_t>(v);
    if (i >= by_id_.size())
        by_id_.resize(i + 1);
    by_id_[i] = std::move(colors);
}

const std::vector<int>& ColorLists::at(VertexId v) const
{
    auto i = static_cast<std::size_t>(v);
    return i < by_id_.size() ? by_id_[i] : empty_;
}

bool ColorLists::contains(VertexId v, int color) const
{
    const auto& list = at(v);
    return std::find(list.begin(), list.end(), color) != list.end();
}

bool PartialMatching::forbids(int color_u, int color_v) const
{
    return std::find(pairs.begin(), pairs.end(), std::pair{color_u, color_v}) != pairs.end();
}

std::optional<int> PartialMatching::partner_of_u(int color_u) const
{
    for (const auto& [cu, cv] : pairs)
        if (cu == color_u)
            return cv;
    return std::nullopt;
}

std::optional<int> PartialMatching::partner_of_v(int color_v) const
{
    for (const auto& [cu, cv] : pairs)
        if (cv == color_v)
            return cu;
    return std::nullopt;
}

void PartialMatching::normalize()
{
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
}

const PartialMatching& CorrespondenceInstance::matching(EdgeId e) const
{
    graph.edge(e); // existence check
    return matchings[static_cast<std::size_t>(e)];
}

EdgeClass CorrespondenceInstance::classify(EdgeId e) const
{
    const PartialMatching& m = matching(e);
    if (m.empty())
        return EdgeClass::Empty;
    for (const auto& [cu, cv] : m.pairs)
        if (cu != cv)
            return EdgeClass::Twisted;
    return EdgeClass::Straight;
}

namespace {

Multigraph class_subgraph(const CorrespondenceInstance& inst, EdgeClass cls)
{
    std::vector<EdgeId> keep;
    for (const Edge& e : inst.graph.edges())
        if (inst.classify(e.id) == cls)
            keep.push_back(e.id);
    return inst.graph.edge_subgraph(keep);
}

} // namespace

Multigraph CorrespondenceInstance::straight_subgraph() const
{
    return class_subgraph(*this, EdgeClass::Straight);
}

Multigraph CorrespondenceInstance::twisted_subgraph() const
{
    return class_subgraph(*this, EdgeClass::Twisted);
}

bool CorrespondenceInstance::is_partial_derangement(EdgeId e) const
{
    for (const auto& [cu, cv] : matching(e).pairs)
        if (cu == cv)
            return false;
    return true;
}

CorrespondenceInstance::DerangementCheck CorrespondenceInstance::derangement_check() const
{
    DerangementCheck result;
    for (const Edge& e : graph.edges())
        if (classify(e.id) == EdgeClass::Twisted && !is_partial_derangement(e.id))
            result.violating_edges.push_back(e.id);
    result.ok = result.violating_edges.empty();
    return result;
}

CorrespondenceInstance CorrespondenceInstance::restricted(std::span<const VertexId> deleted,
    const std::vector<std::vector<int>>& removed_colors) const
{
    std::vector<char> gone(graph.vertex_id_bound(), 0);
    for (VertexId v : deleted) {
        if (!graph.has_vertex(v))
            throw InputError("restriction deletes unknown vertex id " + std::to_string(v));
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<VertexId> survivors;
    for (VertexId v : graph.vertices())
        if (!gone[static_cast<std::size_t>(v)])
            survivors.push_back(v);

    auto removed_at = [&](VertexId v) -> const std::vector<int>* {
        auto i = static_cast<std::size_t>(v);
        if (i < removed_colors.size() && !removed_colors[i].empty())
            return &removed_colors[i];
        return nullptr;
    };

    CorrespondenceInstance out;
    out.graph = graph.induced(survivors);
    for (VertexId v : survivors) {
        std::vector<int> list = lists.at(v);
        if (const auto* removed = removed_at(v)) {
            for (int c : *removed)
                if (!lists.contains(v, c))
                    throw InputError("restriction removes color " + std::to_string(c)
                        + " absent from the list of vertex '" + graph.vertex_label(v) + "'");
            list.erase(std::remove_if(list.begin(), list.end(),
                           [&](int c) {
                               return std::find(removed->begin(), removed->end(), c) != removed->end();
                           }),
                list.end());
        }
        out.lists.set(v, std::move(list));
    }
    out.matchings.assign(graph.edge_id_bound(), PartialMatching{});
    for (const Edge& e : out.graph.edges()) {
        const auto* rem_u = removed_at(e.u);
        const auto* rem_v = removed_at(e.v);
        PartialMatching kept;
        for (const auto& [cu, cv] : matching(e.id).pairs) {
            bool drop = (rem_u && std::find(rem_u->begin(), rem_u->end(), cu) != rem_u->end())
                || (rem_v && std::find(rem_v->begin(), rem_v->end(), cv) != rem_v->end());
            if (!drop)
                kept.pairs.emplace_back(cu, cv);
        }
        out.matchings[static_cast<std::size_t>(e.id)] = std::move(kept);
    }
    if (orientation)
        out.orientation = orientation->without_vertices(deleted);
    return out;
}

std::vector<Violation> CorrespondenceInstance::validate() const
{
    std::vector<Violation> out;
    for (VertexId v : graph.vertices()) {
        const auto& list = lists.at(v);
        std::set<int> seen;
        for (int c : list)
            if (!seen.insert(c).second)
                out.push_back({"duplicate-color", graph.vertex_label(v),
                    "color " + std::to_string(c) + " repeats in the list of vertex '"
                        + graph.vertex_label(v) + "'"});
    }
    if (matchings.size() < graph.edge_id_bound()) {
        out.push_back({"missing-matching", "",
            "matchings cover " + std::to_string(matchings.size()) + " edge ids of "
                + std::to_string(graph.edge_id_bound())});
        return out;
    }
    for (const Edge& e : graph.edges()) {
        const PartialMatching& m = matchings[static_cast<std::size_t>(e.id)];
        std::set<int> used_u, used_v;
        for (const auto& [cu, cv] : m.pairs) {
            const std::string& label = graph.edge_label(e.id);
            if (!lists.contains(e.u, cu))
                out.push_back({"color-not-in-list", label,
                    "edge '" + label + "' matches color " + std::to_string(cu)
                        + " absent from the list of vertex '" + graph.vertex_label(e.u) + "'"});
            if (!lists.contains(e.v, cv))
                out.push_back({"color-not-in-list", label,
                    "edge '" + label + "' matches color " + std::to_string(cv)
                        + " absent from the list of vertex '" + graph.vertex_label(e.v) + "'"});
            if (!used_u.insert(cu).second)
                out.push_back({"not-a-matching", label,
                    "edge '" + label + "' matches color " + std::to_string(cu)
                        + " at vertex '" + graph.vertex_label(e.u) + "' more than once"});
            if (!used_v.insert(cv).second)
                out.push_back({"not-a-matching", label,
                    "edge '" + label + "' matches color " + std::to_string(cv)
                        + " at vertex '" + graph.vertex_label(e.v) + "' more than once"});
        }
    }
    if (orientation && !(orientation->graph() == graph))
        out.push_back({"orientation-mismatch", "",
            "orientation is defined over a different graph"});
    return out;
}

bool CorrespondenceInstance::operator==(const CorrespondenceInstance& other) const
{
    if (!(graph == other.graph))
        return false;
    auto vs = graph.vertices();
    auto os = other.graph.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (lists.at(vs[i]) != other.lists.at(os[i]))
            return false;
    auto es = graph.edges();
    auto oes = other.graph.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (matching(es[i].id).pairs != other.matching(oes[i].id).pairs)
            return false;
    if (orientation.has_value() != other.orientation.has_value())
        return false;
    if (orientation && !(*orientation == *other.orientation))
        return false;
    return true;
}

PartialMatching identity_pairs(const std::vector<int>& list_u, const std::vector<int>& list_v)
{
    PartialMatching m;
    for (int c : list_u)
        if (std::find(list_v.begin(), list_v.end(), c) != list_v.end())
            m.pairs.emplace_back(c, c);
    m.normalize();
    return m;
}

PartialMatching identity_matching(const CorrespondenceInstance& inst, EdgeId e)
{
    const Edge& edge = inst.graph.edge(e);
    return identity_pairs(inst.lists.at(edge.u), inst.lists.at(edge.v));
}

} // namespace dpc
