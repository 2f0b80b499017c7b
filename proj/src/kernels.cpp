#include "dpcolor/kernels.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_map>

namespace dpc {

namespace {

std::vector<std::vector<VertexId>> intra_component_adjacency(const Biorientation& digraph,
    const std::vector<int>& comp_of)
{
    std::vector<std::vector<VertexId>> adj(digraph.graph().vertex_id_bound());
    for (auto [from, to] : digraph.arcs()) {
        if (comp_of[static_cast<std::size_t>(from)] == comp_of[static_cast<std::size_t>(to)])
            adj[static_cast<std::size_t>(from)].push_back(to);
    }
    return adj;
}

// BFS over `adj` from `source`; fills dist (arc count) and parent.
void bfs(const std::vector<std::vector<VertexId>>& adj, VertexId source,
    std::vector<int>& dist, std::vector<VertexId>& parent)
{
    dist.assign(adj.size(), -1);
    parent.assign(adj.size(), -1);
    std::deque<VertexId> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        VertexId x = queue.front();
        queue.pop_front();
        for (VertexId y : adj[static_cast<std::size_t>(x)]) {
            auto yi = static_cast<std::size_t>(y);
            if (dist[yi] < 0) {
                dist[yi] = dist[static_cast<std::size_t>(x)] + 1;
                parent[yi] = x;
                queue.push_back(y);
            }
        }
    }
}

std::vector<VertexId> path_from_parents(const std::vector<VertexId>& parent,
    VertexId source, VertexId target)
{
    std::vector<VertexId> path;
    for (VertexId v = target; v != source; v = parent[static_cast<std::size_t>(v)])
        path.push_back(v);
    path.push_back(source);
    std::reverse(path.begin(), path.end());
    return path;
}

// Splits a closed directed walk of odd arc count at repeated vertices until
// a simple odd cycle remains; each split keeps the odd half.
std::vector<VertexId> reduce_to_simple_odd_cycle(std::vector<VertexId> walk)
{
    for (;;) {
        int i = -1, j = -1;
        std::unordered_map<VertexId, int> first_seen;
        int last = static_cast<int>(walk.size()) - 1;
        for (int p = 0; p <= last; ++p) {
            auto it = first_seen.find(walk[static_cast<std::size_t>(p)]);
            if (it == first_seen.end()) {
                first_seen.emplace(walk[static_cast<std::size_t>(p)], p);
            } else if (!(it->second == 0 && p == last)) {
                i = it->second;
                j = p;
                break;
            }
        }
        if (i < 0)
            return walk;
        if ((j - i) % 2 == 1) {
            walk = std::vector<VertexId>(walk.begin() + i, walk.begin() + j + 1);
        } else {
            std::vector<VertexId> outer(walk.begin(), walk.begin() + i + 1);
            outer.insert(outer.end(), walk.begin() + j + 1, walk.end());
            walk = std::move(outer);
        }
    }
}

OddCycleWitness extract_witness(const std::vector<std::vector<VertexId>>& adj,
    const std::vector<int>& dist, const std::vector<VertexId>& parent,
    VertexId root, VertexId x, VertexId y)
{
    // Two closed walks through root differ by one arc in parity; exactly one
    // is odd because dist[x] and dist[y] share parity.
    std::vector<int> back_dist;
    std::vector<VertexId> back_parent;
    bfs(adj, y, back_dist, back_parent);
    std::vector<VertexId> y_to_root = path_from_parents(back_parent, y, root);

    std::vector<VertexId> walk = path_from_parents(parent, root, x);
    walk.insert(walk.end(), y_to_root.begin(), y_to_root.end());
    if ((walk.size() - 1) % 2 == 0) {
        walk = path_from_parents(parent, root, y);
        walk.insert(walk.end(), y_to_root.begin() + 1, y_to_root.end());
    }
    return OddCycleWitness{reduce_to_simple_odd_cycle(std::move(walk))};
}

} // namespace

bool is_kernel(const Biorientation& digraph, std::span<const VertexId> candidate)
{
    const Multigraph& g = digraph.graph();
    std::vector<char> in_set(g.vertex_id_bound(), 0);
    for (VertexId v : candidate) {
        if (!g.has_vertex(v))
            throw InputError("kernel candidate names unknown vertex id " + std::to_string(v));
        in_set[static_cast<std::size_t>(v)] = 1;
    }
    // every edge inside the set yields an arc between members
    for (const Edge& e : g.edges())
        if (in_set[static_cast<std::size_t>(e.u)] && in_set[static_cast<std::size_t>(e.v)])
            return false;
    std::vector<char> dominated(g.vertex_id_bound(), 0);
    for (auto [from, to] : digraph.arcs())
        if (in_set[static_cast<std::size_t>(to)])
            dominated[static_cast<std::size_t>(from)] = 1;
    for (VertexId v : g.vertices())
        if (!in_set[static_cast<std::size_t>(v)] && !dominated[static_cast<std::size_t>(v)])
            return false;
    return true;
}

std::optional<OddCycleWitness> find_odd_directed_cycle(const Biorientation& digraph)
{
    auto comps = digraph.strongly_connected_components();
    std::vector<int> comp_of(digraph.graph().vertex_id_bound(), -1);
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (VertexId v : comps[i])
            comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
    auto adj = intra_component_adjacency(digraph, comp_of);

    std::vector<int> dist;
    std::vector<VertexId> parent;
    for (const auto& comp : comps) {
        if (comp.size() < 2)
            continue; // a loopless single vertex carries no cycle
        VertexId root = comp[0];
        bfs(adj, root, dist, parent);
        for (VertexId x : comp) {
            for (VertexId y : adj[static_cast<std::size_t>(x)]) {
                if ((dist[static_cast<std::size_t>(x)] & 1) == (dist[static_cast<std::size_t>(y)] & 1))
                    return extract_witness(adj, dist, parent, root, x, y);
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexId> richardson_kernel(const Biorientation& digraph)
{
    if (auto witness = find_odd_directed_cycle(digraph))
        throw OddCycleError(std::move(*witness));

    std::vector<VertexId> kernel;
    Biorientation current = digraph;
    while (current.graph().vertex_count() > 0) {
        auto comps = current.strongly_connected_components();
        std::size_t bound = current.graph().vertex_id_bound();
        std::vector<int> comp_of(bound, -1);
        for (std::size_t i = 0; i < comps.size(); ++i)
            for (VertexId v : comps[i])
                comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

        std::vector<char> has_out_arc(comps.size(), 0);
        for (auto [from, to] : current.arcs())
            if (comp_of[static_cast<std::size_t>(from)] != comp_of[static_cast<std::size_t>(to)])
                has_out_arc[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(from)])] = 1;

        // terminal component containing the smallest vertex id
        int pick = -1;
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (has_out_arc[i])
                continue;
            if (pick < 0 || comps[i][0] < comps[static_cast<std::size_t>(pick)][0])
                pick = static_cast<int>(i);
        }
        const std::vector<VertexId>& terminal = comps[static_cast<std::size_t>(pick)];

        std::vector<VertexId> comp_kernel;
        if (terminal.size() == 1) {
            comp_kernel = terminal;
        } else {
            // 2-color by walk parity from the lowest vertex; consistent by
            // the odd-cycle-free precondition, and the even class is a
            // kernel of this strongly connected component.
            auto adj = intra_component_adjacency(current, comp_of);
            std::vector<int> dist;
            std::vector<VertexId> parent;
            bfs(adj, terminal[0], dist, parent);
            for (VertexId v : terminal)
                if (dist[static_cast<std::size_t>(v)] % 2 == 0)
                    comp_kernel.push_back(v);
        }
        kernel.insert(kernel.end(), comp_kernel.begin(), comp_kernel.end());

        std::vector<char> remove_flag(bound, 0);
        for (VertexId v : terminal)
            remove_flag[static_cast<std::size_t>(v)] = 1;
        std::vector<char> in_kernel(bound, 0);
        for (VertexId v : comp_kernel)
            in_kernel[static_cast<std::size_t>(v)] = 1;
        for (auto [from, to] : current.arcs())
            if (in_kernel[static_cast<std::size_t>(to)])
                remove_flag[static_cast<std::size_t>(from)] = 1;
        std::vector<VertexId> remove;
        for (VertexId v : current.graph().vertices())
            if (remove_flag[static_cast<std::size_t>(v)])
                remove.push_back(v);
        current = current.without_vertices(remove);
    }
    std::sort(kernel.begin(), kernel.end());
    return kernel;
}

std::optional<std::vector<VertexId>> brute_force_kernel(const Biorientation& digraph,
    std::size_t max_vertices)
{
    const Multigraph& g = digraph.graph();
    std::size_t n = g.vertex_count();
    if (n > max_vertices)
        throw ResourceLimitError("exhaustive kernel search limited to "
            + std::to_string(max_vertices) + " vertices, digraph has " + std::to_string(n));
    if (n > 63)
        throw ResourceLimitError("exhaustive kernel search supports at most 63 vertices");

    std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
    std::sort(verts.begin(), verts.end());
    std::vector<int> pos(g.vertex_id_bound(), -1);
    for (std::size_t i = 0; i < n; ++i)
        pos[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);

    std::vector<std::uint64_t> edge_nbr(n, 0), out_to(n, 0);
    for (const Edge& e : g.edges()) {
        int pu = pos[static_cast<std::size_t>(e.u)];
        int pv = pos[static_cast<std::size_t>(e.v)];
        edge_nbr[static_cast<std::size_t>(pu)] |= std::uint64_t{1} << pv;
        edge_nbr[static_cast<std::size_t>(pv)] |= std::uint64_t{1} << pu;
    }
    for (auto [from, to] : digraph.arcs())
        out_to[static_cast<std::size_t>(pos[static_cast<std::size_t>(from)])] |=
            std::uint64_t{1} << pos[static_cast<std::size_t>(to)];

    std::uint64_t full = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    std::vector<int> chosen;

    // depth-first over independent sets, lexicographic by sorted id sequence
    std::function<bool(std::uint64_t, int)> search = [&](std::uint64_t mask, int last) -> bool {
        std::uint64_t rest = full & ~mask;
        bool dominates = true;
        for (std::uint64_t r = rest; r;) {
            int p = std::countr_zero(r);
            r &= r - 1;
            if (!(out_to[static_cast<std::size_t>(p)] & mask)) {
                dominates = false;
                break;
            }
        }
        if (dominates)
            return true;
        for (int next = last + 1; next < static_cast<int>(n); ++next) {
            if (edge_nbr[static_cast<std::size_t>(next)] & mask)
                continue;
            chosen.push_back(next);
            if (search(mask | (std::uint64_t{1} << next), next))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    if (!search(0, -1))
        return std::nullopt;
    std::vector<VertexId> kernel;
    kernel.reserve(chosen.size());
    for (int p : chosen)
        kernel.push_back(verts[static_cast<std::size_t>(p)]);
    return kernel;
}

KernelPerfectness is_kernel_perfect(const Biorientation& digraph, std::size_t max_vertices)
{
    const Multigraph& g = digraph.graph();
    std::size_t n = g.vertex_count();
    if (n > max_vertices)
        throw ResourceLimitError("kernel-perfectness check limited to "
            + std::to_string(max_vertices) + " vertices, digraph has " + std::to_string(n));

    std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
    std::sort(verts.begin(), verts.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<VertexId> subset;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i))
                subset.push_back(verts[i]);
        Biorientation sub = digraph.induced(subset);
        if (!brute_force_kernel(sub, n == 0 ? 1 : n).has_value())
            return KernelPerfectness{false, std::move(subset)};
    }
    return KernelPerfectness{true, {}};
}

} // namespace dpc
