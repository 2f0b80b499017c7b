#include "dpcolor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace dpc {

namespace {

std::uint64_t saturating_product(std::uint64_t a, std::uint64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    if (a > std::numeric_limits<std::uint64_t>::max() / b)
        return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

struct Assignments {
    const CorrespondenceInstance& inst;
    std::vector<VertexId> order;
    struct Constraint {
        const PartialMatching* matching;
        int earlier_pos;
        bool earlier_is_u; // the already-assigned endpoint is the edge's u
    };
    std::vector<std::vector<Constraint>> constraints; // by position

    explicit Assignments(const CorrespondenceInstance& instance)
        : inst(instance), order(instance.graph.vertices().begin(), instance.graph.vertices().end())
    {
        std::vector<int> pos(inst.graph.vertex_id_bound(), -1);
        for (std::size_t i = 0; i < order.size(); ++i)
            pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        constraints.resize(order.size());
        for (const Edge& e : inst.graph.edges()) {
            int pu = pos[static_cast<std::size_t>(e.u)];
            int pv = pos[static_cast<std::size_t>(e.v)];
            const PartialMatching* m = &inst.matching(e.id);
            if (pu < pv)
                constraints[static_cast<std::size_t>(pv)].push_back({m, pu, true});
            else
                constraints[static_cast<std::size_t>(pu)].push_back({m, pv, false});
        }
    }

    std::uint64_t space() const
    {
        std::uint64_t total = 1;
        for (VertexId v : order)
            total = saturating_product(total, inst.lists.at(v).size());
        return total;
    }

    // Enumerates valid assignments in lexicographic order; the visitor
    // returns true to stop early.
    void enumerate(const std::function<bool(const std::vector<int>&)>& visit) const
    {
        std::vector<int> chosen(order.size(), 0);
        bool stop = false;
        std::function<void(std::size_t)> descend = [&](std::size_t depth) {
            if (stop)
                return;
            if (depth == order.size()) {
                stop = visit(chosen);
                return;
            }
            for (int color : inst.lists.at(order[depth])) {
                bool allowed = true;
                for (const Constraint& c : constraints[depth]) {
                    int earlier = chosen[static_cast<std::size_t>(c.earlier_pos)];
                    bool forbidden = c.earlier_is_u ? c.matching->forbids(earlier, color)
                                                    : c.matching->forbids(color, earlier);
                    if (forbidden) {
                        allowed = false;
                        break;
                    }
                }
                if (!allowed)
                    continue;
                chosen[depth] = color;
                descend(depth + 1);
                if (stop)
                    return;
            }
        };
        descend(0);
    }

    Coloring to_coloring(const std::vector<int>& chosen) const
    {
        Coloring phi;
        for (std::size_t i = 0; i < order.size(); ++i)
            phi[order[i]] = chosen[i];
        return phi;
    }
};

void check_budget(const Assignments& space, const SearchBudget& budget)
{
    std::uint64_t total = space.space();
    if (total > budget.max_assignments)
        throw ResourceLimitError("assignment space of " + std::to_string(total)
            + " exceeds the budget of " + std::to_string(budget.max_assignments));
}

} // namespace

std::optional<Coloring> brute_force_color(const CorrespondenceInstance& inst,
    const SearchBudget& budget)
{
    Assignments space(inst);
    check_budget(space, budget);
    std::optional<Coloring> found;
    space.enumerate([&](const std::vector<int>& chosen) {
        found = space.to_coloring(chosen);
        return true;
    });
    return found;
}

std::uint64_t count_colorings(const CorrespondenceInstance& inst, const SearchBudget& budget)
{
    Assignments space(inst);
    check_budget(space, budget);
    std::uint64_t count = 0;
    space.enumerate([&](const std::vector<int>&) {
        ++count;
        return false;
    });
    return count;
}

ChoosabilityResult is_f_choosable(const Multigraph& graph, const std::vector<int>& f_by_vertex,
    const std::vector<int>& universe, const SearchBudget& budget)
{
    auto verts = graph.vertices();
    std::uint64_t total = 1;
    for (VertexId v : verts) {
        int want = f_by_vertex[static_cast<std::size_t>(v)];
        if (want < 0)
            throw InputError("list size demand must be nonnegative");
        // C(|universe|, want)
        std::uint64_t ways = 1;
        if (want > static_cast<int>(universe.size())) {
            ways = 0;
        } else {
            for (int i = 0; i < want; ++i)
                ways = saturating_product(ways, universe.size() - i) / (i + 1);
        }
        total = saturating_product(total, ways);
    }
    if (total > budget.max_list_assignments)
        throw ResourceLimitError("list-assignment space of " + std::to_string(total)
            + " exceeds the budget of " + std::to_string(budget.max_list_assignments));

    // odometer over one combination of the universe per vertex
    std::size_t n = verts.size();
    std::vector<std::vector<int>> picks(n);
    ChoosabilityResult result{true, {}};

    std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
        if (depth == n) {
            CorrespondenceInstance inst;
            inst.graph = graph;
            for (std::size_t i = 0; i < n; ++i)
                inst.lists.set(verts[i], picks[i]);
            inst.matchings.assign(graph.edge_id_bound(), PartialMatching{});
            for (const Edge& e : graph.edges())
                inst.matchings[static_cast<std::size_t>(e.id)] =
                    identity_pairs(inst.lists.at(e.u), inst.lists.at(e.v));
            if (!brute_force_color(inst, budget)) {
                result.choosable = false;
                for (std::size_t i = 0; i < n; ++i)
                    result.witness.set(verts[i], picks[i]);
                return true;
            }
            return false;
        }
        int want = f_by_vertex[static_cast<std::size_t>(verts[depth])];
        std::vector<int> idx(static_cast<std::size_t>(want));
        std::function<bool(int, int)> combine = [&](int slot, int from) -> bool {
            if (slot == want) {
                picks[depth].clear();
                for (int i : idx)
                    picks[depth].push_back(universe[static_cast<std::size_t>(i)]);
                return assign(depth + 1);
            }
            for (int i = from; i < static_cast<int>(universe.size()); ++i) {
                idx[static_cast<std::size_t>(slot)] = i;
                if (combine(slot + 1, i + 1))
                    return true;
            }
            return false;
        };
        return combine(0, 0);
    };
    assign(0);
    return result;
}

} // namespace dpc
