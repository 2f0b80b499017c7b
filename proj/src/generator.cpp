#include "dpcolor/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "dpcolor/coloring.hpp"
#include "dpcolor/kernels.hpp"

namespace dpc {

namespace {

// mt19937_64 gives a platform-pinned sequence; the helpers below avoid the
// implementation-defined std distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    int below(int n) { return n > 0 ? static_cast<int>(next() % static_cast<std::uint64_t>(n)) : 0; }

    bool chance(double p)
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& values)
    {
        for (std::size_t i = values.size(); i > 1; --i)
            std::swap(values[i - 1], values[static_cast<std::size_t>(below(static_cast<int>(i)))]);
    }

private:
    std::mt19937_64 gen_;
};

void check_params(const GenParams& p)
{
    if (p.n < 1)
        throw InputError("generator needs at least one vertex");
    for (double prob : {p.straight_edge_prob, p.twisted_edge_prob})
        if (prob < 0.0 || prob > 1.0)
            throw InputError("edge probabilities must lie in [0, 1]");
    if (p.extra_colors < 0)
        throw InputError("extra_colors must be nonnegative");
}

std::vector<int> random_list(Rng& rng, int size, int universe_slack)
{
    std::vector<int> universe;
    for (int c = 1; c <= size + universe_slack; ++c)
        universe.push_back(c);
    rng.shuffle(universe);
    universe.resize(static_cast<std::size_t>(size));
    std::sort(universe.begin(), universe.end());
    return universe;
}

PartialMatching random_derangement_matching(Rng& rng, const std::vector<int>& list_u,
    const std::vector<int>& list_v)
{
    std::vector<int> lu = list_u;
    std::vector<int> lv = list_v;
    rng.shuffle(lu);
    rng.shuffle(lv);
    int limit = static_cast<int>(std::min(lu.size(), lv.size()));
    int size = rng.below(limit + 1);
    PartialMatching m;
    for (int i = 0; i < size; ++i)
        if (lu[static_cast<std::size_t>(i)] != lv[static_cast<std::size_t>(i)])
            m.pairs.emplace_back(lu[static_cast<std::size_t>(i)], lv[static_cast<std::size_t>(i)]);
    m.normalize();
    return m;
}

} // namespace

CorrespondenceInstance gen_certified_instance(const GenParams& params)
{
    check_params(params);
    Rng rng(params.seed);

    Multigraph g;
    for (int i = 0; i < params.n; ++i)
        g.add_vertex("v" + std::to_string(i));

    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    rng.shuffle(order);
    std::vector<int> side(static_cast<std::size_t>(params.n));
    for (auto& s : side)
        s = rng.below(2);

    int edge_counter = 0;
    std::vector<EdgeDir> dirs;
    std::vector<EdgeId> straight_edges, twisted_edges;

    if (params.bipartite_straight) {
        for (int i = 0; i < params.n; ++i) {
            for (int j = i + 1; j < params.n; ++j) {
                if (side[static_cast<std::size_t>(i)] == side[static_cast<std::size_t>(j)])
                    continue;
                if (!rng.chance(params.straight_edge_prob))
                    continue;
                EdgeId e = g.add_edge("e" + std::to_string(edge_counter++), i, j);
                straight_edges.push_back(e);
                int roll = rng.below(3);
                dirs.push_back(roll == 0 ? EdgeDir::Forward
                                         : roll == 1 ? EdgeDir::Backward : EdgeDir::Both);
            }
        }
    } else {
        // straight edges only from earlier to later in the random order
        for (int i = 0; i < params.n; ++i) {
            for (int j = i + 1; j < params.n; ++j) {
                if (!rng.chance(params.straight_edge_prob))
                    continue;
                EdgeId e = g.add_edge("e" + std::to_string(edge_counter++),
                    order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
                straight_edges.push_back(e);
                dirs.push_back(EdgeDir::Forward);
            }
        }
    }
    for (int i = 0; i < params.n; ++i) {
        for (int j = i + 1; j < params.n; ++j) {
            if (!rng.chance(params.twisted_edge_prob))
                continue;
            EdgeId e = g.add_edge("e" + std::to_string(edge_counter++), i, j);
            twisted_edges.push_back(e);
            dirs.push_back(EdgeDir::Both);
        }
    }

    Biorientation orientation(g, dirs);

    CorrespondenceInstance inst;
    inst.graph = g;
    for (VertexId v : g.vertices()) {
        int size = orientation.out_degree(v) + 1 + params.extra_colors;
        inst.lists.set(v, random_list(rng, size, 4));
    }
    inst.matchings.assign(g.edge_id_bound(), PartialMatching{});
    for (EdgeId e : straight_edges) {
        const Edge& edge = g.edge(e);
        inst.matchings[static_cast<std::size_t>(e)] =
            identity_pairs(inst.lists.at(edge.u), inst.lists.at(edge.v));
    }
    for (EdgeId e : twisted_edges) {
        const Edge& edge = g.edge(e);
        inst.matchings[static_cast<std::size_t>(e)] =
            random_derangement_matching(rng, inst.lists.at(edge.u), inst.lists.at(edge.v));
    }
    inst.orientation = std::move(orientation);

    HypothesisReport report = check_hypotheses(inst, CheckMode::Certified);
    if (!report.certified_polynomial() || !report.derangement_ok)
        throw std::logic_error("generated instance failed its own certification");
    return inst;
}

SignedInput gen_certified_signed(const GenParams& params)
{
    check_params(params);
    Rng rng(params.seed);

    Multigraph g;
    for (int i = 0; i < params.n; ++i)
        g.add_vertex("v" + std::to_string(i));

    std::vector<VertexId> order(g.vertices().begin(), g.vertices().end());
    rng.shuffle(order);

    int edge_counter = 0;
    std::vector<EdgeDir> dirs;
    std::vector<int> signs;
    for (int i = 0; i < params.n; ++i) {
        for (int j = i + 1; j < params.n; ++j) {
            if (!rng.chance(params.straight_edge_prob))
                continue;
            g.add_edge("e" + std::to_string(edge_counter++),
                order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
            dirs.push_back(EdgeDir::Forward);
            signs.push_back(+1);
        }
    }
    for (int i = 0; i < params.n; ++i) {
        for (int j = i + 1; j < params.n; ++j) {
            if (!rng.chance(params.twisted_edge_prob))
                continue;
            g.add_edge("e" + std::to_string(edge_counter++), i, j);
            dirs.push_back(EdgeDir::Both);
            signs.push_back(-1);
        }
    }

    SignedGraph sg{g, {}};
    sg.sign_by_edge.assign(g.edge_id_bound(), +1);
    {
        std::size_t i = 0;
        for (const Edge& e : g.edges())
            sg.sign_by_edge[static_cast<std::size_t>(e.id)] = signs[i++];
    }
    Biorientation orientation(g, dirs);

    // lists: zero-free, sized to the out-degree, seeding negations of
    // earlier neighbors' colors across negative edges
    ColorLists lists;
    for (VertexId v : g.vertices()) {
        int size = orientation.out_degree(v) + 1 + params.extra_colors;
        std::vector<int> list;
        auto push_unique = [&](int c) {
            if (static_cast<int>(list.size()) < size
                && std::find(list.begin(), list.end(), c) == list.end())
                list.push_back(c);
        };
        for (const Edge& e : g.edges()) {
            if (sg.sign(e.id) != -1)
                continue;
            VertexId other = e.u == v ? e.v : e.v == v ? e.u : -1;
            if (other < 0 || other > v)
                continue; // only neighbors whose lists already exist
            for (int c : lists.at(other))
                if (rng.chance(0.5))
                    push_unique(-c);
        }
        while (static_cast<int>(list.size()) < size) {
            int magnitude = 1 + rng.below(size + 3);
            push_unique(rng.below(2) == 0 ? magnitude : -magnitude);
        }
        std::sort(list.begin(), list.end());
        lists.set(v, std::move(list));
    }

    // construction-time guarantees, re-asserted before returning
    for (const Edge& e : g.edges())
        if (sg.sign(e.id) == -1 && orientation.direction(e.id) != EdgeDir::Both)
            throw std::logic_error("generated signed instance has a one-way negative edge");
    std::vector<EdgeDir> pos_dirs;
    Multigraph positive = sg.positive_subgraph();
    for (const Edge& e : positive.edges())
        pos_dirs.push_back(orientation.direction(e.id));
    if (find_odd_directed_cycle(Biorientation(positive, pos_dirs)))
        throw std::logic_error("generated signed instance has an odd cycle on its positive part");

    return SignedInput{std::move(sg), std::move(lists), std::move(orientation)};
}

Biorientation gen_no_odd_cycle_digraph(int n, double arc_prob, std::uint64_t seed)
{
    if (n < 1)
        throw InputError("generator needs at least one vertex");
    if (arc_prob < 0.0 || arc_prob > 1.0)
        throw InputError("arc probability must lie in [0, 1]");
    Rng rng(seed);

    Multigraph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex("v" + std::to_string(i));
    std::vector<int> side(static_cast<std::size_t>(n));
    for (auto& s : side)
        s = rng.below(2);

    int edge_counter = 0;
    std::vector<EdgeDir> dirs;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (side[static_cast<std::size_t>(i)] == side[static_cast<std::size_t>(j)])
                continue;
            if (!rng.chance(arc_prob))
                continue;
            g.add_edge("e" + std::to_string(edge_counter++), i, j);
            int roll = rng.below(3);
            dirs.push_back(roll == 0 ? EdgeDir::Forward
                                     : roll == 1 ? EdgeDir::Backward : EdgeDir::Both);
        }
    }
    Biorientation result(std::move(g), dirs);
    if (find_odd_directed_cycle(result))
        throw std::logic_error("bipartition-crossing digraph produced an odd cycle");
    return result;
}

} // namespace dpc
