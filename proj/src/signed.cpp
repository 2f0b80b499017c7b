#include "dpcolor/signed.hpp"

#include <algorithm>

namespace dpc {

int SignedGraph::sign(EdgeId e) const
{
    graph.edge(e); // existence check
    return sign_by_edge[static_cast<std::size_t>(e)];
}

namespace {

Multigraph sign_subgraph(const SignedGraph& sg, int wanted)
{
    std::vector<EdgeId> keep;
    for (const Edge& e : sg.graph.edges())
        if (sg.sign(e.id) == wanted)
            keep.push_back(e.id);
    return sg.graph.edge_subgraph(keep);
}

} // namespace

Multigraph SignedGraph::positive_subgraph() const
{
    return sign_subgraph(*this, +1);
}

Multigraph SignedGraph::negative_subgraph() const
{
    return sign_subgraph(*this, -1);
}

CorrespondenceInstance reduce_to_correspondence(const SignedGraph& sg, const ColorLists& lists,
    std::optional<Biorientation> orientation)
{
    for (VertexId v : sg.graph.vertices())
        if (lists.contains(v, 0))
            throw InputError("list of vertex '" + sg.graph.vertex_label(v)
                + "' contains 0; signed lists must be zero-free");

    CorrespondenceInstance inst;
    inst.graph = sg.graph;
    inst.lists = lists;
    inst.matchings.assign(sg.graph.edge_id_bound(), PartialMatching{});
    for (const Edge& e : sg.graph.edges()) {
        PartialMatching m;
        if (sg.sign(e.id) == 1) {
            m = identity_pairs(lists.at(e.u), lists.at(e.v));
        } else {
            // c at u pairs with -c at v; injective, so always a matching
            for (int c : lists.at(e.u))
                if (lists.contains(e.v, -c))
                    m.pairs.emplace_back(c, -c);
            m.normalize();
        }
        inst.matchings[static_cast<std::size_t>(e.id)] = std::move(m);
    }
    inst.orientation = std::move(orientation);
    return inst;
}

std::vector<Violation> verify_signed_coloring(const SignedGraph& sg, const ColorLists& lists,
    const SignedColoring& psi)
{
    for (VertexId v : sg.graph.vertices())
        if (!psi.count(v))
            throw InputError("signed coloring misses vertex '" + sg.graph.vertex_label(v) + "'");

    std::vector<Violation> out;
    for (VertexId v : sg.graph.vertices()) {
        int color = psi.at(v);
        if (color == 0)
            out.push_back({"zero-color", sg.graph.vertex_label(v),
                "vertex '" + sg.graph.vertex_label(v) + "' uses color 0"});
        if (!lists.contains(v, color))
            out.push_back({"list-membership", sg.graph.vertex_label(v),
                "vertex '" + sg.graph.vertex_label(v) + "' uses color "
                    + std::to_string(color) + " outside its list"});
    }
    for (const Edge& e : sg.graph.edges()) {
        int cu = psi.at(e.u);
        int cv = psi.at(e.v);
        if (cu == sg.sign(e.id) * cv)
            out.push_back({"sign-conflict", sg.graph.edge_label(e.id),
                "edge '" + sg.graph.edge_label(e.id) + "' has " + std::to_string(cu)
                    + " = " + (sg.sign(e.id) < 0 ? std::string("-") : std::string(""))
                    + std::to_string(cv)});
    }
    return out;
}

SignedColoring color_signed(const SignedGraph& sg, const ColorLists& lists,
    const Biorientation& orientation)
{
    HypothesisReport report;
    report.derangement_ok = true; // negation pairing is fixed-point-free on nonzero lists

    for (const Edge& e : sg.graph.edges())
        if (sg.sign(e.id) == -1 && orientation.direction(e.id) != EdgeDir::Both)
            report.twisted_bidirected_violations.push_back(e.id);
    report.twisted_bidirected_ok = report.twisted_bidirected_violations.empty();

    for (VertexId v : sg.graph.vertices()) {
        int size = static_cast<int>(lists.at(v).size());
        int degree = orientation.out_degree(v);
        if (size < degree + 1)
            report.list_size_violations.push_back({v, size, degree});
    }
    report.list_sizes_ok = report.list_size_violations.empty();

    Multigraph positive = sg.positive_subgraph();
    std::vector<EdgeDir> dirs;
    dirs.reserve(positive.edge_count());
    for (const Edge& e : positive.edges())
        dirs.push_back(orientation.direction(e.id));
    Biorientation positive_oriented(positive, dirs);
    if (auto witness = find_odd_directed_cycle(positive_oriented)) {
        report.odd_cycle = std::move(witness);
        report.certificate = StraightCertificate::Unverified;
    } else {
        report.certificate = StraightCertificate::NoOddCycle;
    }

    if (!report.certified_polynomial())
        throw HypothesisViolation("signed instance does not meet the orientation "
            "preconditions", std::move(report));

    CorrespondenceInstance inst = reduce_to_correspondence(sg, lists, orientation);
    SignedColoring psi = dp_color(inst, CheckMode::Certified);
    if (auto violations = verify_signed_coloring(sg, lists, psi); !violations.empty())
        throw HypothesisViolation("signed coloring failed verification");
    return psi;
}

} // namespace dpc
