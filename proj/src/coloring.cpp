#include "dpcolor/coloring.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace dpc {

namespace {

// Orientation induced on a subgraph whose edges are a subset of the
// oriented graph's, tags preserved.
Biorientation orient_subgraph(const Multigraph& sub, const Biorientation& source)
{
    std::vector<EdgeDir> dirs;
    dirs.reserve(sub.edge_count());
    for (const Edge& e : sub.edges())
        dirs.push_back(source.direction(e.id));
    return Biorientation(sub, dirs);
}

Biorientation oriented_straight_part(const CorrespondenceInstance& inst)
{
    return orient_subgraph(inst.straight_subgraph(), *inst.orientation);
}

std::string join_messages(const std::vector<Violation>& violations)
{
    std::string out;
    for (const Violation& v : violations) {
        if (!out.empty())
            out += "; ";
        out += v.message;
    }
    return out;
}

} // namespace

HypothesisReport check_hypotheses(const CorrespondenceInstance& inst, CheckMode mode,
    const SizeGuards& guards)
{
    if (!inst.orientation)
        throw InputError("hypothesis check requires an orientation");
    if (auto violations = inst.validate(); !violations.empty())
        throw InputError("instance is malformed: " + join_messages(violations));

    const Biorientation& orientation = *inst.orientation;
    HypothesisReport report;

    auto dc = inst.derangement_check();
    report.derangement_ok = dc.ok;
    report.derangement_violations = std::move(dc.violating_edges);

    for (const Edge& e : inst.graph.edges())
        if (inst.classify(e.id) == EdgeClass::Twisted
            && orientation.direction(e.id) != EdgeDir::Both)
            report.twisted_bidirected_violations.push_back(e.id);
    report.twisted_bidirected_ok = report.twisted_bidirected_violations.empty();

    for (VertexId v : inst.graph.vertices()) {
        int size = static_cast<int>(inst.lists.at(v).size());
        int degree = orientation.out_degree(v);
        if (size < degree + 1)
            report.list_size_violations.push_back({v, size, degree});
    }
    report.list_sizes_ok = report.list_size_violations.empty();

    Biorientation straight = oriented_straight_part(inst);
    if (auto witness = find_odd_directed_cycle(straight)) {
        report.odd_cycle = std::move(witness);
        if (mode == CheckMode::GeneralSmall) {
            auto kp = is_kernel_perfect(straight, guards.kernel_perfect_max_vertices);
            if (kp.kernel_perfect) {
                report.certificate = StraightCertificate::KernelPerfectVerified;
            } else {
                report.certificate = StraightCertificate::Unverified;
                report.kernel_perfect_failure = std::move(kp.failing_subset);
            }
        } else {
            report.certificate = StraightCertificate::Unverified;
        }
    } else {
        report.certificate = StraightCertificate::NoOddCycle;
    }
    return report;
}

Coloring dp_color(const CorrespondenceInstance& input, CheckMode mode,
    bool override_hypotheses, std::vector<TraceRound>* trace, const SizeGuards& guards)
{
    HypothesisReport report = check_hypotheses(input, mode, guards);
    bool certified = mode == CheckMode::Certified ? report.certified_polynomial()
                                                  : report.certified();
    if (!certified && !override_hypotheses)
        throw HypothesisViolation("instance is not certified for coloring", std::move(report));

    CorrespondenceInstance inst = input;
    Coloring phi;
    while (inst.graph.vertex_count() > 0) {
        int lowest = std::numeric_limits<int>::max();
        for (VertexId v : inst.graph.vertices()) {
            const auto& list = inst.lists.at(v);
            if (list.empty())
                throw HypothesisViolation("vertex '" + inst.graph.vertex_label(v)
                    + "' ran out of colors");
            lowest = std::min(lowest, *std::min_element(list.begin(), list.end()));
        }

        std::vector<VertexId> candidates;
        for (VertexId v : inst.graph.vertices())
            if (inst.lists.contains(v, lowest))
                candidates.push_back(v);

        Biorientation straight = oriented_straight_part(inst);
        Biorientation candidate_digraph = straight.induced(candidates);
        std::vector<VertexId> kernel;
        if (mode == CheckMode::Certified) {
            kernel = richardson_kernel(candidate_digraph);
        } else {
            auto found = brute_force_kernel(candidate_digraph, guards.brute_kernel_max_vertices);
            if (!found)
                throw HypothesisViolation(
                    "oriented straight part is not kernel-perfect: no kernel on the vertices "
                    "holding color " + std::to_string(lowest));
            kernel = std::move(*found);
        }

        for (VertexId u : kernel)
            phi[u] = lowest;

        // colors matched to the chosen color across edges into the kernel
        std::vector<char> in_kernel(inst.graph.vertex_id_bound(), 0);
        for (VertexId u : kernel)
            in_kernel[static_cast<std::size_t>(u)] = 1;
        std::vector<std::vector<int>> removed(inst.graph.vertex_id_bound());
        for (const Edge& e : inst.graph.edges()) {
            bool u_in = in_kernel[static_cast<std::size_t>(e.u)];
            bool v_in = in_kernel[static_cast<std::size_t>(e.v)];
            if (u_in == v_in)
                continue;
            const PartialMatching& m = inst.matching(e.id);
            VertexId survivor = u_in ? e.v : e.u;
            std::optional<int> partner =
                u_in ? m.partner_of_u(lowest) : m.partner_of_v(lowest);
            if (partner) {
                auto& bucket = removed[static_cast<std::size_t>(survivor)];
                if (std::find(bucket.begin(), bucket.end(), *partner) == bucket.end())
                    bucket.push_back(*partner);
            }
        }
        for (auto& bucket : removed)
            std::sort(bucket.begin(), bucket.end());

        if (trace) {
            TraceRound round{lowest, candidates, kernel, {}};
            for (VertexId v : inst.graph.vertices())
                if (!removed[static_cast<std::size_t>(v)].empty())
                    round.removed.emplace_back(v, removed[static_cast<std::size_t>(v)]);
            trace->push_back(std::move(round));
        }

        inst = inst.restricted(kernel, removed);

        // counting margin: every removed color is covered by an out-arc into
        // the deleted kernel, so surviving lists still exceed out-degrees
        for (VertexId w : inst.graph.vertices()) {
            int size = static_cast<int>(inst.lists.at(w).size());
            int degree = inst.orientation->out_degree(w);
            if (size < degree + 1)
                throw HypothesisViolation("list of vertex '" + inst.graph.vertex_label(w)
                    + "' shrank below its out-degree margin (" + std::to_string(size)
                    + " colors, out-degree " + std::to_string(degree) + ")");
        }
    }

    if (auto violations = verify_coloring(input, phi); !violations.empty())
        throw HypothesisViolation("produced coloring fails verification: "
            + join_messages(violations));
    return phi;
}

std::vector<Violation> verify_coloring(const CorrespondenceInstance& inst, const Coloring& phi)
{
    for (VertexId v : inst.graph.vertices())
        if (!phi.count(v))
            throw InputError("coloring misses vertex '" + inst.graph.vertex_label(v) + "'");
    for (const auto& [v, color] : phi)
        if (!inst.graph.has_vertex(v))
            throw InputError("coloring names unknown vertex id " + std::to_string(v));

    std::vector<Violation> out;
    for (VertexId v : inst.graph.vertices()) {
        int color = phi.at(v);
        if (!inst.lists.contains(v, color))
            out.push_back({"list-membership", inst.graph.vertex_label(v),
                "vertex '" + inst.graph.vertex_label(v) + "' uses color "
                    + std::to_string(color) + " outside its list"});
    }
    for (const Edge& e : inst.graph.edges()) {
        int cu = phi.at(e.u);
        int cv = phi.at(e.v);
        if (inst.matching(e.id).forbids(cu, cv))
            out.push_back({"matched-pair", inst.graph.edge_label(e.id),
                "edge '" + inst.graph.edge_label(e.id) + "' matches the chosen pair ("
                    + std::to_string(cu) + ", " + std::to_string(cv) + ")"});
    }
    return out;
}

Biorientation add_bidirected_edges(const Biorientation& oriented, const Multigraph& bidirected)
{
    const Multigraph& base = oriented.graph();
    if (base.vertex_count() != bidirected.vertex_count())
        throw InputError("vertex sets differ: " + std::to_string(base.vertex_count())
            + " vs " + std::to_string(bidirected.vertex_count()) + " vertices");

    Multigraph combined;
    for (VertexId v : base.vertices())
        combined.add_vertex(base.vertex_label(v));
    for (VertexId v : bidirected.vertices())
        if (!combined.find_vertex(bidirected.vertex_label(v)))
            throw InputError("vertex '" + bidirected.vertex_label(v)
                + "' is missing from the oriented part");

    std::set<std::string> seen_edges;
    std::vector<EdgeDir> dirs;
    auto append = [&](const Multigraph& src, EdgeId id, std::optional<EdgeDir> forced) {
        const Edge& e = src.edge(id);
        const std::string& label = src.edge_label(id);
        if (!seen_edges.insert(label).second)
            throw InputError("edge id '" + label + "' appears in both parts");
        combined.add_edge(label, *combined.find_vertex(src.vertex_label(e.u)),
            *combined.find_vertex(src.vertex_label(e.v)));
        dirs.push_back(forced ? *forced : oriented.direction(id));
    };
    for (const Edge& e : base.edges())
        append(base, e.id, std::nullopt);
    for (const Edge& e : bidirected.edges())
        append(bidirected, e.id, EdgeDir::Both);
    return Biorientation(std::move(combined), dirs);
}

} // namespace dpc
