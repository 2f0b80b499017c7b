#include "dpcolor/io.hpp"

#include <json.hpp>

#include <sstream>

namespace dpc {

namespace {

using json = nlohmann::ordered_json;

json parse_document(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("JSON parse error: ") + e.what());
    }
}

[[noreturn]] void fail(const std::string& path, const std::string& what)
{
    throw InputError(path + ": " + what);
}

const json& member(const json& j, const std::string& path, const std::string& key)
{
    if (!j.is_object())
        fail(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        fail(path, "missing key '" + key + "'");
    return *it;
}

std::string as_string(const json& j, const std::string& path)
{
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

int as_int(const json& j, const std::string& path)
{
    if (!j.is_number_integer())
        fail(path, "expected an integer");
    return j.get<int>();
}

std::vector<int> as_int_array(const json& j, const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

EdgeDir parse_direction(const json& j, const std::string& path)
{
    std::string tag = as_string(j, path);
    if (tag == "uv")
        return EdgeDir::Forward;
    if (tag == "vu")
        return EdgeDir::Backward;
    if (tag == "both")
        return EdgeDir::Both;
    fail(path, "expected \"uv\", \"vu\" or \"both\", got \"" + tag + "\"");
}

std::string direction_tag(EdgeDir d)
{
    switch (d) {
    case EdgeDir::Forward:
        return "uv";
    case EdgeDir::Backward:
        return "vu";
    default:
        return "both";
    }
}

struct ParsedEdges {
    Multigraph graph;
    std::vector<json> edge_objects; // aligned with graph.edges()
    std::optional<Biorientation> orientation;
};

// Shared vertex/edge scaffolding of instance, signed and digraph files.
ParsedEdges parse_edges(const json& doc, bool orientation_required)
{
    ParsedEdges out;
    const json& vertices = member(doc, "$", "vertices");
    if (!vertices.is_array())
        fail("$.vertices", "expected an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        std::string label = as_string(vertices[i], "$.vertices[" + std::to_string(i) + "]");
        if (out.graph.find_vertex(label))
            fail("$.vertices[" + std::to_string(i) + "]", "duplicate vertex '" + label + "'");
        out.graph.add_vertex(label);
    }

    const json& edges = member(doc, "$", "edges");
    if (!edges.is_array())
        fail("$.edges", "expected an array");
    std::vector<EdgeDir> dirs;
    bool any_oriented = false, any_unoriented = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string path = "$.edges[" + std::to_string(i) + "]";
        const json& edge = edges[i];
        std::string id = as_string(member(edge, path, "id"), path + ".id");
        std::string lu = as_string(member(edge, path, "u"), path + ".u");
        std::string lv = as_string(member(edge, path, "v"), path + ".v");
        auto u = out.graph.find_vertex(lu);
        auto v = out.graph.find_vertex(lv);
        if (!u)
            fail(path + ".u", "unknown vertex '" + lu + "'");
        if (!v)
            fail(path + ".v", "unknown vertex '" + lv + "'");
        for (const Edge& prior : out.graph.edges())
            if (out.graph.edge_label(prior.id) == id)
                fail(path + ".id", "duplicate edge id '" + id + "'");
        if (*u == *v)
            fail(path, "edge '" + id + "' is a loop");
        out.graph.add_edge(id, *u, *v);
        out.edge_objects.push_back(edge);

        if (edge.contains("orientation")) {
            any_oriented = true;
            dirs.push_back(parse_direction(edge["orientation"], path + ".orientation"));
        } else {
            any_unoriented = true;
            dirs.push_back(EdgeDir::Forward);
        }
    }
    if (any_oriented && any_unoriented)
        fail("$.edges", "either all edges carry an \"orientation\" or none does");
    if (orientation_required && any_unoriented)
        fail("$.edges", "every edge needs an \"orientation\"");
    // an edgeless document is trivially oriented
    if (!any_unoriented)
        out.orientation = Biorientation(out.graph, dirs);
    return out;
}

ColorLists parse_lists(const json& doc, const Multigraph& graph, const char* key = "lists")
{
    const json& lists = member(doc, "$", key);
    if (!lists.is_object())
        fail(std::string("$.") + key, "expected an object");
    ColorLists out;
    for (VertexId v : graph.vertices()) {
        const std::string& label = graph.vertex_label(v);
        auto it = lists.find(label);
        if (it == lists.end())
            fail(std::string("$.") + key, "missing list for vertex '" + label + "'");
        out.set(v, as_int_array(*it, std::string("$.") + key + "." + label));
    }
    for (auto it = lists.begin(); it != lists.end(); ++it)
        if (!graph.find_vertex(it.key()))
            fail(std::string("$.") + key + "." + it.key(), "unknown vertex");
    return out;
}

} // namespace

CorrespondenceInstance instance_from_json(const std::string& text)
{
    json doc = parse_document(text);
    ParsedEdges parsed = parse_edges(doc, /*orientation_required=*/false);

    CorrespondenceInstance inst;
    inst.graph = std::move(parsed.graph);
    inst.lists = parse_lists(doc, inst.graph);
    inst.matchings.assign(inst.graph.edge_id_bound(), PartialMatching{});
    auto edges = inst.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string path = "$.edges[" + std::to_string(i) + "].matching";
        const json& matching = member(parsed.edge_objects[i], "$.edges[" + std::to_string(i) + "]",
            "matching");
        PartialMatching m;
        if (matching.is_string()) {
            if (matching.get<std::string>() != "identity")
                fail(path, "expected \"identity\" or an array of pairs");
            m = identity_pairs(inst.lists.at(edges[i].u), inst.lists.at(edges[i].v));
        } else if (matching.is_array()) {
            for (std::size_t p = 0; p < matching.size(); ++p) {
                std::string pair_path = path + "[" + std::to_string(p) + "]";
                const json& pair = matching[p];
                if (!pair.is_array() || pair.size() != 2)
                    fail(pair_path, "expected a [color_u, color_v] pair");
                m.pairs.emplace_back(as_int(pair[0], pair_path + "[0]"),
                    as_int(pair[1], pair_path + "[1]"));
            }
            m.normalize();
        } else {
            fail(path, "expected \"identity\" or an array of pairs");
        }
        inst.matchings[static_cast<std::size_t>(edges[i].id)] = std::move(m);
    }
    inst.orientation = std::move(parsed.orientation);

    if (auto violations = inst.validate(); !violations.empty()) {
        std::string msg = "invalid instance";
        for (const Violation& v : violations)
            msg += "; " + v.message;
        throw InputError(msg);
    }
    return inst;
}

std::string instance_to_json(const CorrespondenceInstance& inst)
{
    json doc;
    doc["vertices"] = json::array();
    for (VertexId v : inst.graph.vertices())
        doc["vertices"].push_back(inst.graph.vertex_label(v));
    doc["lists"] = json::object();
    for (VertexId v : inst.graph.vertices())
        doc["lists"][inst.graph.vertex_label(v)] = inst.lists.at(v);
    doc["edges"] = json::array();
    for (const Edge& e : inst.graph.edges()) {
        json edge;
        edge["id"] = inst.graph.edge_label(e.id);
        edge["u"] = inst.graph.vertex_label(e.u);
        edge["v"] = inst.graph.vertex_label(e.v);
        json pairs = json::array();
        for (const auto& [cu, cv] : inst.matching(e.id).pairs)
            pairs.push_back(json::array({cu, cv}));
        edge["matching"] = pairs;
        if (inst.orientation)
            edge["orientation"] = direction_tag(inst.orientation->direction(e.id));
        doc["edges"].push_back(edge);
    }
    return doc.dump(2);
}

SignedInput signed_from_json(const std::string& text)
{
    json doc = parse_document(text);
    ParsedEdges parsed = parse_edges(doc, /*orientation_required=*/false);

    SignedInput input;
    input.graph.graph = std::move(parsed.graph);
    input.lists = parse_lists(doc, input.graph.graph);
    input.graph.sign_by_edge.assign(input.graph.graph.edge_id_bound(), +1);
    auto edges = input.graph.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        std::string path = "$.edges[" + std::to_string(i) + "].sign";
        int sign = as_int(member(parsed.edge_objects[i], "$.edges[" + std::to_string(i) + "]",
                              "sign"),
            path);
        if (sign != 1 && sign != -1)
            fail(path, "expected 1 or -1");
        input.graph.sign_by_edge[static_cast<std::size_t>(edges[i].id)] = sign;
    }
    input.orientation = std::move(parsed.orientation);

    for (VertexId v : input.graph.graph.vertices())
        if (input.lists.contains(v, 0))
            fail("$.lists." + input.graph.graph.vertex_label(v), "signed lists must be zero-free");
    return input;
}

std::string signed_to_json(const SignedInput& input)
{
    const Multigraph& g = input.graph.graph;
    json doc;
    doc["vertices"] = json::array();
    for (VertexId v : g.vertices())
        doc["vertices"].push_back(g.vertex_label(v));
    doc["lists"] = json::object();
    for (VertexId v : g.vertices())
        doc["lists"][g.vertex_label(v)] = input.lists.at(v);
    doc["edges"] = json::array();
    for (const Edge& e : g.edges()) {
        json edge;
        edge["id"] = g.edge_label(e.id);
        edge["u"] = g.vertex_label(e.u);
        edge["v"] = g.vertex_label(e.v);
        edge["sign"] = input.graph.sign(e.id);
        if (input.orientation)
            edge["orientation"] = direction_tag(input.orientation->direction(e.id));
        doc["edges"].push_back(edge);
    }
    return doc.dump(2);
}

Coloring coloring_from_json(const Multigraph& graph, const std::string& text)
{
    json doc = parse_document(text);
    if (!doc.is_object())
        fail("$", "expected an object mapping vertices to colors");
    Coloring phi;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        auto v = graph.find_vertex(it.key());
        if (!v)
            fail("$." + it.key(), "unknown vertex");
        phi[*v] = as_int(it.value(), "$." + it.key());
    }
    return phi;
}

std::string coloring_to_json(const Multigraph& graph, const Coloring& phi)
{
    json doc = json::object();
    for (VertexId v : graph.vertices()) {
        auto it = phi.find(v);
        if (it != phi.end())
            doc[graph.vertex_label(v)] = it->second;
    }
    return doc.dump(2);
}

Biorientation digraph_from_json(const std::string& text)
{
    json doc = parse_document(text);
    ParsedEdges parsed = parse_edges(doc, /*orientation_required=*/true);
    return std::move(*parsed.orientation);
}

bool looks_like_instance(const std::string& text)
{
    json doc = parse_document(text);
    return doc.is_object() && doc.contains("lists");
}

namespace {

json label_array(const Multigraph& graph, const std::vector<VertexId>& vertices)
{
    json out = json::array();
    for (VertexId v : vertices)
        out.push_back(graph.vertex_label(v));
    return out;
}

} // namespace

std::string report_to_json(const Multigraph& graph, const HypothesisReport& report)
{
    json doc;
    doc["derangement_ok"] = report.derangement_ok;
    doc["derangement_violations"] = json::array();
    for (EdgeId e : report.derangement_violations)
        doc["derangement_violations"].push_back(graph.edge_label(e));
    doc["twisted_bidirected_ok"] = report.twisted_bidirected_ok;
    doc["twisted_bidirected_violations"] = json::array();
    for (EdgeId e : report.twisted_bidirected_violations)
        doc["twisted_bidirected_violations"].push_back(graph.edge_label(e));
    doc["list_sizes_ok"] = report.list_sizes_ok;
    doc["list_size_violations"] = json::array();
    for (const ListSizeViolation& v : report.list_size_violations) {
        json entry;
        entry["vertex"] = graph.vertex_label(v.vertex);
        entry["list_size"] = v.list_size;
        entry["out_degree"] = v.out_degree;
        doc["list_size_violations"].push_back(entry);
    }
    switch (report.certificate) {
    case StraightCertificate::NoOddCycle:
        doc["straight_certificate"] = "no_odd_cycle";
        break;
    case StraightCertificate::KernelPerfectVerified:
        doc["straight_certificate"] = "kernel_perfect";
        break;
    default:
        doc["straight_certificate"] = "unverified";
    }
    if (report.odd_cycle)
        doc["odd_cycle"] = label_array(graph, report.odd_cycle->closed_walk);
    if (report.kernel_perfect_failure)
        doc["kernel_perfect_failure"] = label_array(graph, *report.kernel_perfect_failure);
    doc["certified_polynomial"] = report.certified_polynomial();
    doc["certified"] = report.certified();
    return doc.dump(2);
}

std::string violations_to_json(const std::vector<Violation>& violations)
{
    json doc = json::array();
    for (const Violation& v : violations) {
        json entry;
        entry["kind"] = v.kind;
        entry["subject"] = v.subject;
        entry["message"] = v.message;
        doc.push_back(entry);
    }
    return doc.dump(2);
}

std::string vertex_list_to_json(const Multigraph& graph, const std::vector<VertexId>& vertices)
{
    return label_array(graph, vertices).dump();
}

std::string trace_to_text(const Multigraph& graph, const std::vector<TraceRound>& trace)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const TraceRound& round = trace[i];
        out << "round " << (i + 1) << ": color=" << round.color << " candidates=[";
        for (std::size_t k = 0; k < round.candidates.size(); ++k)
            out << (k ? " " : "") << graph.vertex_label(round.candidates[k]);
        out << "] kernel=[";
        for (std::size_t k = 0; k < round.kernel.size(); ++k)
            out << (k ? " " : "") << graph.vertex_label(round.kernel[k]);
        out << "] removed={";
        for (std::size_t k = 0; k < round.removed.size(); ++k) {
            out << (k ? " " : "") << graph.vertex_label(round.removed[k].first) << ":[";
            const auto& colors = round.removed[k].second;
            for (std::size_t c = 0; c < colors.size(); ++c)
                out << (c ? " " : "") << colors[c];
            out << "]";
        }
        out << "}\n";
    }
    return out.str();
}

} // namespace dpc
