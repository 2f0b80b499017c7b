#pragma once

#include <string>

#include "dpcolor/coloring.hpp"
#include "dpcolor/correspondence.hpp"
#include "dpcolor/generator.hpp"
#include "dpcolor/signed.hpp"

namespace dpc {

// JSON file formats. Parse errors raise InputError naming the JSON path;
// parsed instances are validated before return. Emission is deterministic
// (declaration order everywhere), and parse(emit(x)) == x.

CorrespondenceInstance instance_from_json(const std::string& text);
std::string instance_to_json(const CorrespondenceInstance& inst);

SignedInput signed_from_json(const std::string& text);
std::string signed_to_json(const SignedInput& input);

Coloring coloring_from_json(const Multigraph& graph, const std::string& text);
std::string coloring_to_json(const Multigraph& graph, const Coloring& phi);

/// Plain digraph: vertices plus oriented edges, no lists or matchings.
Biorientation digraph_from_json(const std::string& text);

/// True when the document carries correspondence data ("lists"), i.e.
/// should be parsed as an instance rather than a bare digraph.
bool looks_like_instance(const std::string& text);

std::string report_to_json(const Multigraph& graph, const HypothesisReport& report);
std::string violations_to_json(const std::vector<Violation>& violations);
std::string vertex_list_to_json(const Multigraph& graph, const std::vector<VertexId>& vertices);
std::string trace_to_text(const Multigraph& graph, const std::vector<TraceRound>& trace);

} // namespace dpc
