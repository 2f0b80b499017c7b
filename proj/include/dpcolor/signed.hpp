#pragma once

#include <optional>
#include <vector>

#include "dpcolor/coloring.hpp"
#include "dpcolor/correspondence.hpp"
#include "dpcolor/graph.hpp"

namespace dpc {

/// Multigraph with a ±1 sign on every edge.
struct SignedGraph {
    Multigraph graph;
    std::vector<int> sign_by_edge; // by edge id, +1 or -1

    int sign(EdgeId e) const;
    Multigraph positive_subgraph() const;
    Multigraph negative_subgraph() const;
};

/// Vertex -> nonzero integer.
using SignedColoring = Coloring;

/// Correspondence instance whose matchings encode the signed coloring
/// constraint: identity on positive edges, color-negation pairing on
/// negative edges. Lists must avoid 0; the result is always a derangement
/// assignment with twisted edges only among the negative ones.
CorrespondenceInstance reduce_to_correspondence(const SignedGraph& sg, const ColorLists& lists,
    std::optional<Biorientation> orientation);

/// A signed coloring passes iff it is total, zero-free, list-respecting,
/// and psi(v) != sign(e) * psi(w) on every edge.
std::vector<Violation> verify_signed_coloring(const SignedGraph& sg, const ColorLists& lists,
    const SignedColoring& psi);

/// Colors a signed graph whose negative edges are all bidirected, whose
/// positive part is oriented without directed odd cycles, and whose lists
/// exceed the out-degrees; reduces to a correspondence instance and runs
/// the certified coloring algorithm. Precondition failures raise
/// HypothesisViolation carrying the report.
SignedColoring color_signed(const SignedGraph& sg, const ColorLists& lists,
    const Biorientation& orientation);

} // namespace dpc
