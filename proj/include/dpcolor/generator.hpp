#pragma once

#include <cstdint>
#include <optional>

#include "dpcolor/correspondence.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/signed.hpp"

namespace dpc {

struct GenParams {
    int n = 8;
    double straight_edge_prob = 0.3;
    double twisted_edge_prob = 0.15;
    int extra_colors = 0;        // slack above out-degree + 1
    std::uint64_t seed = 1;
    /// When set, the straight part is sampled as a bipartition-crossing
    /// digraph (directed cycles all even) instead of a DAG, for broader
    /// coverage of the certified space.
    bool bipartite_straight = false;
};

/// Signed graph with lists and an orientation meeting the signed coloring
/// preconditions by construction.
struct SignedInput {
    SignedGraph graph;
    ColorLists lists;
    std::optional<Biorientation> orientation;
};

/// Random instance that always satisfies the polynomial certificate:
/// straight edges follow a random vertex order (or cross a bipartition),
/// twisted edges are bidirected with fixed-point-free matchings, and every
/// list has out-degree + 1 + extra_colors entries. Deterministic per seed.
CorrespondenceInstance gen_certified_instance(const GenParams& params);

/// Signed analogue: positive edges acyclically oriented, negative edges
/// bidirected, zero-free lists sized to the out-degrees, with negated
/// colors planted across negative edges to exercise their matchings.
SignedInput gen_certified_signed(const GenParams& params);

/// Random digraph with no directed odd cycle: arcs only cross a random
/// bipartition, so every directed cycle alternates sides.
Biorientation gen_no_odd_cycle_digraph(int n, double arc_prob, std::uint64_t seed);

} // namespace dpc
