#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"

namespace dpc {

/// A directed cycle of odd length: closed_walk lists the vertices with
/// first == last, consecutive entries joined by arcs, an odd number of
/// arcs, and no repeated interior vertex.
struct OddCycleWitness {
    std::vector<VertexId> closed_walk;

    std::size_t arc_count() const
    {
        return closed_walk.empty() ? 0 : closed_walk.size() - 1;
    }
};

/// Raised when a kernel construction requires an odd-cycle-free digraph but
/// the input contains one; carries the offending cycle.
class OddCycleError : public Error {
public:
    explicit OddCycleError(OddCycleWitness witness)
        : Error(Status::HypothesisFailure, "digraph contains a directed odd cycle"),
          witness_(std::move(witness))
    {
    }

    const OddCycleWitness& witness() const { return witness_; }

private:
    OddCycleWitness witness_;
};

/// True iff `candidate` is independent (no arc between members in either
/// direction) and every vertex outside it has an arc into it.
bool is_kernel(const Biorientation& digraph, std::span<const VertexId> candidate);

/// Searches every strongly connected component for a parity conflict; a
/// conflict yields a genuine directed odd cycle, extracted from the odd
/// closed walk it certifies. Both-edges form directed 2-cycles and are
/// never witnesses.
std::optional<OddCycleWitness> find_odd_directed_cycle(const Biorientation& digraph);

/// Kernel of a digraph without directed odd cycles, built by repeatedly
/// resolving a terminal strongly connected component. Throws OddCycleError
/// when the precondition fails. Result is sorted ascending and
/// deterministic.
std::vector<VertexId> richardson_kernel(const Biorientation& digraph);

/// Lexicographically first kernel (by sorted vertex-id sequence) found by
/// exhaustive search over independent sets, or nullopt when the digraph has
/// no kernel. Guarded: more than `max_vertices` vertices raises
/// ResourceLimitError.
std::optional<std::vector<VertexId>> brute_force_kernel(const Biorientation& digraph,
    std::size_t max_vertices = 20);

struct KernelPerfectness {
    bool kernel_perfect = false;
    /// First induced vertex subset (in bitmask order) with no kernel;
    /// meaningful only when kernel_perfect is false.
    std::vector<VertexId> failing_subset;
};

/// Exhaustively tests every induced subdigraph for a kernel. Guarded by
/// `max_vertices` (2^n subsets).
KernelPerfectness is_kernel_perfect(const Biorientation& digraph, std::size_t max_vertices = 15);

} // namespace dpc
