#pragma once

#include <cstdint>
#include <optional>

#include "dpcolor/coloring.hpp"
#include "dpcolor/correspondence.hpp"

namespace dpc {

struct SearchBudget {
    std::uint64_t max_assignments = 10'000'000;
    std::uint64_t max_list_assignments = 1'000'000;
};

/// Exhaustive ground truth: lexicographically first assignment (vertices in
/// declaration order, colors in list order) that verify_coloring accepts,
/// or nullopt when none exists. The assignment space (product of list
/// sizes) must fit the budget.
std::optional<Coloring> brute_force_color(const CorrespondenceInstance& inst,
    const SearchBudget& budget = {});

/// Number of assignments verify_coloring accepts.
std::uint64_t count_colorings(const CorrespondenceInstance& inst, const SearchBudget& budget = {});

struct ChoosabilityResult {
    bool choosable = false;
    ColorLists witness; // a failing list assignment, when not choosable
};

/// Desk-scale surrogate for f-choosability: every list assignment with
/// |L(v)| = f(v) drawn from the finite universe must admit a proper list
/// coloring (checked via identity matchings). Exact sizes suffice since
/// larger lists only add options; a universe of sum(f) colors is enough to
/// find any refutation at these scales.
ChoosabilityResult is_f_choosable(const Multigraph& graph, const std::vector<int>& f_by_vertex,
    const std::vector<int>& universe, const SearchBudget& budget = {});

} // namespace dpc
