#include "dpcolor.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "dpcolor/coloring.hpp"
#include "dpcolor/generator.hpp"
#include "dpcolor/io.hpp"
#include "dpcolor/kernels.hpp"
#include "dpcolor/oracle.hpp"
#include "dpcolor/signed.hpp"

struct dpc_instance {
    dpc::CorrespondenceInstance value;
};

struct dpc_signed {
    dpc::SignedInput value;
};

namespace {

char* dup_string(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void put(char** slot, const std::string& s)
{
    if (slot)
        *slot = dup_string(s);
}

dpc_status status_of(const dpc::Error& e)
{
    return static_cast<dpc_status>(static_cast<int>(e.status()));
}

// Uniform exception -> status mapping; hypothesis reports are rendered into
// the error channel when a graph is available for labels.
template <typename Fn>
dpc_status guarded(char** error, const dpc::Multigraph* graph, Fn&& fn)
{
    try {
        return fn();
    } catch (const dpc::HypothesisViolation& e) {
        std::string detail = e.what();
        if (graph && e.report())
            detail += "\n" + dpc::report_to_json(*graph, *e.report());
        put(error, detail);
        return status_of(e);
    } catch (const dpc::Error& e) {
        put(error, e.what());
        return status_of(e);
    } catch (const std::exception& e) {
        put(error, std::string("internal error: ") + e.what());
        return DPC_ERR_INPUT;
    }
}

} // namespace

extern "C" {

void dpc_string_free(char* s)
{
    std::free(s);
}

dpc_status dpc_instance_from_json(const char* text, dpc_instance** out, char** error)
{
    if (!text || !out) {
        put(error, "null argument");
        return DPC_ERR_INPUT;
    }
    *out = nullptr;
    return guarded(error, nullptr, [&]() -> dpc_status {
        auto* handle = new dpc_instance{dpc::instance_from_json(text)};
        *out = handle;
        return DPC_OK;
    });
}

void dpc_instance_free(dpc_instance* inst)
{
    delete inst;
}

dpc_status dpc_instance_to_json(const dpc_instance* inst, char** out)
{
    if (!inst || !out)
        return DPC_ERR_INPUT;
    *out = dup_string(dpc::instance_to_json(inst->value));
    return DPC_OK;
}

dpc_status dpc_check(const dpc_instance* inst, int exhaustive, unsigned max_n,
    char** report_json, char** error)
{
    if (!inst) {
        put(error, "null instance");
        return DPC_ERR_INPUT;
    }
    return guarded(error, &inst->value.graph, [&]() -> dpc_status {
        dpc::CheckMode mode = exhaustive ? dpc::CheckMode::GeneralSmall
                                         : dpc::CheckMode::Certified;
        dpc::SizeGuards guards;
        if (max_n > 0)
            guards.kernel_perfect_max_vertices = max_n;
        dpc::HypothesisReport report = dpc::check_hypotheses(inst->value, mode, guards);
        put(report_json, dpc::report_to_json(inst->value.graph, report));
        bool certified = exhaustive ? report.certified() : report.certified_polynomial();
        return certified ? DPC_OK : DPC_ERR_HYPOTHESIS;
    });
}

dpc_status dpc_color(const dpc_instance* inst, int exhaustive, int override_hypotheses,
    char** coloring_json, char** trace_text, char** error)
{
    if (!inst) {
        put(error, "null instance");
        return DPC_ERR_INPUT;
    }
    return guarded(error, &inst->value.graph, [&]() -> dpc_status {
        dpc::CheckMode mode = exhaustive ? dpc::CheckMode::GeneralSmall
                                         : dpc::CheckMode::Certified;
        std::vector<dpc::TraceRound> trace;
        dpc::Coloring phi = dpc::dp_color(inst->value, mode, override_hypotheses != 0,
            trace_text ? &trace : nullptr);
        if (auto violations = dpc::verify_coloring(inst->value, phi); !violations.empty()) {
            put(error, "coloring failed re-verification: "
                + dpc::violations_to_json(violations));
            return DPC_ERR_HYPOTHESIS;
        }
        put(coloring_json, dpc::coloring_to_json(inst->value.graph, phi));
        if (trace_text)
            put(trace_text, dpc::trace_to_text(inst->value.graph, trace));
        return DPC_OK;
    });
}

dpc_status dpc_verify(const dpc_instance* inst, const char* coloring_json,
    char** violations_json, char** error)
{
    if (!inst || !coloring_json) {
        put(error, "null argument");
        return DPC_ERR_INPUT;
    }
    return guarded(error, &inst->value.graph, [&]() -> dpc_status {
        dpc::Coloring phi = dpc::coloring_from_json(inst->value.graph, coloring_json);
        auto violations = dpc::verify_coloring(inst->value, phi);
        put(violations_json, dpc::violations_to_json(violations));
        return violations.empty() ? DPC_OK : DPC_ERR_HYPOTHESIS;
    });
}

dpc_status dpc_oracle(const dpc_instance* inst, uint64_t max_assignments, int with_count,
    char** coloring_json, uint64_t* count, char** error)
{
    if (!inst) {
        put(error, "null instance");
        return DPC_ERR_INPUT;
    }
    return guarded(error, &inst->value.graph, [&]() -> dpc_status {
        dpc::SearchBudget budget;
        if (max_assignments > 0)
            budget.max_assignments = max_assignments;
        auto phi = dpc::brute_force_color(inst->value, budget);
        if (count && with_count)
            *count = dpc::count_colorings(inst->value, budget);
        if (!phi)
            return DPC_RESULT_NEGATIVE;
        put(coloring_json, dpc::coloring_to_json(inst->value.graph, *phi));
        return DPC_OK;
    });
}

dpc_status dpc_signed_from_json(const char* text, dpc_signed** out, char** error)
{
    if (!text || !out) {
        put(error, "null argument");
        return DPC_ERR_INPUT;
    }
    *out = nullptr;
    return guarded(error, nullptr, [&]() -> dpc_status {
        auto* handle = new dpc_signed{dpc::signed_from_json(text)};
        *out = handle;
        return DPC_OK;
    });
}

void dpc_signed_free(dpc_signed* sg)
{
    delete sg;
}

dpc_status dpc_signed_reduce(const dpc_signed* sg, char** instance_json, char** error)
{
    if (!sg) {
        put(error, "null argument");
        return DPC_ERR_INPUT;
    }
    return guarded(error, &sg->value.graph.graph, [&]() -> dpc_status {
        dpc::CorrespondenceInstance inst = dpc::reduce_to_correspondence(sg->value.graph,
            sg->value.lists, sg->value.orientation);
        put(instance_json, dpc::instance_to_json(inst));
        return DPC_OK;
    });
}

dpc_status dpc_kernel(const char* text, int brute, unsigned max_n, char** kernel_json,
    char** witness_json, char** error)
{
    if (!text) {
        put(error, "null argument");
        return DPC_ERR_INPUT;
    }
    return guarded(error, nullptr, [&]() -> dpc_status {
        dpc::Biorientation digraph;
        if (dpc::looks_like_instance(text)) {
            dpc::CorrespondenceInstance inst = dpc::instance_from_json(text);
            if (!inst.orientation)
                throw dpc::InputError("instance carries no orientation");
            digraph = *inst.orientation;
        } else {
            digraph = dpc::digraph_from_json(text);
        }

        auto emit_kernel = [&](const std::vector<dpc::VertexId>& kernel) {
            put(kernel_json, dpc::vertex_list_to_json(digraph.graph(), kernel));
        };
        if (brute) {
            std::size_t guard = max_n > 0 ? max_n : 20;
            auto kernel = dpc::brute_force_kernel(digraph, guard);
            if (auto witness = dpc::find_odd_directed_cycle(digraph))
                put(witness_json,
                    dpc::vertex_list_to_json(digraph.graph(), witness->closed_walk));
            if (!kernel)
                return DPC_RESULT_NEGATIVE;
            emit_kernel(*kernel);
            return DPC_OK;
        }
        try {
            emit_kernel(dpc::richardson_kernel(digraph));
            return DPC_OK;
        } catch (const dpc::OddCycleError& e) {
            put(witness_json,
                dpc::vertex_list_to_json(digraph.graph(), e.witness().closed_walk));
            put(error, e.what());
            return DPC_RESULT_NEGATIVE;
        }
    });
}

dpc_status dpc_generate(uint32_t n, double straight_prob, double twisted_prob,
    uint32_t extra_colors, uint64_t seed, int signed_mode, int bipartite_straight,
    char** file_json, char** error)
{
    return guarded(error, nullptr, [&]() -> dpc_status {
        dpc::GenParams params;
        params.n = static_cast<int>(n);
        params.straight_edge_prob = straight_prob;
        params.twisted_edge_prob = twisted_prob;
        params.extra_colors = static_cast<int>(extra_colors);
        params.seed = seed;
        params.bipartite_straight = bipartite_straight != 0;
        if (signed_mode) {
            put(file_json, dpc::signed_to_json(dpc::gen_certified_signed(params)));
        } else {
            put(file_json, dpc::instance_to_json(dpc::gen_certified_instance(params)));
        }
        return DPC_OK;
    });
}

} // extern "C"
