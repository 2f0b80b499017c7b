// dpc: DP-coloring toolbox over JSON instance files. Thin shell around the
// dpcolor C API; exit codes mirror dpc_status (0 ok, 1 input error,
// 2 hypothesis/verification failure, 3 negative result, 4 budget).

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "dpcolor.h"

namespace {

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path);
    if (!file) {
        std::cerr << "cannot open '" << path << "'\n";
        std::exit(DPC_ERR_INPUT);
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { dpc_string_free(value); }
    char** slot() { return &value; }
    bool has() const { return value != nullptr; }
    const char* get() const { return value ? value : ""; }
};

void report_error(const OwnedString& error)
{
    if (error.has())
        std::cerr << error.get() << "\n";
}

struct InstanceHandle {
    dpc_instance* ptr = nullptr;
    ~InstanceHandle() { dpc_instance_free(ptr); }
};

int load_instance(const std::string& path, InstanceHandle& handle)
{
    OwnedString error;
    dpc_status status = dpc_instance_from_json(read_input(path).c_str(), &handle.ptr,
        error.slot());
    if (status != DPC_OK)
        report_error(error);
    return status;
}

std::uint64_t budget_from_env()
{
    if (const char* env = std::getenv("DPC_BUDGET"))
        return std::strtoull(env, nullptr, 10);
    return 0; // library default
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "DP-coloring toolbox: hypothesis checking, constructive coloring,\n"
        "exhaustive oracles, kernels and signed-graph reductions over JSON\n"
        "instance files. File arguments accept '-' for stdin.\n\n"
        "Exit codes: 0 success, 1 input error, 2 hypothesis/verification\n"
        "failure, 3 negative result (uncolorable / no kernel), 4 resource\n"
        "limit. The DPC_BUDGET environment variable overrides the default\n"
        "oracle assignment budget (also settable per call via --budget)."};
    app.require_subcommand(1);

    std::string instance_path, coloring_path, mode = "certified";
    unsigned max_n = 0;
    bool override_hypotheses = false, trace = false, with_count = false, brute = false;
    std::uint64_t budget = 0;

    auto* check = app.add_subcommand("check", "Check the orientation-certificate hypotheses");
    check->add_option("instance", instance_path, "instance file")->required();
    check->add_option("--mode", mode, "certified (polynomial) or general (exhaustive)")
        ->check(CLI::IsMember({"certified", "general"}));
    check->add_option("--max-n", max_n, "vertex cap for exhaustive verification");

    auto* color = app.add_subcommand("color", "Construct a coloring");
    color->add_option("instance", instance_path, "instance file")->required();
    color->add_option("--mode", mode, "certified (polynomial) or general (exhaustive)")
        ->check(CLI::IsMember({"certified", "general"}));
    color->add_flag("--override", override_hypotheses, "run even when not certified");
    color->add_flag("--trace", trace, "log each elimination round to stderr");

    auto* verify = app.add_subcommand("verify", "Verify a coloring file");
    verify->add_option("instance", instance_path, "instance file")->required();
    verify->add_option("coloring", coloring_path, "coloring file")->required();

    auto* oracle = app.add_subcommand("oracle", "Exhaustive colorability search");
    oracle->add_option("instance", instance_path, "instance file")->required();
    oracle->add_flag("--count", with_count, "also count all valid assignments");
    oracle->add_option("--budget", budget, "assignment budget (default 1e7 or DPC_BUDGET)");

    auto* reduce = app.add_subcommand("signed-reduce",
        "Reduce a signed document to a correspondence instance");
    reduce->add_option("signed", instance_path, "signed file")->required();

    auto* kernel = app.add_subcommand("kernel", "Find a kernel of a digraph");
    kernel->add_option("digraph", instance_path, "digraph or instance file")->required();
    kernel->add_flag("--brute", brute, "exhaustive search instead of the polynomial method");
    kernel->add_option("--max-n", max_n, "vertex cap for exhaustive search");

    std::uint32_t gen_n = 8, gen_extra = 0;
    std::uint64_t gen_seed = 1;
    double gen_straight = 0.3, gen_twisted = 0.15;
    bool gen_signed = false, gen_bipartite = false;
    auto* gen = app.add_subcommand("gen", "Generate a certified random instance");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--seed", gen_seed, "random seed");
    gen->add_option("--straight-prob", gen_straight, "straight edge probability");
    gen->add_option("--twisted-prob", gen_twisted, "twisted edge probability");
    gen->add_option("--extra-colors", gen_extra, "list slack above out-degree + 1");
    gen->add_flag("--signed", gen_signed, "emit a signed document instead");
    gen->add_flag("--bipartite", gen_bipartite,
        "sample the straight part across a bipartition instead of a DAG");

    CLI11_PARSE(app, argc, argv);
    int exhaustive = mode == "general" ? 1 : 0;

    if (*check) {
        InstanceHandle inst;
        if (int status = load_instance(instance_path, inst))
            return status;
        OwnedString report, error;
        dpc_status status = dpc_check(inst.ptr, exhaustive, max_n, report.slot(), error.slot());
        if (report.has())
            std::cout << report.get() << "\n";
        if (status != DPC_OK && status != DPC_ERR_HYPOTHESIS)
            report_error(error);
        return status;
    }

    if (*color) {
        InstanceHandle inst;
        if (int status = load_instance(instance_path, inst))
            return status;
        OwnedString coloring, trace_text, error;
        dpc_status status = dpc_color(inst.ptr, exhaustive, override_hypotheses ? 1 : 0,
            coloring.slot(), trace ? trace_text.slot() : nullptr, error.slot());
        if (trace && trace_text.has())
            std::cerr << trace_text.get();
        if (status == DPC_OK)
            std::cout << coloring.get() << "\n";
        else
            report_error(error);
        return status;
    }

    if (*verify) {
        InstanceHandle inst;
        if (int status = load_instance(instance_path, inst))
            return status;
        OwnedString violations, error;
        dpc_status status = dpc_verify(inst.ptr, read_input(coloring_path).c_str(),
            violations.slot(), error.slot());
        if (violations.has())
            std::cout << violations.get() << "\n";
        if (status != DPC_OK && status != DPC_ERR_HYPOTHESIS)
            report_error(error);
        return status;
    }

    if (*oracle) {
        InstanceHandle inst;
        if (int status = load_instance(instance_path, inst))
            return status;
        if (budget == 0)
            budget = budget_from_env();
        OwnedString coloring, error;
        std::uint64_t count = 0;
        dpc_status status = dpc_oracle(inst.ptr, budget, with_count ? 1 : 0, coloring.slot(),
            &count, error.slot());
        if (status == DPC_OK)
            std::cout << coloring.get() << "\n";
        else if (status == DPC_RESULT_NEGATIVE)
            std::cout << "UNCOLORABLE\n";
        else
            report_error(error);
        if (with_count && (status == DPC_OK || status == DPC_RESULT_NEGATIVE))
            std::cout << "count " << count << "\n";
        return status;
    }

    if (*reduce) {
        dpc_signed* sg = nullptr;
        OwnedString error;
        dpc_status status = dpc_signed_from_json(read_input(instance_path).c_str(), &sg,
            error.slot());
        if (status != DPC_OK) {
            report_error(error);
            return status;
        }
        OwnedString instance_json;
        status = dpc_signed_reduce(sg, instance_json.slot(), error.slot());
        dpc_signed_free(sg);
        if (status == DPC_OK)
            std::cout << instance_json.get() << "\n";
        else
            report_error(error);
        return status;
    }

    if (*kernel) {
        OwnedString kernel_json, witness, error;
        dpc_status status = dpc_kernel(read_input(instance_path).c_str(), brute ? 1 : 0, max_n,
            kernel_json.slot(), witness.slot(), error.slot());
        if (status == DPC_OK) {
            std::cout << "{\"kernel\": " << kernel_json.get() << "}\n";
        } else if (status == DPC_RESULT_NEGATIVE && brute) {
            std::cout << "NO KERNEL\n";
            if (witness.has())
                std::cerr << "directed odd cycle: " << witness.get() << "\n";
        } else if (status == DPC_RESULT_NEGATIVE) {
            std::cout << "{\"odd_cycle\": " << witness.get() << "}\n";
            report_error(error);
        } else {
            report_error(error);
        }
        return status;
    }

    if (*gen) {
        OwnedString file_json, error;
        dpc_status status = dpc_generate(gen_n, gen_straight, gen_twisted, gen_extra, gen_seed,
            gen_signed ? 1 : 0, gen_bipartite ? 1 : 0, file_json.slot(), error.slot());
        if (status == DPC_OK)
            std::cout << file_json.get() << "\n";
        else
            report_error(error);
        return status;
    }

    return DPC_ERR_INPUT;
}
