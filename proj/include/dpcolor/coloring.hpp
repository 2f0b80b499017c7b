#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dpcolor/correspondence.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/kernels.hpp"

namespace dpc {

using Coloring = std::map<VertexId, int>;

enum class CheckMode {
    /// Polynomial certificate only: the oriented straight part must have no
    /// directed odd cycle.
    Certified,
    /// Additionally accepts instances whose oriented straight part is
    /// verified kernel-perfect by exhaustive (size-guarded) search.
    GeneralSmall,
};

struct SizeGuards {
    std::size_t brute_kernel_max_vertices = 20;
    std::size_t kernel_perfect_max_vertices = 15;
};

enum class StraightCertificate : std::uint8_t {
    NoOddCycle,
    KernelPerfectVerified,
    Unverified,
};

struct ListSizeViolation {
    VertexId vertex;
    int list_size;
    int out_degree;
};

/// Structured verdict on the orientation-certificate preconditions for one
/// instance: every twisted edge a partial derangement, every twisted edge
/// bidirected, every list larger than the out-degree, plus a certificate
/// for the oriented straight part.
struct HypothesisReport {
    bool derangement_ok = false;
    std::vector<EdgeId> derangement_violations;
    bool twisted_bidirected_ok = false;
    std::vector<EdgeId> twisted_bidirected_violations;
    bool list_sizes_ok = false;
    std::vector<ListSizeViolation> list_size_violations;
    StraightCertificate certificate = StraightCertificate::Unverified;
    std::optional<OddCycleWitness> odd_cycle;
    std::optional<std::vector<VertexId>> kernel_perfect_failure;

    bool checks_ok() const
    {
        return derangement_ok && twisted_bidirected_ok && list_sizes_ok;
    }
    /// Certified with the polynomial certificate (odd-cycle-free straight part).
    bool certified_polynomial() const
    {
        return checks_ok() && certificate == StraightCertificate::NoOddCycle;
    }
    /// Certified by either certificate.
    bool certified() const
    {
        return checks_ok()
            && (certificate == StraightCertificate::NoOddCycle
                || certificate == StraightCertificate::KernelPerfectVerified);
    }
};

class HypothesisViolation : public Error {
public:
    explicit HypothesisViolation(const std::string& message,
        std::optional<HypothesisReport> report = std::nullopt)
        : Error(Status::HypothesisFailure, message), report_(std::move(report))
    {
    }

    const std::optional<HypothesisReport>& report() const { return report_; }

private:
    std::optional<HypothesisReport> report_;
};

/// One round of the coloring loop, for diagnostics.
struct TraceRound {
    int color;                       // the color assigned this round
    std::vector<VertexId> candidates; // vertices whose list holds it
    std::vector<VertexId> kernel;     // vertices colored this round
    std::vector<std::pair<VertexId, std::vector<int>>> removed; // colors deleted per survivor
};

/// Runs all hypothesis checks. The three boolean checks always run; the
/// straight-part certificate is polynomial in Certified mode, and falls
/// back to exhaustive kernel-perfectness verification (guarded) in
/// GeneralSmall mode when an odd cycle exists.
HypothesisReport check_hypotheses(const CorrespondenceInstance& inst, CheckMode mode,
    const SizeGuards& guards = {});

/// Constructive coloring for certified instances. Each round picks the
/// minimum color a over all lists, takes a kernel U of the oriented
/// straight subgraph induced on the vertices whose list holds a, colors U
/// with a, deletes from every surviving neighbor the colors its matchings
/// tie to a on edges into U, and recurses on the restricted instance. The
/// per-round list-versus-out-degree margin is asserted; with
/// `override_hypotheses` the certification gate is skipped and any
/// mid-run failure surfaces as HypothesisViolation.
Coloring dp_color(const CorrespondenceInstance& inst, CheckMode mode,
    bool override_hypotheses = false, std::vector<TraceRound>* trace = nullptr,
    const SizeGuards& guards = {});

/// A coloring passes iff every vertex gets a color from its list and no
/// edge matching contains the chosen endpoint pair. Throws InputError when
/// the coloring misses or invents a vertex.
std::vector<Violation> verify_coloring(const CorrespondenceInstance& inst, const Coloring& phi);

/// Combines an oriented edge set with a disjoint edge set that becomes
/// fully bidirected, over the same vertex set (matched by label). The
/// result's out-degrees are the oriented part's plus the plain degree in
/// the bidirected part.
Biorientation add_bidirected_edges(const Biorientation& oriented, const Multigraph& bidirected);

} // namespace dpc
