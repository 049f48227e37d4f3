#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpgraph/conditions.hpp"
#include "cpgraph/graph.hpp"
#include "cpgraph/ideals.hpp"
#include "cpgraph/limits.hpp"
#include "cpgraph/paths.hpp"

namespace cpgraph {

enum class Simplicity { Simple, NotSimple };

std::string_view to_string(Simplicity s);

/// Citation tags naming the results a verdict relied on.
namespace citation {
inline constexpr std::string_view kGraphSimplicity = "graph-simplicity:L+no-saturated-hereditary";
inline constexpr std::string_view kConditionSSimplicity = "cp-simplicity:S+no-invariant-ideals";
inline constexpr std::string_view kLIffS = "quiver:L-iff-S-without-sinks";
inline constexpr std::string_view kSinksBlockS = "S-implies-injective-left-action";
inline constexpr std::string_view kSchweizer = "schweizer:nonperiodic+no-hereditary-ideals";
inline constexpr std::string_view kPeriodicStructure = "periodic-iff-disjoint-simple-cycles";
} // namespace citation

struct SimplicityResult {
    Simplicity verdict;
    std::vector<std::string> citations;
};

/// Simple iff Condition (L) holds and the only saturated hereditary subsets are
/// trivial. When Condition (S) holds as well, the Condition (S) simplicity
/// result is cited and must agree (InvariantViolation otherwise).
SimplicityResult simplicity_verdict(const Graph& g, const Limits& limits = {});

struct SchweizerResult {
    /// Failed hypotheses by name ("full", "injective_left_action"); empty when
    /// the hypotheses hold. Finiteness and unitality always hold here.
    std::vector<std::string> failed_hypotheses;
    std::optional<Simplicity> predicted;

    bool hypotheses_hold() const { return failed_hypotheses.empty(); }
};

/// Under no sources and no sinks, predicts simple iff nonperiodic and the
/// hereditary lattice is trivial. The prediction is checked against
/// simplicity_verdict; a mismatch throws InvariantViolation.
SchweizerResult schweizer_check(const Graph& g, const Limits& limits = {});

namespace counterexample {
inline constexpr std::string_view kNonperiodicButNotL = "nonperiodic_but_not_L";
inline constexpr std::string_view kNonperiodicTrivialInvariantNotSimple = "nonperiodic_trivial_invariant_not_simple";
inline constexpr std::string_view kPeriodicDisjointCycles = "periodic_disjoint_cycles";
} // namespace counterexample

struct ReportFlags {
    bool no_sinks = false;
    bool no_sources = false;
    bool finite = true;
    bool full = false;
    bool unital = true;
    bool injective_left_action = false;
    bool condition_L = false;
    bool condition_S = false;
    bool nonperiodic = false;
    bool trivial_hereditary = false;
    bool trivial_saturated_hereditary = false;
};

struct AnalysisReport {
    ReportFlags flags;
    Simplicity simplicity = Simplicity::NotSimple;
    SchweizerResult schweizer;
    std::vector<std::string> counterexample_flags;
    std::vector<std::string> citations;

    // Supporting data.
    VertexClasses classes;
    Connectivity connected{};
    PeriodicityVerdict periodicity;
    ConditionSReason condition_S_reason = ConditionSReason::Ok;
    std::vector<Path> exitless_cycles;
    SubsetLattice hereditary;
    SubsetLattice saturated_hereditary;

    bool has_flag(std::string_view name) const;
};

/// Full analysis. Also cross-checks the fast Condition (L) test against cycle
/// enumeration and the structural periodicity test against direct powers when
/// both fit within the limits; disagreement throws InvariantViolation.
AnalysisReport classify(const Graph& g, const Limits& limits = {});

/// Throws InvariantViolation if the report breaks one of its own identities.
void check_report_consistency(const AnalysisReport& r);

} // namespace cpgraph
