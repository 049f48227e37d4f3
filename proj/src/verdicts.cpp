#include "cpgraph/verdicts.hpp"

#include <algorithm>

#include "cpgraph/errors.hpp"

namespace cpgraph {

std::string_view to_string(Simplicity s) { return s == Simplicity::Simple ? "simple" : "not_simple"; }

namespace {

void require_nonempty(const Graph& g) {
    if (g.empty()) throw GraphError("empty graph");
}

void cite(std::vector<std::string>& list, std::string_view tag) {
    if (std::find(list.begin(), list.end(), tag) == list.end()) list.emplace_back(tag);
}

SimplicityResult simplicity_from(const Graph& g, bool condition_l, const SubsetLattice& sat_her) {
    SimplicityResult result;
    result.verdict = condition_l && sat_her.trivial() ? Simplicity::Simple : Simplicity::NotSimple;
    cite(result.citations, citation::kGraphSimplicity);

    const auto s = condition_S(g);
    if (s.holds) {
        cite(result.citations, citation::kLIffS);
        if (sat_her.trivial()) {
            cite(result.citations, citation::kConditionSSimplicity);
            if (result.verdict != Simplicity::Simple) {
                throw InvariantViolation("Condition (S) with no invariant ideals did not yield a simple verdict");
            }
        }
    } else if (s.reason == ConditionSReason::HasSinks) {
        cite(result.citations, citation::kSinksBlockS);
    }
    return result;
}

std::vector<std::string> schweizer_failures(const VertexClasses& classes) {
    std::vector<std::string> failed;
    if (!classes.sources.empty()) failed.emplace_back("full");
    if (!classes.sinks.empty()) failed.emplace_back("injective_left_action");
    return failed;
}

} // namespace

SimplicityResult simplicity_verdict(const Graph& g, const Limits& limits) {
    require_nonempty(g);
    return simplicity_from(g, condition_L(g).holds, lattice(g, LatticeKind::SaturatedHereditary, limits));
}

SchweizerResult schweizer_check(const Graph& g, const Limits& limits) {
    require_nonempty(g);
    SchweizerResult result;
    result.failed_hypotheses = schweizer_failures(vertex_classes(g));
    if (!result.hypotheses_hold()) return result;

    const bool nonperiodic = !periodicity(g).periodic;
    const bool no_hereditary = lattice(g, LatticeKind::Hereditary, limits).trivial();
    result.predicted = nonperiodic && no_hereditary ? Simplicity::Simple : Simplicity::NotSimple;

    if (*result.predicted != simplicity_verdict(g, limits).verdict) {
        throw InvariantViolation("Schweizer prediction disagrees with the graph simplicity criterion");
    }
    return result;
}

bool AnalysisReport::has_flag(std::string_view name) const {
    return std::find(counterexample_flags.begin(), counterexample_flags.end(), name) != counterexample_flags.end();
}

namespace {

// Largest period the direct-power oracle is asked to confirm in classify().
constexpr std::size_t kOraclePeriodLimit = 4096;

void cross_check_condition_L(const Graph& g, const ConditionLResult& fast, const Limits& limits) {
    std::optional<ConditionLResult> slow;
    try {
        slow = condition_L_by_enumeration(g, limits);
    } catch (const CapExceeded&) {
        return;
    }
    if (slow->holds != fast.holds || slow->violating_cycle != fast.violating_cycle) {
        throw InvariantViolation("Condition (L): degree test and cycle enumeration disagree");
    }
}

void cross_check_periodicity(const Graph& g, const PeriodicityVerdict& structural, const Limits& limits) {
    if (structural.minimal_period && *structural.minimal_period > kOraclePeriodLimit) return;
    PeriodicityVerdict powers;
    try {
        powers = periodicity_by_powers(g, std::nullopt, limits);
    } catch (const CapExceeded&) {
        return;
    }
    if (powers.periodic != structural.periodic || powers.minimal_period != structural.minimal_period) {
        throw InvariantViolation("periodicity: structural test and direct powers disagree");
    }
}

} // namespace

AnalysisReport classify(const Graph& g, const Limits& limits) {
    require_nonempty(g);
    AnalysisReport r;
    r.classes = vertex_classes(g);
    r.connected = connectivity(g);

    const auto l = condition_L(g);
    cross_check_condition_L(g, l, limits);
    r.exitless_cycles = exitless_cycles(g);

    const auto s = condition_S(g);
    r.condition_S_reason = s.reason;

    r.periodicity = periodicity(g);
    cross_check_periodicity(g, r.periodicity, limits);

    r.hereditary = lattice(g, LatticeKind::Hereditary, limits);
    r.saturated_hereditary = lattice(g, LatticeKind::SaturatedHereditary, limits);

    auto& f = r.flags;
    f.no_sinks = r.classes.sinks.empty();
    f.no_sources = r.classes.sources.empty();
    f.finite = true;
    f.unital = true;
    f.full = f.no_sources;
    f.injective_left_action = f.no_sinks;
    f.condition_L = l.holds;
    f.condition_S = s.holds;
    f.nonperiodic = !r.periodicity.periodic;
    f.trivial_hereditary = r.hereditary.trivial();
    f.trivial_saturated_hereditary = r.saturated_hereditary.trivial();

    auto simplicity = simplicity_from(g, l.holds, r.saturated_hereditary);
    r.simplicity = simplicity.verdict;
    r.citations = simplicity.citations;
    cite(r.citations, citation::kPeriodicStructure);

    r.schweizer.failed_hypotheses = schweizer_failures(r.classes);
    if (r.schweizer.hypotheses_hold()) {
        r.schweizer.predicted = f.nonperiodic && f.trivial_hereditary ? Simplicity::Simple : Simplicity::NotSimple;
        cite(r.citations, citation::kSchweizer);
        if (*r.schweizer.predicted != r.simplicity) {
            throw InvariantViolation("Schweizer prediction disagrees with the graph simplicity criterion");
        }
    }

    if (f.nonperiodic && !f.condition_L && f.no_sinks && f.no_sources) {
        r.counterexample_flags.emplace_back(counterexample::kNonperiodicButNotL);
    }
    if (f.nonperiodic && f.trivial_saturated_hereditary && r.simplicity == Simplicity::NotSimple) {
        r.counterexample_flags.emplace_back(counterexample::kNonperiodicTrivialInvariantNotSimple);
    }
    if (!f.nonperiodic) r.counterexample_flags.emplace_back(counterexample::kPeriodicDisjointCycles);

    check_report_consistency(r);
    return r;
}

void check_report_consistency(const AnalysisReport& r) {
    const auto& f = r.flags;
    auto require = [](bool ok, const char* what) {
        if (!ok) throw InvariantViolation(std::string("inconsistent report: ") + what);
    };
    require(f.finite && f.unital, "finite graphs give unital coefficient algebras");
    require(f.injective_left_action == f.no_sinks, "injective left action <=> no sinks");
    require(f.full == f.no_sources, "full <=> no sources");
    require(f.condition_S == (f.condition_L && f.no_sinks), "Condition (S) <=> Condition (L) and no sinks");
    require((r.simplicity == Simplicity::Simple) == (f.condition_L && f.trivial_saturated_hereditary),
            "simple <=> Condition (L) and trivial saturated hereditary lattice");
    require(f.nonperiodic == !r.periodicity.periodic, "nonperiodic flag matches periodicity");
    require(r.schweizer.hypotheses_hold() == (f.full && f.injective_left_action),
            "Schweizer hypotheses <=> full and injective");
}

} // namespace cpgraph
