#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cpgraph/correspondence.hpp"
#include "cpgraph/graph.hpp"
#include "cpgraph/limits.hpp"
#include "cpgraph/paths.hpp"

namespace cpgraph {

/// The last edge occurs at an earlier position.
bool is_returning(const Path& p);

/// Nonempty set of equal-length paths where no path's last edge equals a
/// non-final edge of any member (itself included). Throws ArgumentError for an
/// empty set or mixed lengths.
bool is_nonreturning_set(std::span<const Path> paths);

struct ConditionLResult {
    bool holds;
    std::optional<Path> violating_cycle;
};

/// Every cycle has an exit. A cycle is exitless exactly when each of its
/// vertices emits a single edge, so this only inspects the out-degree-1
/// subgraph. The violating cycle is the exitless cycle through the smallest
/// possible vertex, rotated to start there.
ConditionLResult condition_L(const Graph& g);

/// All exitless cycles in canonical form, ordered by base vertex. They are
/// vertex-disjoint.
std::vector<Path> exitless_cycles(const Graph& g);

/// Brute force: enumerate elementary cycles and test each for an exit.
ConditionLResult condition_L_by_enumeration(const Graph& g, const Limits& limits = {});

enum class ConditionSReason { Ok, HasSinks, FailsL };

std::string_view to_string(ConditionSReason r);

struct ConditionSResult {
    bool holds;
    ConditionSReason reason;
};

/// For a finite graph, Condition (S) on X(E) holds iff E has no sinks and
/// satisfies Condition (L). Sinks are reported first.
ConditionSResult condition_S(const Graph& g);

enum class PeriodicityMethod { Structural, DirectPower };

std::string_view to_string(PeriodicityMethod m);

struct PeriodicityVerdict {
    bool periodic = false;
    std::optional<std::size_t> minimal_period;
    PeriodicityMethod method = PeriodicityMethod::Structural;
    /// DirectPower only: no period found up to `bound`. Says nothing beyond it.
    bool bound_exhausted = false;
    std::size_t bound = 0;
};

/// Periodic iff every vertex has in- and out-degree exactly 1, i.e. the graph
/// is a disjoint union of simple cycles; the minimal period is the lcm of the
/// cycle lengths. Throws GraphError on an empty graph, CapExceeded if the lcm
/// overflows.
PeriodicityVerdict periodicity(const Graph& g);

/// Oracle: least n in [1, bound] such that E^{xn} is exactly one loop per
/// vertex, found by building the power graphs. Without an explicit bound it uses
/// the structural lcm when all degrees are 1 and 2|E^0| otherwise.
PeriodicityVerdict periodicity_by_powers(const Graph& g, std::optional<std::size_t> bound = std::nullopt,
                                         const Limits& limits = {});

struct WitnessRequest {
    VertexWeights a;
    std::size_t n = 0;
    double epsilon = 0.5;
    std::size_t max_length = 1;
};

struct Witness {
    std::size_t m;
    Path alpha;
};

/// Vertices v with a(v) > ||a|| - epsilon.
VertexSubset witness_support(const VertexWeights& a, double epsilon);

/// Searches m = n+1 .. max_length, each length in lexicographic edge order,
/// for a nonreturning path alpha with s(alpha) in the witness support whose
/// delta vector is nonreturning. Then ||<delta_alpha, a delta_alpha>|| =
/// a(s(alpha)) > ||a|| - epsilon. Returns nullopt when the bound is exhausted;
/// this never proves that no witness exists.
/// Throws ArgumentError for a = 0, epsilon outside (0, ||a||], or
/// max_length <= n; CapExceeded when more than limits.max_paths paths are visited.
std::optional<Witness> find_witness(const Graph& g, const WitnessRequest& req, const Limits& limits = {});

} // namespace cpgraph
