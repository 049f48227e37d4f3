#include "cpgraph/conditions.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "cpgraph/errors.hpp"

namespace cpgraph {

bool is_returning(const Path& p) {
    if (p.length() < 2) return false;
    return std::find(p.edges.begin(), p.edges.end() - 1, p.last()) != p.edges.end() - 1;
}

bool is_nonreturning_set(std::span<const Path> paths) {
    if (paths.empty()) throw ArgumentError("nonempty required: a nonreturning set must contain a path");
    const auto n = paths.front().length();
    std::unordered_set<EdgeIndex> non_final;
    for (const auto& p : paths) {
        if (p.length() != n) throw ArgumentError("mixed lengths: all paths must have length " + std::to_string(n));
        if (n == 0) throw ArgumentError("paths must be nonempty");
        non_final.insert(p.edges.begin(), p.edges.end() - 1);
    }
    return std::none_of(paths.begin(), paths.end(), [&](const Path& p) { return non_final.contains(p.last()); });
}

std::vector<Path> exitless_cycles(const Graph& g) {
    const auto n = g.vertex_count();
    // 0 = unseen, 1 = on the current walk, 2 = finished
    std::vector<int> state(n, 0);
    std::vector<Path> cycles;
    for (VertexIndex start = 0; start < n; ++start) {
        std::vector<VertexIndex> walk;
        VertexIndex v = start;
        while (state[v] == 0 && g.out_degree(v) == 1) {
            state[v] = 1;
            walk.push_back(v);
            v = g.dst(g.out_edges(v)[0]);
        }
        if (state[v] == 1) {
            // v closes a cycle of out-degree-1 vertices; rotate it to its smallest vertex.
            auto pos = std::find(walk.begin(), walk.end(), v);
            VertexIndex base = *std::min_element(pos, walk.end());
            Path cycle;
            VertexIndex u = base;
            do {
                EdgeIndex e = g.out_edges(u)[0];
                cycle.edges.push_back(e);
                u = g.dst(e);
            } while (u != base);
            cycles.push_back(std::move(cycle));
        }
        for (auto w : walk) state[w] = 2;
    }
    std::sort(cycles.begin(), cycles.end(),
              [&](const Path& a, const Path& b) { return path_source(g, a) < path_source(g, b); });
    return cycles;
}

ConditionLResult condition_L(const Graph& g) {
    auto cycles = exitless_cycles(g);
    if (cycles.empty()) return {true, std::nullopt};
    return {false, std::move(cycles.front())};
}

ConditionLResult condition_L_by_enumeration(const Graph& g, const Limits& limits) {
    for (auto& c : simple_cycles(g, limits)) {
        if (cycle_exits(g, c).empty()) return {false, std::move(c)};
    }
    return {true, std::nullopt};
}

std::string_view to_string(ConditionSReason r) {
    switch (r) {
    case ConditionSReason::Ok: return "ok";
    case ConditionSReason::HasSinks: return "has_sinks";
    case ConditionSReason::FailsL: return "fails_L";
    }
    return "?";
}

ConditionSResult condition_S(const Graph& g) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) == 0) return {false, ConditionSReason::HasSinks};
    }
    if (!condition_L(g).holds) return {false, ConditionSReason::FailsL};
    return {true, ConditionSReason::Ok};
}

std::string_view to_string(PeriodicityMethod m) {
    return m == PeriodicityMethod::Structural ? "structural" : "direct-power";
}

namespace {

bool all_unit_degrees(const Graph& g) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) != 1 || g.in_degree(v) != 1) return false;
    }
    return true;
}

// Graph must have all degrees 1, i.e. be a permutation of its vertices.
std::size_t cycle_length_lcm(const Graph& g) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::size_t period = 1;
    for (VertexIndex start = 0; start < g.vertex_count(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        VertexIndex v = start;
        do {
            seen[v] = true;
            v = g.dst(g.out_edges(v)[0]);
            ++len;
        } while (v != start);
        std::size_t step = period / std::gcd(period, len);
        if (step > std::numeric_limits<std::size_t>::max() / len) {
            throw CapExceeded("period does not fit in 64 bits");
        }
        period = step * len;
    }
    return period;
}

bool is_one_loop_per_vertex(const Graph& power) {
    for (EdgeIndex e = 0; e < power.edge_count(); ++e) {
        if (power.src(e) != power.dst(e)) return false;
    }
    for (VertexIndex v = 0; v < power.vertex_count(); ++v) {
        if (power.out_degree(v) != 1) return false;
    }
    return true;
}

} // namespace

PeriodicityVerdict periodicity(const Graph& g) {
    if (g.empty()) throw GraphError("empty graph");
    PeriodicityVerdict verdict;
    verdict.method = PeriodicityMethod::Structural;
    if (all_unit_degrees(g)) {
        verdict.periodic = true;
        verdict.minimal_period = cycle_length_lcm(g);
    }
    return verdict;
}

PeriodicityVerdict periodicity_by_powers(const Graph& g, std::optional<std::size_t> bound, const Limits& limits) {
    if (g.empty()) throw GraphError("empty graph");
    PeriodicityVerdict verdict;
    verdict.method = PeriodicityMethod::DirectPower;
    verdict.bound = bound ? *bound : (all_unit_degrees(g) ? cycle_length_lcm(g) : 2 * g.vertex_count());

    for (std::size_t n = 1; n <= verdict.bound; ++n) {
        // One loop per vertex needs exactly one length-n path out of every
        // vertex; skip building power graphs that cannot qualify.
        auto counts = path_counts_from(g, n);
        if (!std::all_of(counts.begin(), counts.end(), [](std::uint64_t c) { return c == 1; })) continue;
        if (is_one_loop_per_vertex(power_graph(g, n, limits))) {
            verdict.periodic = true;
            verdict.minimal_period = n;
            return verdict;
        }
    }
    verdict.bound_exhausted = true;
    return verdict;
}

VertexSubset witness_support(const VertexWeights& a, double epsilon) {
    const Graph& g = a.graph();
    const double threshold = a.sup_norm() - epsilon;
    VertexSubset support(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (a(v) > threshold) support.insert(v);
    }
    return support;
}

std::optional<Witness> find_witness(const Graph& g, const WitnessRequest& req, const Limits& limits) {
    if (&req.a.graph() != &g) throw ArgumentError("weights belong to a different graph");
    if (req.a.is_zero()) throw ArgumentError("weights must be nonzero");
    if (!(req.epsilon > 0.0) || req.epsilon > req.a.sup_norm()) {
        throw ArgumentError("epsilon must lie in (0, ||a||]");
    }
    if (req.max_length <= req.n) throw ArgumentError("max_length must exceed n");

    const auto support = witness_support(req.a, req.epsilon);
    std::size_t visited = 0;
    std::optional<Witness> found;
    for (std::size_t m = req.n + 1; m <= req.max_length && !found; ++m) {
        for_each_path(g, m, support, [&](const Path& p) {
            if (++visited > limits.max_paths) {
                throw CapExceeded("witness search visited more than " + std::to_string(limits.max_paths) + " paths");
            }
            if (!is_returning(p) && is_nonreturning_vector(g, p)) {
                found = Witness{m, p};
                return false;
            }
            return true;
        });
    }
    return found;
}

} // namespace cpgraph
