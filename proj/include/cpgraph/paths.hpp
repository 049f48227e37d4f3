#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cpgraph/graph.hpp"
#include "cpgraph/limits.hpp"

namespace cpgraph {

/// Composable edge sequence e_1 ... e_n with r(e_i) = s(e_{i+1}).
/// Ordering is lexicographic in edge order.
struct Path {
    std::vector<EdgeIndex> edges;

    std::size_t length() const noexcept { return edges.size(); }
    EdgeIndex first() const { return edges.front(); }
    EdgeIndex last() const { return edges.back(); }

    auto operator<=>(const Path&) const = default;
    bool operator==(const Path&) const = default;
};

/// Nonempty, in range, and composable in g.
bool is_path(const Graph& g, std::span<const EdgeIndex> edges);
/// Throws ArgumentError unless is_path.
Path make_path(const Graph& g, std::vector<EdgeIndex> edges);
/// Looks up edge ids; throws GraphError on unknown ids, ArgumentError if not composable.
Path make_path(const Graph& g, std::span<const std::string> edge_ids);

VertexIndex path_source(const Graph& g, const Path& p);
VertexIndex path_range(const Graph& g, const Path& p);
bool is_cycle(const Graph& g, const Path& p);

/// Edge ids joined by '.'; the same string power_graph uses as an edge id.
std::string path_label(const Graph& g, const Path& p);
std::string format_path(const Graph& g, const Path& p);

struct VertexClasses {
    VertexSubset sinks;    // out-degree 0
    VertexSubset sources;  // in-degree 0
    VertexSubset regular;  // out-degree >= 1
};

VertexClasses vertex_classes(const Graph& g);

/// Visits every path of length n (lexicographic edge order) whose source is in
/// `from` when given. The visitor returns false to stop early; the return value
/// tells whether enumeration ran to completion.
bool for_each_path(const Graph& g, std::size_t n, const std::optional<VertexSubset>& from,
                   const std::function<bool(const Path&)>& visit);

/// All paths of length n >= 1, filtered by source in `from` and range in `to`.
/// Throws CapExceeded when the result would exceed limits.max_paths.
std::vector<Path> paths_of_length(const Graph& g, std::size_t n,
                                  const std::optional<VertexSubset>& from = std::nullopt,
                                  const std::optional<VertexSubset>& to = std::nullopt,
                                  const Limits& limits = {});

/// Number of paths of length n leaving each vertex, saturating at UINT64_MAX.
std::vector<std::uint64_t> path_counts_from(const Graph& g, std::size_t n);

/// E^{xn} = (E^0, E^n, r, s). Edge ids are the constituent ids joined by '.',
/// which makes power_graph(power_graph(g, a), b) and power_graph(g, a*b)
/// carry identical ids.
Graph power_graph(const Graph& g, std::size_t n, const Limits& limits = {});

/// Elementary circuits (no repeated vertex), parallel edges kept distinct.
/// Each circuit appears once, rotated to start at its smallest vertex; output
/// is sorted by (base vertex, edge sequence). Johnson's algorithm.
std::vector<Path> simple_cycles(const Graph& g, const Limits& limits = {});

/// Edges f with s(f) = s(e_i) and f != e_i for some i. Sorted, no duplicates.
/// Throws ArgumentError("not a cycle") unless c is a cycle of g.
std::vector<EdgeIndex> cycle_exits(const Graph& g, const Path& c);

struct Connectivity {
    bool weakly_connected;
    bool strongly_connected;
};

/// Throws GraphError("empty graph") on a graph without vertices.
Connectivity connectivity(const Graph& g);

/// Vertices reachable from `start` by paths of length >= 0.
VertexSubset reachable_from(const Graph& g, const VertexSubset& start);

} // namespace cpgraph
