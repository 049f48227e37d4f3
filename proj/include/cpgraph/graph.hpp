#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cpgraph {

using VertexIndex = std::size_t;
using EdgeIndex = std::size_t;

/// An edge as it appears in input: e with s(e) = src and r(e) = dst.
struct EdgeRecord {
    std::string id;
    std::string src;
    std::string dst;

    bool operator==(const EdgeRecord&) const = default;
};

enum class IssueKind { DanglingEndpoint, DuplicateId };

struct ValidationIssue {
    IssueKind kind;
    std::string id;       // offending vertex or edge id
    std::size_t index;    // position in the vertex or edge list
    std::string message;
};

struct ValidationResult {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
};

/// Checks that ids are unique and every edge endpoint names a declared vertex.
/// Reports every violation, not just the first.
ValidationResult validate(std::span<const std::string> vertices, std::span<const EdgeRecord> edges);

/// Finite directed multigraph E = (E^0, E^1, r, s). Parallel edges and loops
/// are allowed. Vertex and edge order is the declaration order and decides
/// every tie-break in the library. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError carrying every validation issue.
    static Graph build(std::vector<std::string> vertices, std::vector<EdgeRecord> edges);

    std::size_t vertex_count() const noexcept { return vertex_ids_.size(); }
    std::size_t edge_count() const noexcept { return edge_ids_.size(); }
    bool empty() const noexcept { return vertex_ids_.empty(); }

    const std::string& vertex_id(VertexIndex v) const { return vertex_ids_.at(v); }
    const std::string& edge_id(EdgeIndex e) const { return edge_ids_.at(e); }
    VertexIndex src(EdgeIndex e) const { return src_.at(e); }
    VertexIndex dst(EdgeIndex e) const { return dst_.at(e); }

    /// Edges emitted by / received at v, in edge order.
    std::span<const EdgeIndex> out_edges(VertexIndex v) const { return out_.at(v); }
    std::span<const EdgeIndex> in_edges(VertexIndex v) const { return in_.at(v); }
    std::size_t out_degree(VertexIndex v) const { return out_.at(v).size(); }
    std::size_t in_degree(VertexIndex v) const { return in_.at(v).size(); }

    std::optional<VertexIndex> find_vertex(std::string_view id) const;
    std::optional<EdgeIndex> find_edge(std::string_view id) const;

    const std::vector<std::string>& vertex_ids() const noexcept { return vertex_ids_; }
    std::vector<EdgeRecord> edge_records() const;

    bool operator==(const Graph& other) const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::vector<VertexIndex> src_;
    std::vector<VertexIndex> dst_;
    std::vector<std::vector<EdgeIndex>> out_;
    std::vector<std::vector<EdgeIndex>> in_;
    std::unordered_map<std::string, VertexIndex> vertex_lookup_;
    std::unordered_map<std::string, EdgeIndex> edge_lookup_;
};

/// Subset of E^0, stored as a membership vector sized to the graph.
class VertexSubset {
public:
    VertexSubset() = default;
    explicit VertexSubset(std::size_t vertex_count) : members_(vertex_count, false) {}
    VertexSubset(std::size_t vertex_count, std::initializer_list<VertexIndex> members);

    static VertexSubset full(std::size_t vertex_count);
    static VertexSubset from_mask(std::size_t vertex_count, std::uint64_t mask);
    /// Throws GraphError for unknown ids.
    static VertexSubset from_ids(const Graph& g, std::span<const std::string> ids);

    std::size_t universe_size() const noexcept { return members_.size(); }
    bool contains(VertexIndex v) const { return members_.at(v); }
    void insert(VertexIndex v) { members_.at(v) = true; }
    void erase(VertexIndex v) { members_.at(v) = false; }
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    bool is_full() const { return size() == members_.size(); }

    std::vector<VertexIndex> members() const;
    std::vector<std::string> ids(const Graph& g) const;
    std::uint64_t mask() const;

    bool subset_of(const VertexSubset& other) const;
    VertexSubset operator&(const VertexSubset& other) const;
    VertexSubset operator|(const VertexSubset& other) const;

    bool operator==(const VertexSubset&) const = default;
    /// Orders by cardinality, then lexicographically by member indices.
    bool operator<(const VertexSubset& other) const;

private:
    std::vector<bool> members_;
};

std::string format_subset(const Graph& g, const VertexSubset& s);

} // namespace cpgraph
