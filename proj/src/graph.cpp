#include "cpgraph/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "cpgraph/errors.hpp"

namespace cpgraph {

ValidationResult validate(std::span<const std::string> vertices, std::span<const EdgeRecord> edges) {
    ValidationResult result;
    std::unordered_set<std::string_view> seen_vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!seen_vertices.insert(vertices[i]).second) {
            result.issues.push_back({IssueKind::DuplicateId, vertices[i], i,
                                     "duplicate id: vertex '" + vertices[i] + "'"});
        }
    }
    std::unordered_set<std::string_view> seen_edges;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (!seen_edges.insert(e.id).second) {
            result.issues.push_back({IssueKind::DuplicateId, e.id, i, "duplicate id: edge '" + e.id + "'"});
        }
        for (const std::string* end : {&e.src, &e.dst}) {
            if (!seen_vertices.contains(*end)) {
                result.issues.push_back({IssueKind::DanglingEndpoint, e.id, i,
                                         "dangling endpoint: edge '" + e.id + "' references absent vertex '" +
                                             *end + "'"});
            }
        }
    }
    return result;
}

Graph Graph::build(std::vector<std::string> vertices, std::vector<EdgeRecord> edges) {
    auto check = validate(vertices, edges);
    if (!check.ok()) {
        std::vector<Diagnostic> diags;
        for (auto& issue : check.issues) diags.push_back({{}, issue.message});
        throw GraphError("invalid graph", std::move(diags));
    }

    Graph g;
    g.vertex_ids_ = std::move(vertices);
    g.out_.resize(g.vertex_ids_.size());
    g.in_.resize(g.vertex_ids_.size());
    for (VertexIndex v = 0; v < g.vertex_ids_.size(); ++v) g.vertex_lookup_.emplace(g.vertex_ids_[v], v);

    g.edge_ids_.reserve(edges.size());
    for (EdgeIndex e = 0; e < edges.size(); ++e) {
        VertexIndex s = g.vertex_lookup_.at(edges[e].src);
        VertexIndex r = g.vertex_lookup_.at(edges[e].dst);
        g.edge_ids_.push_back(std::move(edges[e].id));
        g.src_.push_back(s);
        g.dst_.push_back(r);
        g.out_[s].push_back(e);
        g.in_[r].push_back(e);
        g.edge_lookup_.emplace(g.edge_ids_.back(), e);
    }
    return g;
}

std::optional<VertexIndex> Graph::find_vertex(std::string_view id) const {
    auto it = vertex_lookup_.find(std::string(id));
    if (it == vertex_lookup_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeIndex> Graph::find_edge(std::string_view id) const {
    auto it = edge_lookup_.find(std::string(id));
    if (it == edge_lookup_.end()) return std::nullopt;
    return it->second;
}

std::vector<EdgeRecord> Graph::edge_records() const {
    std::vector<EdgeRecord> out;
    out.reserve(edge_count());
    for (EdgeIndex e = 0; e < edge_count(); ++e) {
        out.push_back({edge_ids_[e], vertex_ids_[src_[e]], vertex_ids_[dst_[e]]});
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return vertex_ids_ == other.vertex_ids_ && edge_ids_ == other.edge_ids_ && src_ == other.src_ &&
           dst_ == other.dst_;
}

VertexSubset::VertexSubset(std::size_t vertex_count, std::initializer_list<VertexIndex> members)
    : members_(vertex_count, false) {
    for (auto v : members) insert(v);
}

VertexSubset VertexSubset::full(std::size_t vertex_count) {
    VertexSubset s(vertex_count);
    s.members_.assign(vertex_count, true);
    return s;
}

VertexSubset VertexSubset::from_mask(std::size_t vertex_count, std::uint64_t mask) {
    VertexSubset s(vertex_count);
    for (VertexIndex v = 0; v < vertex_count && v < 64; ++v) {
        if ((mask >> v) & 1U) s.members_[v] = true;
    }
    return s;
}

VertexSubset VertexSubset::from_ids(const Graph& g, std::span<const std::string> ids) {
    VertexSubset s(g.vertex_count());
    for (const auto& id : ids) {
        auto v = g.find_vertex(id);
        if (!v) throw GraphError("unknown vertex '" + id + "'");
        s.insert(*v);
    }
    return s;
}

std::size_t VertexSubset::size() const {
    return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<VertexIndex> VertexSubset::members() const {
    std::vector<VertexIndex> out;
    for (VertexIndex v = 0; v < members_.size(); ++v) {
        if (members_[v]) out.push_back(v);
    }
    return out;
}

std::vector<std::string> VertexSubset::ids(const Graph& g) const {
    std::vector<std::string> out;
    for (auto v : members()) out.push_back(g.vertex_id(v));
    return out;
}

std::uint64_t VertexSubset::mask() const {
    std::uint64_t m = 0;
    for (VertexIndex v = 0; v < members_.size() && v < 64; ++v) {
        if (members_[v]) m |= std::uint64_t{1} << v;
    }
    return m;
}

bool VertexSubset::subset_of(const VertexSubset& other) const {
    for (VertexIndex v = 0; v < members_.size(); ++v) {
        if (members_[v] && !other.members_.at(v)) return false;
    }
    return true;
}

VertexSubset VertexSubset::operator&(const VertexSubset& other) const {
    VertexSubset s(members_.size());
    for (VertexIndex v = 0; v < members_.size(); ++v) s.members_[v] = members_[v] && other.members_.at(v);
    return s;
}

VertexSubset VertexSubset::operator|(const VertexSubset& other) const {
    VertexSubset s(members_.size());
    for (VertexIndex v = 0; v < members_.size(); ++v) s.members_[v] = members_[v] || other.members_.at(v);
    return s;
}

bool VertexSubset::operator<(const VertexSubset& other) const {
    auto a = size();
    auto b = other.size();
    if (a != b) return a < b;
    return members() < other.members();
}

std::string format_subset(const Graph& g, const VertexSubset& s) {
    std::string out = "{";
    bool first = true;
    for (auto v : s.members()) {
        if (!first) out += ", ";
        out += g.vertex_id(v);
        first = false;
    }
    return out + "}";
}

} // namespace cpgraph
