#include "cpgraph/paths.hpp"

#include <algorithm>
#include <limits>

#include "cpgraph/errors.hpp"

namespace cpgraph {

bool is_path(const Graph& g, std::span<const EdgeIndex> edges) {
    if (edges.empty()) return false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (edges[i] >= g.edge_count()) return false;
        if (i > 0 && g.dst(edges[i - 1]) != g.src(edges[i])) return false;
    }
    return true;
}

Path make_path(const Graph& g, std::vector<EdgeIndex> edges) {
    if (!is_path(g, edges)) throw ArgumentError("edge sequence is not a path of the graph");
    return Path{std::move(edges)};
}

Path make_path(const Graph& g, std::span<const std::string> edge_ids) {
    std::vector<EdgeIndex> edges;
    edges.reserve(edge_ids.size());
    for (const auto& id : edge_ids) {
        auto e = g.find_edge(id);
        if (!e) throw GraphError("unknown edge '" + id + "'");
        edges.push_back(*e);
    }
    return make_path(g, std::move(edges));
}

VertexIndex path_source(const Graph& g, const Path& p) { return g.src(p.first()); }
VertexIndex path_range(const Graph& g, const Path& p) { return g.dst(p.last()); }

bool is_cycle(const Graph& g, const Path& p) {
    return is_path(g, p.edges) && path_source(g, p) == path_range(g, p);
}

std::string path_label(const Graph& g, const Path& p) {
    std::string out;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i > 0) out += '.';
        out += g.edge_id(p.edges[i]);
    }
    return out;
}

std::string format_path(const Graph& g, const Path& p) { return "(" + path_label(g, p) + ")"; }

VertexClasses vertex_classes(const Graph& g) {
    const auto n = g.vertex_count();
    VertexClasses c{VertexSubset(n), VertexSubset(n), VertexSubset(n)};
    for (VertexIndex v = 0; v < n; ++v) {
        if (g.out_degree(v) == 0) {
            c.sinks.insert(v);
        } else {
            c.regular.insert(v);
        }
        if (g.in_degree(v) == 0) c.sources.insert(v);
    }
    return c;
}

namespace {

bool extend(const Graph& g, std::size_t n, Path& current, const std::function<bool(const Path&)>& visit) {
    if (current.length() == n) return visit(current);
    for (EdgeIndex e : g.out_edges(g.dst(current.last()))) {
        current.edges.push_back(e);
        bool keep_going = extend(g, n, current, visit);
        current.edges.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

} // namespace

bool for_each_path(const Graph& g, std::size_t n, const std::optional<VertexSubset>& from,
                   const std::function<bool(const Path&)>& visit) {
    if (n == 0) throw ArgumentError("path length must be at least 1");
    Path current;
    current.edges.reserve(n);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (from && !from->contains(g.src(e))) continue;
        current.edges.assign(1, e);
        if (!extend(g, n, current, visit)) return false;
    }
    return true;
}

std::vector<Path> paths_of_length(const Graph& g, std::size_t n, const std::optional<VertexSubset>& from,
                                  const std::optional<VertexSubset>& to, const Limits& limits) {
    std::vector<Path> out;
    for_each_path(g, n, from, [&](const Path& p) {
        if (to && !to->contains(path_range(g, p))) return true;
        if (out.size() == limits.max_paths) {
            throw CapExceeded("path set too large: more than " + std::to_string(limits.max_paths) +
                              " paths of length " + std::to_string(n));
        }
        out.push_back(p);
        return true;
    });
    return out;
}

std::vector<std::uint64_t> path_counts_from(const Graph& g, std::size_t n) {
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> counts(g.vertex_count(), 1);
    std::vector<std::uint64_t> next(g.vertex_count());
    for (std::size_t step = 0; step < n; ++step) {
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            std::uint64_t total = 0;
            for (EdgeIndex e : g.out_edges(v)) {
                auto c = counts[g.dst(e)];
                total = (kMax - total < c) ? kMax : total + c;
            }
            next[v] = total;
        }
        counts.swap(next);
    }
    return counts;
}

Graph power_graph(const Graph& g, std::size_t n, const Limits& limits) {
    if (n == 0) throw ArgumentError("power must be at least 1");
    std::uint64_t total = 0;
    for (auto c : path_counts_from(g, n)) {
        total = (std::numeric_limits<std::uint64_t>::max() - total < c) ? std::numeric_limits<std::uint64_t>::max()
                                                                          : total + c;
    }
    if (total > limits.max_paths) {
        throw CapExceeded("power graph too large: " + std::to_string(total) + " paths of length " +
                          std::to_string(n) + " exceed the cap of " + std::to_string(limits.max_paths));
    }

    std::vector<EdgeRecord> edges;
    edges.reserve(static_cast<std::size_t>(total));
    for_each_path(g, n, std::nullopt, [&](const Path& p) {
        edges.push_back({path_label(g, p), g.vertex_id(path_source(g, p)), g.vertex_id(path_range(g, p))});
        return true;
    });
    try {
        return Graph::build(g.vertex_ids(), std::move(edges));
    } catch (const GraphError& e) {
        // Only reachable when an original edge id contains '.'.
        throw GraphError(std::string("power graph edge ids are ambiguous: ") + e.what());
    }
}

namespace {

// Johnson's elementary circuit search, one root vertex at a time.
class CircuitSearch {
public:
    CircuitSearch(const Graph& g, const Limits& limits, std::vector<Path>& out)
        : g_(g), limits_(limits), out_(out), allowed_(g.vertex_count()), blocked_(g.vertex_count()),
          blocked_by_(g.vertex_count()) {}

    void run_from(VertexIndex root) {
        root_ = root;
        restrict_to_component(root);
        std::fill(blocked_.begin(), blocked_.end(), false);
        for (auto& b : blocked_by_) b.clear();
        stack_.clear();
        circuit(root);
    }

private:
    // Strongly connected component of root inside the subgraph on vertices >= root.
    void restrict_to_component(VertexIndex root) {
        const auto n = g_.vertex_count();
        std::vector<bool> fwd(n, false), bwd(n, false);
        auto sweep = [&](std::vector<bool>& seen, bool forward) {
            std::vector<VertexIndex> work{root};
            seen[root] = true;
            while (!work.empty()) {
                auto v = work.back();
                work.pop_back();
                auto edges = forward ? g_.out_edges(v) : g_.in_edges(v);
                for (EdgeIndex e : edges) {
                    auto w = forward ? g_.dst(e) : g_.src(e);
                    if (w < root || seen[w]) continue;
                    seen[w] = true;
                    work.push_back(w);
                }
            }
        };
        sweep(fwd, true);
        sweep(bwd, false);
        for (VertexIndex v = 0; v < n; ++v) allowed_[v] = fwd[v] && bwd[v];
    }

    void unblock(VertexIndex u) {
        blocked_[u] = false;
        auto pending = std::move(blocked_by_[u]);
        blocked_by_[u].clear();
        for (auto w : pending) {
            if (blocked_[w]) unblock(w);
        }
    }

    bool circuit(VertexIndex v) {
        bool found = false;
        blocked_[v] = true;
        for (EdgeIndex e : g_.out_edges(v)) {
            auto w = g_.dst(e);
            if (!allowed_[w]) continue;
            if (w == root_) {
                if (out_.size() == limits_.max_cycles) {
                    throw CapExceeded("more than " + std::to_string(limits_.max_cycles) + " elementary cycles");
                }
                Path p{stack_};
                p.edges.push_back(e);
                out_.push_back(std::move(p));
                found = true;
            } else if (!blocked_[w]) {
                stack_.push_back(e);
                if (circuit(w)) found = true;
                stack_.pop_back();
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (EdgeIndex e : g_.out_edges(v)) {
                auto w = g_.dst(e);
                if (!allowed_[w]) continue;
                auto& list = blocked_by_[w];
                if (std::find(list.begin(), list.end(), v) == list.end()) list.push_back(v);
            }
        }
        return found;
    }

    const Graph& g_;
    const Limits& limits_;
    std::vector<Path>& out_;
    VertexIndex root_ = 0;
    std::vector<bool> allowed_;
    std::vector<bool> blocked_;
    std::vector<std::vector<VertexIndex>> blocked_by_;
    std::vector<EdgeIndex> stack_;
};

} // namespace

std::vector<Path> simple_cycles(const Graph& g, const Limits& limits) {
    std::vector<Path> out;
    CircuitSearch search(g, limits, out);
    for (VertexIndex root = 0; root < g.vertex_count(); ++root) search.run_from(root);
    std::sort(out.begin(), out.end(), [&](const Path& a, const Path& b) {
        auto sa = path_source(g, a);
        auto sb = path_source(g, b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

std::vector<EdgeIndex> cycle_exits(const Graph& g, const Path& c) {
    if (!is_cycle(g, c)) throw ArgumentError("not a cycle");
    std::vector<EdgeIndex> exits;
    for (EdgeIndex cycle_edge : c.edges) {
        for (EdgeIndex f : g.out_edges(g.src(cycle_edge))) {
            if (f != cycle_edge) exits.push_back(f);
        }
    }
    std::sort(exits.begin(), exits.end());
    exits.erase(std::unique(exits.begin(), exits.end()), exits.end());
    return exits;
}

VertexSubset reachable_from(const Graph& g, const VertexSubset& start) {
    VertexSubset seen = start;
    std::vector<VertexIndex> work = start.members();
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        for (EdgeIndex e : g.out_edges(v)) {
            auto w = g.dst(e);
            if (!seen.contains(w)) {
                seen.insert(w);
                work.push_back(w);
            }
        }
    }
    return seen;
}

Connectivity connectivity(const Graph& g) {
    if (g.empty()) throw GraphError("empty graph");
    const auto n = g.vertex_count();

    std::vector<bool> seen(n, false);
    std::vector<VertexIndex> work{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!work.empty()) {
        auto v = work.back();
        work.pop_back();
        auto visit = [&](VertexIndex w) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                work.push_back(w);
            }
        };
        for (EdgeIndex e : g.out_edges(v)) visit(g.dst(e));
        for (EdgeIndex e : g.in_edges(v)) visit(g.src(e));
    }
    const bool weak = reached == n;

    bool strong = false;
    if (weak) {
        VertexSubset root(n, {0});
        strong = reachable_from(g, root).is_full();
        if (strong) {
            // Every vertex must also reach vertex 0.
            std::vector<bool> back(n, false);
            back[0] = true;
            std::vector<VertexIndex> queue{0};
            std::size_t count = 1;
            while (!queue.empty()) {
                auto v = queue.back();
                queue.pop_back();
                for (EdgeIndex e : g.in_edges(v)) {
                    auto w = g.src(e);
                    if (!back[w]) {
                        back[w] = true;
                        ++count;
                        queue.push_back(w);
                    }
                }
            }
            strong = count == n;
        }
    }
    return {weak, strong};
}

} // namespace cpgraph
