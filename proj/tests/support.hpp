#pragma once

// Shared fixtures, random generators and brute-force oracles for the test
// binaries. Oracles here deliberately avoid the library's own enumeration code.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cpgraph/correspondence.hpp"
#include "cpgraph/graph.hpp"
#include "cpgraph/paths.hpp"

namespace cpgraph::testing {

inline std::string fixture_path(const std::string& name) { return std::string(CPGRAPH_FIXTURE_DIR) + "/" + name; }

inline Graph graph_from(std::vector<std::string> vertices, std::vector<EdgeRecord> edges) {
    return Graph::build(std::move(vertices), std::move(edges));
}

/// C_n: v1 -> v2 -> ... -> vn -> v1 with edges e1..en.
inline Graph cycle_graph(std::size_t n) {
    std::vector<std::string> vs;
    std::vector<EdgeRecord> es;
    for (std::size_t i = 1; i <= n; ++i) vs.push_back("v" + std::to_string(i));
    for (std::size_t i = 1; i <= n; ++i) {
        es.push_back({"e" + std::to_string(i), "v" + std::to_string(i), "v" + std::to_string(i % n + 1)});
    }
    return graph_from(vs, es);
}

inline Graph source_loop() { return graph_from({"u", "w"}, {{"b", "u", "w"}, {"c", "w", "w"}}); }

inline Graph two_loops() { return graph_from({"u", "w"}, {{"a", "u", "u"}, {"b", "u", "w"}, {"c", "w", "w"}}); }

inline Graph exit_graph() {
    return graph_from({"u", "w"}, {{"a", "u", "u"}, {"b", "u", "w"}, {"c", "w", "w"}, {"d", "w", "u"}});
}

inline Graph lcm_graph() {
    return graph_from({"v1", "v2", "w1", "w2", "w3", "x1", "x2", "x3", "x4"},
                      {{"f1", "v1", "v2"},
                       {"f2", "v2", "v1"},
                       {"g1", "w1", "w2"},
                       {"g2", "w2", "w3"},
                       {"g3", "w3", "w1"},
                       {"h1", "x1", "x2"},
                       {"h2", "x2", "x3"},
                       {"h3", "x3", "x4"},
                       {"h4", "x4", "x1"}});
}

inline Path path_of(const Graph& g, std::vector<std::string> ids) { return make_path(g, std::span<const std::string>(ids)); }

/// Graph on vertices v0.. with edges e0.. taken from (src, dst) index pairs.
inline Graph graph_from_pairs(std::size_t vertex_count, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::string> vs;
    for (std::size_t i = 0; i < vertex_count; ++i) vs.push_back("v" + std::to_string(i));
    std::vector<EdgeRecord> es;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        es.push_back({"e" + std::to_string(i), vs[pairs[i].first], vs[pairs[i].second]});
    }
    return Graph::build(vs, es);
}

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline Graph random_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices, std::size_t max_edges) {
    const auto n = uniform(rng, min_vertices, max_vertices);
    const auto m = uniform(rng, 0, max_edges);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < m; ++i) pairs.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    return graph_from_pairs(n, pairs);
}

inline bool has_sinks_or_sources(const Graph& g) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (g.out_degree(v) == 0 || g.in_degree(v) == 0) return true;
    }
    return false;
}

/// Random graph with no sinks and no sources. Every fourth draw is a shuffled
/// disjoint union of cycles (so periodic cases are well represented), the rest
/// are rejection sampled from uniform multigraphs.
inline Graph random_sink_source_free(Rng& rng, std::size_t max_vertices, std::size_t max_edges) {
    if (uniform(rng, 0, 3) == 0) {
        const auto n = uniform(rng, 1, max_vertices);
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        // cut the shuffled order into consecutive blocks, each a cycle
        std::size_t start = 0;
        while (start < n) {
            auto len = uniform(rng, 1, n - start);
            for (std::size_t i = 0; i < len; ++i) {
                pairs.emplace_back(perm[start + i], perm[start + (i + 1) % len]);
            }
            start += len;
        }
        std::shuffle(pairs.begin(), pairs.end(), rng);
        return graph_from_pairs(n, pairs);
    }
    for (;;) {
        auto g = random_graph(rng, 1, max_vertices, max_edges);
        if (!has_sinks_or_sources(g)) return g;
    }
}

/// Random strongly connected graph: a Hamiltonian cycle in random order plus
/// 0..extra random edges.
inline Graph random_strongly_connected(Rng& rng, std::size_t min_vertices, std::size_t max_vertices,
                                       std::size_t extra) {
    const auto n = uniform(rng, min_vertices, max_vertices);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(perm[i], perm[(i + 1) % n]);
    const auto k = uniform(rng, 0, extra);
    for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    std::shuffle(pairs.begin(), pairs.end(), rng);
    return graph_from_pairs(n, pairs);
}

// ---------------------------------------------------------------- oracles

using Matrix = std::vector<std::vector<std::uint64_t>>;

inline Matrix adjacency_counts(const Graph& g) {
    const auto n = g.vertex_count();
    Matrix a(n, std::vector<std::uint64_t>(n, 0));
    for (const auto& e : g.edge_records()) ++a[*g.find_vertex(e.src)][*g.find_vertex(e.dst)];
    return a;
}

inline Matrix multiply(const Matrix& x, const Matrix& y) {
    const auto n = x.size();
    Matrix z(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
}

inline Matrix matrix_power(const Matrix& a, std::size_t p) {
    const auto n = a.size();
    Matrix r(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
    for (std::size_t i = 0; i < p; ++i) r = multiply(r, a);
    return r;
}

inline std::uint64_t matrix_total(const Matrix& a) {
    std::uint64_t t = 0;
    for (const auto& row : a)
        for (auto v : row) t += v;
    return t;
}

/// Every edge sequence of length k that composes, built by brute force over
/// edge tuples rather than by following adjacency.
inline std::vector<Path> all_paths_brute(const Graph& g, std::size_t k) {
    std::vector<Path> out;
    const auto m = g.edge_count();
    if (m == 0) return out;
    std::vector<EdgeIndex> idx(k, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t i = 1; i < k && ok; ++i) ok = g.dst(idx[i - 1]) == g.src(idx[i]);
        if (ok) out.push_back(Path{idx});
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < m) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
        if (k == 0) return out;
    }
}

/// Sandwich S_alpha^* S_beta S_alpha evaluated from the Cuntz-Krieger
/// relations: S_e^* S_f = 0 for e != f, S_e^* S_e = P_{r(e)}. Cancels alpha
/// against the word beta.alpha letter by letter and returns the leftover word,
/// or nullopt when some relation kills the product.
inline std::optional<std::vector<EdgeIndex>> sandwich_by_relations(const Graph& g, const Path& alpha,
                                                                   const Path& beta) {
    if (g.dst(beta.last()) != g.src(alpha.first())) return std::nullopt; // S_beta S_alpha = 0
    std::vector<EdgeIndex> word = beta.edges;
    word.insert(word.end(), alpha.edges.begin(), alpha.edges.end());
    std::size_t pos = 0;
    for (auto e : alpha.edges) {
        if (word[pos] != e) return std::nullopt;
        ++pos;
    }
    return std::vector<EdgeIndex>(word.begin() + static_cast<std::ptrdiff_t>(pos), word.end());
}

/// Nonreturning-vector test over every middle path beta of every length
/// 1..m-1, not just prefixes of alpha.
inline bool nonreturning_vector_brute(const Graph& g, const Path& alpha) {
    for (std::size_t k = 1; k < alpha.length(); ++k) {
        for (const auto& beta : all_paths_brute(g, k)) {
            if (sandwich_by_relations(g, alpha, beta)) return false;
        }
    }
    return true;
}

} // namespace cpgraph::testing
