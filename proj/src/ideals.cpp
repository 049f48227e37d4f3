#include "cpgraph/ideals.hpp"

#include <algorithm>

#include "cpgraph/errors.hpp"
#include "cpgraph/paths.hpp"

namespace cpgraph {

bool is_hereditary(const Graph& g, const VertexSubset& h) {
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) {
        if (h.contains(g.src(e)) && !h.contains(g.dst(e))) return false;
    }
    return true;
}

namespace {

bool all_out_edges_inside(const Graph& g, VertexIndex v, const VertexSubset& h) {
    auto out = g.out_edges(v);
    return std::all_of(out.begin(), out.end(), [&](EdgeIndex e) { return h.contains(g.dst(e)); });
}

} // namespace

bool is_saturated(const Graph& g, const VertexSubset& h) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (h.contains(v) || g.out_degree(v) == 0) continue;
        if (all_out_edges_inside(g, v, h)) return false;
    }
    return true;
}

VertexSubset hereditary_closure(const Graph& g, const VertexSubset& s) { return reachable_from(g, s); }

VertexSubset saturated_hereditary_closure(const Graph& g, const VertexSubset& s) {
    VertexSubset current = hereditary_closure(g, s);
    for (;;) {
        bool grew = false;
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
            if (!current.contains(v) && g.out_degree(v) > 0 && all_out_edges_inside(g, v, current)) {
                current.insert(v);
                grew = true;
            }
        }
        if (!grew) return current;
        current = hereditary_closure(g, current);
    }
}

std::string_view to_string(LatticeKind k) {
    return k == LatticeKind::Hereditary ? "hereditary" : "saturated_hereditary";
}

LatticeKind parse_lattice_kind(std::string_view text) {
    if (text == "hereditary") return LatticeKind::Hereditary;
    if (text == "satHer" || text == "saturated_hereditary") return LatticeKind::SaturatedHereditary;
    throw ArgumentError("unknown lattice kind '" + std::string(text) + "'");
}

bool SubsetLattice::trivial() const {
    return std::all_of(elements.begin(), elements.end(),
                       [](const VertexSubset& s) { return s.empty() || s.is_full(); });
}

bool SubsetLattice::contains(const VertexSubset& s) const {
    return std::find(elements.begin(), elements.end(), s) != elements.end();
}

SubsetLattice lattice(const Graph& g, LatticeKind kind, const Limits& limits) {
    const auto n = g.vertex_count();
    const auto cap = std::min(limits.max_lattice_vertices, kLatticeVertexCeiling);
    if (n > cap) {
        throw CapExceeded("lattice enumeration cap exceeded: " + std::to_string(n) + " vertices, cap is " +
                          std::to_string(cap));
    }

    // targets[v]: mask of ranges of edges emitted by v.
    std::vector<std::uint64_t> targets(n, 0);
    for (EdgeIndex e = 0; e < g.edge_count(); ++e) targets[g.src(e)] |= std::uint64_t{1} << g.dst(e);

    SubsetLattice result{kind, {}};
    const std::uint64_t end = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        bool ok = true;
        for (VertexIndex v = 0; v < n && ok; ++v) {
            const bool inside = (mask >> v) & 1U;
            if (inside) {
                ok = (targets[v] & ~mask) == 0;
            } else if (kind == LatticeKind::SaturatedHereditary && g.out_degree(v) > 0) {
                ok = (targets[v] & ~mask) != 0;
            }
        }
        if (ok) result.elements.push_back(VertexSubset::from_mask(n, mask));
    }
    std::sort(result.elements.begin(), result.elements.end());
    return result;
}

} // namespace cpgraph
