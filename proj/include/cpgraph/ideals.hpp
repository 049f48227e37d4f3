#pragma once

#include <string_view>
#include <vector>

#include "cpgraph/graph.hpp"
#include "cpgraph/limits.hpp"

namespace cpgraph {

// Vertex subsets H standing for ideals C(H) of C(E^0).

/// Every edge leaving H lands in H.
bool is_hereditary(const Graph& g, const VertexSubset& h);

/// Every regular vertex outside H emits some edge landing outside H.
bool is_saturated(const Graph& g, const VertexSubset& h);

/// Smallest hereditary superset.
VertexSubset hereditary_closure(const Graph& g, const VertexSubset& s);

/// Smallest saturated hereditary superset: alternate forward closure and
/// saturation until nothing changes.
VertexSubset saturated_hereditary_closure(const Graph& g, const VertexSubset& s);

enum class LatticeKind { Hereditary, SaturatedHereditary };

std::string_view to_string(LatticeKind k);
/// Accepts "hereditary", "satHer" and "saturated_hereditary".
LatticeKind parse_lattice_kind(std::string_view text);

struct SubsetLattice {
    LatticeKind kind;
    /// Sorted by cardinality, then by member indices.
    std::vector<VertexSubset> elements;

    /// Only the empty set and the full vertex set.
    bool trivial() const;
    bool contains(const VertexSubset& s) const;
};

/// Exhaustive enumeration. Throws CapExceeded when the graph has more than
/// limits.max_lattice_vertices vertices.
SubsetLattice lattice(const Graph& g, LatticeKind kind, const Limits& limits = {});

} // namespace cpgraph
