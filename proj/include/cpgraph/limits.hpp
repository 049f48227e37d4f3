#pragma once

#include <cstddef>

namespace cpgraph {

/// Enumeration caps. Exceeding any of them raises CapExceeded; nothing is
/// ever truncated.
struct Limits {
    /// Largest path set (power graph edges, witness search visits).
    std::size_t max_paths = 1'000'000;
    /// Largest number of elementary cycles reported.
    std::size_t max_cycles = 100'000;
    /// Largest vertex count for exhaustive subset-lattice enumeration.
    std::size_t max_lattice_vertices = 16;
};

/// Hard ceiling for max_lattice_vertices; subsets are enumerated as 64-bit masks.
inline constexpr std::size_t kLatticeVertexCeiling = 30;

} // namespace cpgraph
