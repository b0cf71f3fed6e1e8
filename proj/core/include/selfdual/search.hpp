#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace selfdual {

/// Vertices 0..vertices-1; each edge is a sorted, duplicate-free vertex list.
struct Hypergraph {
  int vertices = 0;
  std::vector<std::vector<int>> edges;
};

struct SearchOptions {
  std::uint64_t node_budget = 100'000'000;
  int threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

/// Backtracking search for a coloring of the vertices with `colors` colors and
/// no monochromatic edge. Vertices are assigned in index order, colors
/// ascending, and a vertex may only open the next unused color, so the result
/// is the lexicographically least bad coloring. Returns nullopt when none
/// exists. Throws BoundExceeded when the node budget runs out; with threads > 1
/// the tree is split into root subtrees and the budget applies to each.
std::optional<std::vector<int>> find_bad_coloring(const Hypergraph& graph, int colors,
                                                  const SearchOptions& options = {},
                                                  SearchStats* stats = nullptr);

/// Index of the first edge whose vertices share one color.
std::optional<std::size_t> find_mono_edge(const Hypergraph& graph, std::span<const int> coloring);

}  // namespace selfdual
