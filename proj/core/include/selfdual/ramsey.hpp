#pragma once

#include <optional>
#include <vector>

#include "selfdual/enumerate.hpp"
#include "selfdual/search.hpp"

namespace selfdual {

/// One color in 0..colors-1 per element of the space, indexed in enumeration order.
struct Coloring {
  SpaceSpec space;
  int colors = 1;
  std::vector<int> assignment;
};

/// Copies F_{M,K}.(s0,j0) over vertex space F_{N,K} (or the injection /
/// surjection analogue), one edge per distinct vertex set.
struct CopyFamily {
  SpaceSpec space;  // vertices: L = N, K = K
  int M = 0;
  std::vector<SpaceElement> vertices;
  std::vector<SpaceElement> anchors;        // anchors[e] induced edge e first
  std::vector<std::vector<int>> edges;      // sorted vertex indices
  std::vector<std::size_t> copy_size;       // members before deduplication

  Hypergraph hypergraph() const { return {static_cast<int>(vertices.size()), edges}; }
};

/// Throws DomainError unless K <= M <= N.
CopyFamily copy_family(int N, int K, int M, SpaceMode mode);

struct MonoCopy {
  SpaceElement anchor;
  std::size_t edge;
  int color;
};

std::optional<MonoCopy> find_mono_copy(const Coloring& coloring, const CopyFamily& family);

/// A coloring of F_{N,K} without a monochromatic copy, or nullopt when N is a
/// witness for (K, M, colors) in this mode.
std::optional<Coloring> find_bad_coloring(int N, int K, int M, int colors, SpaceMode mode,
                                          const SearchOptions& options = {});

struct WitnessResult {
  bool found = false;
  int N = 0;                         // least witness when found, otherwise max_N
  std::optional<Coloring> last_bad;  // bad coloring at the largest failing N
  std::vector<int> failing;          // every N that admitted a bad coloring
};

/// Least N in [M, max_N] for which no bad coloring exists. Each N is decided
/// independently; monotonicity in N is not assumed.
WitnessResult min_witness_N(int K, int M, int colors, SpaceMode mode, int max_N, const SearchOptions& options = {});

}  // namespace selfdual
